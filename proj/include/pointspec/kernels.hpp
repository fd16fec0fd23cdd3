#pragma once

// Data-parallel inner loops: sign-change detection over sampled secular
// values and resolvent partial sums for the spectral oracle. Each kernel has
// a scalar reference and vector variants; the variant is chosen at runtime.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace pointspec::kernels {

enum class Isa { Scalar, Avx2, Neon };

/// Best variant supported by this CPU. PS_SIMD=scalar in the environment
/// forces the scalar reference.
Isa active_isa();
std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

/// Appends every i with v[i] and v[i+1] of strictly opposite sign. Zeros and
/// NaNs never form a sign change.
void sign_changes(std::span<const double> v, std::vector<std::size_t>& out, Isa isa);
void sign_changes(std::span<const double> v, std::vector<std::size_t>& out);

/// sum_i weights[i] / (levels[i] - x).
double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x, Isa isa);
double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x);

namespace scalar {
void sign_changes(std::span<const double> v, std::vector<std::size_t>& out);
double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void sign_changes(std::span<const double> v, std::vector<std::size_t>& out);
double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void sign_changes(std::span<const double> v, std::vector<std::size_t>& out);
double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x);
}  // namespace neon
#endif

}  // namespace pointspec::kernels
