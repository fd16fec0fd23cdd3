#include "pointspec/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace pointspec::kernels {

namespace scalar {

void sign_changes(std::span<const double> v, std::vector<std::size_t>& out) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if ((v[i] < 0.0 && v[i + 1] > 0.0) || (v[i] > 0.0 && v[i + 1] < 0.0)) out.push_back(i);
  }
}

double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] / (levels[i] - x);
  return sum;
}

}  // namespace scalar

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa chosen = [] {
    const char* forced = std::getenv("PS_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::Scalar;
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
  }();
  return chosen;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

void sign_changes(std::span<const double> v, std::vector<std::size_t>& out, Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2:
      if (isa_available(Isa::Avx2)) return avx2::sign_changes(v, out);
      break;
#endif
#if defined(__aarch64__)
    case Isa::Neon:
      return neon::sign_changes(v, out);
#endif
    default:
      break;
  }
  scalar::sign_changes(v, out);
}

void sign_changes(std::span<const double> v, std::vector<std::size_t>& out) {
  sign_changes(v, out, active_isa());
}

double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x, Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2:
      if (isa_available(Isa::Avx2)) return avx2::resolvent_sum(weights, levels, x);
      break;
#endif
#if defined(__aarch64__)
    case Isa::Neon:
      return neon::resolvent_sum(weights, levels, x);
#endif
    default:
      break;
  }
  return scalar::resolvent_sum(weights, levels, x);
}

double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x) {
  return resolvent_sum(weights, levels, x, active_isa());
}

}  // namespace pointspec::kernels
