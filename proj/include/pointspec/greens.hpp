#pragma once

// Boundary values at the origin of the unperturbed Green function G0(x, x', E)
// and its first derivatives, for each exactly solvable background. Units are
// hbar = 2m = 1 throughout.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pointspec/specfun.hpp"

namespace pointspec {

struct Free {};
/// V0(x) = -F x.
struct LinearField {
  double field = 1.0;
};
/// V0(x) = k^2 x^2 / 16.
struct Harmonic {
  double stiffness = 1.0;
};
/// Infinite walls at |x| = c.
struct SquareWell {
  double half_width = 1.0;
};

using PotentialModel = std::variant<Free, LinearField, Harmonic, SquareWell>;

/// Strengths of the point interaction -a delta(x) + b delta'(x).
struct Coupling {
  double a = 0.0;
  double b = 0.0;
};

/// A = G0(0+-, 0), B = d/dx' G0(0+, 0), C = d/dx' G0(0-, 0), D = d2/dxdx' G0(0+-, 0).
struct GreenCoefficients {
  Complex A;
  Complex B;
  Complex C;
  Complex D;
};

/// `Standard` is the default square-well closed form (A carries 1/(2 pi sqrt E));
/// `Spectral` uses the form consistent with the eigenfunction expansion
/// (A = tan(c sqrt E)/(2 sqrt E), D = -sqrt E/(2 tan(c sqrt E))). Other
/// backgrounds are identical under both.
enum class GreenConvention { Standard, Spectral };

struct EnergyPoint {
  Complex E;
  std::optional<double> z;  // -E/F^(2/3) for LinearField
};

/// Relative distance |E - E_pole| < kBackgroundPoleTolerance * max(1, |E|) flags a pole.
inline constexpr double kBackgroundPoleTolerance = 1e-9;

/// Throws DomainError unless the model's parameter is finite and strictly positive.
void validate(const PotentialModel& model);

std::string model_name(const PotentialModel& model);

EnergyPoint energy_point(const PotentialModel& model, Complex E);

/// Closed-form coefficients. Throws PoleError at background eigenvalues
/// (oscillator even levels, both parities of the well, E = 0 for Free) and
/// DomainError for complex E on the LinearField and SquareWell backgrounds.
GreenCoefficients coefficients(const PotentialModel& model, Complex E,
                               GreenConvention convention = GreenConvention::Standard);

/// Real energies in [lo, hi] at which coefficients() is singular, ascending.
std::vector<double> singular_energies(const PotentialModel& model, double lo, double hi);

}  // namespace pointspec
