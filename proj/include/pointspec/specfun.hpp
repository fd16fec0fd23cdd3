#pragma once

// Double-precision special functions needed by the Green coefficients:
// real Airy functions with derivatives, complex log-Gamma, and the
// oscillator Gamma ratio Gamma(1/4 - w) / Gamma(3/4 - w).

#include <complex>

namespace pointspec {

using Complex = std::complex<double>;

struct AiryQuartet {
  double ai = 0.0;
  double bi = 0.0;
  double ai_prime = 0.0;
  double bi_prime = 0.0;
};

/// Exponentially scaled Airy values. For z > 0, `values.ai`/`ai_prime` carry a
/// factor exp(zeta) and `values.bi`/`bi_prime` a factor exp(-zeta), with
/// zeta = 2/3 z^(3/2); for z <= 0 zeta is 0 and the values are unscaled.
/// Products Ai*Bi, Ai*Bi', ... are therefore exact for any finite z.
struct ScaledAiry {
  AiryQuartet values;
  double zeta = 0.0;
};

/// Largest |z| accepted by airy(); Bi overflows a little beyond z = 104.
inline constexpr double kAiryRangeLimit = 100.0;

/// Distance to a pole below which Gamma arguments are treated as singular.
inline constexpr double kPoleTolerance = 1e-9;

/// Ai, Bi and their derivatives. Throws RangeError (threshold kAiryRangeLimit)
/// for |z| > 100 and DomainError for non-finite z.
AiryQuartet airy(double z);

/// Scaled variant valid for any finite z.
ScaledAiry airy_scaled(double z);

/// Log-Gamma on the branch continuous from the positive real axis
/// (cut along the negative real axis, approached from above). Throws
/// PoleError with index n when z is within kPoleTolerance of -n.
Complex log_gamma(Complex z);

/// Gamma(1/4 - w) / Gamma(3/4 - w), evaluated in log space. Exactly zero at
/// w = 3/4 + n; PoleError with index n at w = 1/4 + n.
Complex gamma_ratio(Complex w);

}  // namespace pointspec
