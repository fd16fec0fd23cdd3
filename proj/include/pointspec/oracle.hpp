#pragma once

// Eigenfunction-expansion check of the closed-form Green coefficients:
// G0(0, 0; E) = sum_n |phi_n(0)|^2 / (E_n - E) for the harmonic and
// square-well backgrounds. Test-time only; the solver never calls it.

#include <cstddef>
#include <optional>
#include <string>

#include "pointspec/greens.hpp"

namespace pointspec {

struct SpectralSumReport {
  std::string model;
  /// "A", or "D-shift" for D(E) - D(E_ref).
  std::string quantity = "A";
  double E = 0.0;
  std::optional<double> E_ref;
  double closed_form = 0.0;
  double spectral_sum = 0.0;
  std::size_t n_terms = 0;
  double tail_estimate = 0.0;
  double ratio = 0.0;  // closed_form / spectral_sum
  std::string warning;
};

inline constexpr std::size_t kDefaultOracleTerms = 4096;

/// Hurwitz zeta sum_{m>=0} (m + a)^(-s) for s > 1, a >= 10.
double hurwitz_zeta(double s, double a);

/// Spectral sum for A at real E. Throws PreconditionError when E lies within
/// 1e-3 of an eigenvalue or n_terms < 100, DomainError for other backgrounds.
SpectralSumReport spectral_A(const PotentialModel& model, double E, std::size_t n_terms = kDefaultOracleTerms,
                             GreenConvention convention = GreenConvention::Standard);

/// The divergent sum for D only converges in differences; compares
/// D(E) - D(E_ref) from the odd-mode derivatives with the closed form.
SpectralSumReport spectral_D_shift(const PotentialModel& model, double E, double E_ref,
                                   std::size_t n_terms = kDefaultOracleTerms,
                                   GreenConvention convention = GreenConvention::Standard);

}  // namespace pointspec
