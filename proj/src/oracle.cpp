#include "pointspec/oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "pointspec/errors.hpp"
#include "pointspec/kernels.hpp"

namespace pointspec {
namespace {

using std::numbers::pi;
constexpr int kOrder = 17;
using Series = std::array<double, kOrder>;  // coefficients of m^(-t), t = 0..16

// Gamma(m + 1/2) / Gamma(m + 1) = m^(-1/2) * sum_t rho_t m^(-t).
constexpr Series kRho = {1.0,
                         -1.0 / 8.0,
                         1.0 / 128.0,
                         5.0 / 1024.0,
                         -21.0 / 32768.0,
                         -399.0 / 262144.0,
                         869.0 / 4194304.0,
                         39325.0 / 33554432.0,
                         -334477.0 / 2147483648.0,
                         -28717403.0 / 17179869184.0,
                         59697183.0 / 274877906944.0,
                         8400372435.0 / 2199023255552.0,
                         -34429291905.0 / 70368744177664.0,
                         -7199255611995.0 / 562949953421312.0,
                         14631594576045.0 / 9007199254740992.0,
                         4251206967062925.0 / 72057594037927936.0,
                         -68787420596367165.0 / 9223372036854775808.0};

// B_2k / (2k)!
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0};

Series multiply(const Series& x, const Series& y) {
  Series out{};
  for (int i = 0; i < kOrder; ++i) {
    for (int j = 0; i + j < kOrder; ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

// 1/(m + c) = m^(-1) * sum_t (-c)^t m^(-t)
Series geometric(double c) {
  Series out{};
  double p = 1.0;
  for (int t = 0; t < kOrder; ++t, p *= -c) out[t] = p;
  return out;
}

struct Tail {
  double value = 0.0;
  double last = 0.0;
};

// sum_{u = a, a+1, ...} u^(-sigma) sum_t beta_t u^(-t)
Tail tail_sum(double sigma, const Series& beta, double a) {
  Tail tail;
  for (int t = 0; t < kOrder; ++t) {
    if (beta[t] == 0.0) continue;
    const double term = beta[t] * hurwitz_zeta(sigma + t, a);
    tail.value += term;
    tail.last = std::abs(term);
  }
  return tail;
}

struct HeadSum {
  double value = 0.0;
  double magnitude = 0.0;  // sum of |terms|
};

HeadSum head_sum(const std::vector<double>& weights, const std::vector<double>& levels, double x) {
  HeadSum h;
  h.value = kernels::resolvent_sum(weights, levels, x);
  for (std::size_t i = 0; i < weights.size(); ++i) h.magnitude += std::abs(weights[i] / (levels[i] - x));
  return h;
}

void check_terms(std::size_t n_terms) {
  if (n_terms < 100) throw PreconditionError("the spectral oracle needs n_terms >= 100");
}

void check_level_distance(double E, double level) {
  if (std::abs(E - level) < 1e-3) {
    throw PreconditionError("oracle energy " + std::to_string(E) + " lies within 1e-3 of the eigenvalue " +
                            std::to_string(level));
  }
}

void check_harmonic(double k, double E) {
  // E_n = (k/2)(n + 1/2), both parities.
  const double n = std::nearbyint(2.0 * E / k - 0.5);
  for (double m : {n - 1.0, n, n + 1.0}) {
    if (m >= 0.0) check_level_distance(E, 0.5 * k * (m + 0.5));
  }
}

void check_well(double c, double E) {
  if (E <= 0.0) return;
  const double n = std::nearbyint(2.0 * c * std::sqrt(E) / pi);
  for (double m : {n - 1.0, n, n + 1.0}) {
    if (m >= 1.0) check_level_distance(E, std::pow(m * pi / (2.0 * c), 2));
  }
}

void finish(SpectralSumReport& r, double head_magnitude, const Tail& tail) {
  const double rounding = static_cast<double>(r.n_terms) * std::numeric_limits<double>::epsilon() *
                          (head_magnitude + std::abs(tail.value));
  r.tail_estimate = tail.last + rounding;
  r.ratio = r.closed_form / r.spectral_sum;
  if (!(r.tail_estimate < 1e-8 * std::abs(r.spectral_sum))) {
    r.warning = "tail estimate exceeds 1e-8 of the sum; increase n_terms";
  }
}

}  // namespace

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta needs s > 1");
  // Euler-Maclaurin: shift the base until the correction series converges quickly.
  double head = 0.0;
  while (a < 10.0 + s) {
    head += std::pow(a, -s);
    a += 1.0;
  }
  double sum = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double rising = s;                     // s (s+1) ... (s + 2k - 2)
  double power = std::pow(a, -s - 1.0);  // a^(-s - 2k + 1)
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    const double term = kBernoulliOverFactorial[k] * rising * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    power /= a * a;
  }
  return head + sum;
}

SpectralSumReport spectral_A(const PotentialModel& model, double E, std::size_t n_terms, GreenConvention convention) {
  validate(model);
  check_terms(n_terms);
  SpectralSumReport r;
  r.model = model_name(model);
  r.E = E;
  r.n_terms = n_terms;
  const double N = static_cast<double>(n_terms);

  if (const auto* h = std::get_if<Harmonic>(&model)) {
    const double k = h->stiffness;
    check_harmonic(k, E);
    // Even modes n = 2m: E_2m = k(m + 1/4), phi_2m(0)^2 = sqrt(k)/(2 sqrt(pi)) r_m,
    // r_m = (2m-1)!!/(2m)!! by the ratio recurrence.
    const double c = 0.25 - E / k;
    std::vector<double> weights(n_terms), levels(n_terms);
    double rm = 1.0;
    for (std::size_t m = 0; m < n_terms; ++m) {
      if (m > 0) rm *= (2.0 * m - 1.0) / (2.0 * m);
      weights[m] = rm;
      levels[m] = static_cast<double>(m);
    }
    const HeadSum head = head_sum(weights, levels, -c);
    // r_m / (m + c) ~ m^(-3/2) sum rho * geometric(c) / sqrt(pi)
    Tail tail = tail_sum(1.5, multiply(kRho, geometric(c)), N);
    tail.value /= std::sqrt(pi);
    tail.last /= std::sqrt(pi);
    const double scale = std::sqrt(k) / (2.0 * std::sqrt(pi) * k);
    r.spectral_sum = scale * (head.value + tail.value);
    r.closed_form = coefficients(model, E, convention).A.real();
    finish(r, scale * head.magnitude, {scale * tail.value, scale * tail.last});
    return r;
  }
  if (const auto* w = std::get_if<SquareWell>(&model)) {
    const double c = w->half_width;
    check_well(c, E);
    // Cosine modes n = 2m+1: phi(0)^2 = 1/c, E_n = (n pi/(2c))^2.
    const double q = E * std::pow(2.0 * c / pi, 2);
    std::vector<double> weights(n_terms, 1.0), levels(n_terms);
    for (std::size_t m = 0; m < n_terms; ++m) levels[m] = std::pow(2.0 * m + 1.0, 2);
    const HeadSum head = head_sum(weights, levels, q);
    // 1/((2m+1)^2 - q) = sum_j q^j 4^(-1-j) (m + 1/2)^(-2-2j)
    Series beta{};
    double p = 0.25;
    for (int j = 0; 2 * j < kOrder; ++j, p *= q / 4.0) beta[2 * j] = p;
    const Tail tail = tail_sum(2.0, beta, N + 0.5);
    const double scale = 4.0 * c / (pi * pi);
    r.spectral_sum = scale * (head.value + tail.value);
    r.closed_form = coefficients(model, E, convention).A.real();
    finish(r, scale * head.magnitude, {scale * tail.value, scale * tail.last});
    return r;
  }
  throw DomainError("the spectral oracle covers the harmonic and square-well backgrounds only");
}

SpectralSumReport spectral_D_shift(const PotentialModel& model, double E, double E_ref, std::size_t n_terms,
                                   GreenConvention convention) {
  validate(model);
  check_terms(n_terms);
  SpectralSumReport r;
  r.model = model_name(model);
  r.quantity = "D-shift";
  r.E = E;
  r.E_ref = E_ref;
  r.n_terms = n_terms;
  const double N = static_cast<double>(n_terms);

  if (const auto* h = std::get_if<Harmonic>(&model)) {
    const double k = h->stiffness;
    check_harmonic(k, E);
    check_harmonic(k, E_ref);
    // Odd modes n = 2m+1: E = k(m + 3/4), phi'(0)^2 = 2(2m+1) r_m / (sqrt(pi) s^3), s = 2/sqrt(k).
    const double s = 2.0 / std::sqrt(k);
    std::vector<double> weights(n_terms), levels(n_terms);
    double rm = 1.0;
    for (std::size_t m = 0; m < n_terms; ++m) {
      if (m > 0) rm *= (2.0 * m - 1.0) / (2.0 * m);
      weights[m] = 2.0 * (2.0 * m + 1.0) * rm / (std::sqrt(pi) * s * s * s);
      levels[m] = k * (m + 0.75);
    }
    const HeadSum at = head_sum(weights, levels, E);
    const HeadSum ref = head_sum(weights, levels, E_ref);
    // (2m+1) rho(m) m^(-1/2) = m^(1/2) sum (2 rho_t + rho_(t-1)) m^(-t)
    Series gamma{};
    for (int t = 0; t < kOrder; ++t) gamma[t] = 2.0 * kRho[t] + (t > 0 ? kRho[t - 1] : 0.0);
    const Series g1 = geometric(0.75 - E / k);
    const Series g0 = geometric(0.75 - E_ref / k);
    Series diff{};
    for (int t = 0; t < kOrder; ++t) diff[t] = g1[t] - g0[t];
    const double scale = 2.0 / (pi * s * s * s * k);
    Tail tail = tail_sum(0.5, multiply(gamma, diff), N);
    tail.value *= scale;
    tail.last *= scale;
    r.spectral_sum = (at.value - ref.value) + tail.value;
    r.closed_form =
        (coefficients(model, E, convention).D - coefficients(model, E_ref, convention).D).real();
    finish(r, at.magnitude + ref.magnitude, tail);
    return r;
  }
  if (const auto* w = std::get_if<SquareWell>(&model)) {
    const double c = w->half_width;
    check_well(c, E);
    check_well(c, E_ref);
    // Sine modes n = 2m: phi'(0)^2 = (m pi/c)^2 / c, E = (m pi/c)^2.
    std::vector<double> weights(n_terms), levels(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) {
      const double L = std::pow((i + 1.0) * pi / c, 2);
      weights[i] = L / c;
      levels[i] = L;
    }
    const HeadSum at = head_sum(weights, levels, E);
    const HeadSum ref = head_sum(weights, levels, E_ref);
    const double p1 = E * std::pow(c / pi, 2);
    const double p0 = E_ref * std::pow(c / pi, 2);
    Series beta{};
    double x1 = p1, x0 = p0;
    for (int j = 1; 2 * j < kOrder; ++j, x1 *= p1, x0 *= p0) beta[2 * j] = (x1 - x0) / c;
    const Tail tail = tail_sum(0.0, beta, N + 1.0);
    r.spectral_sum = (at.value - ref.value) + tail.value;
    r.closed_form =
        (coefficients(model, E, convention).D - coefficients(model, E_ref, convention).D).real();
    finish(r, at.magnitude + ref.magnitude, tail);
    return r;
  }
  throw DomainError("the spectral oracle covers the harmonic and square-well backgrounds only");
}

}  // namespace pointspec
