#include "pointspec/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pointspec/errors.hpp"

namespace pointspec {
namespace {

using std::numbers::pi;

// Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3),
// Bi(0) = 3^(-1/6)/Gamma(2/3), Bi'(0) = 3^(1/6)/Gamma(1/3).
constexpr double kAi0 = 0.35502805388781723926;
constexpr double kAip0 = -0.25881940379280679841;
constexpr double kBi0 = 0.61492662744600073515;
constexpr double kBip0 = 0.44828835735382635791;

// Beyond this |z| the asymptotic series reach full double precision
// (smallest term ~ exp(-2 zeta) ~ 5e-19 at |z| = 10).
constexpr double kAsymptoticStart = 10.0;
constexpr int kAnchorSpan = 10;

struct Solution {
  double y;
  double yp;
};

// Advances y'' = z y from z0 to z0 + h with a single Taylor expansion about z0.
// Coefficients obey c[n+2] = (z0 c[n] + c[n-1]) / ((n+1)(n+2)).
Solution taylor_step(double z0, Solution s, double h) {
  double c_prev = 0.0;  // c[n-1]
  double c_n = s.y;
  double c_next = s.yp;  // c[n+1]
  double hn = 1.0;       // h^n
  double y = 0.0;
  double yp = 0.0;
  for (int n = 0; n < 400; ++n) {
    const double term = c_n * hn;
    y += term;
    if (n > 0) yp += n * c_n * (hn / h);
    const double c_after = (z0 * c_n + c_prev) / ((n + 1.0) * (n + 2.0));
    c_prev = c_n;
    c_n = c_next;
    c_next = c_after;
    hn *= h;
    if (n > 4) {
      const double scale = std::abs(y) + std::abs(yp * h) + 1e-300;
      const double tail = std::abs(c_n * hn) + std::abs(c_next * hn * h);
      if (tail < 1e-18 * scale) break;
    }
  }
  return {y, yp};
}

Solution advance(double from, Solution s, double to) {
  // Half-unit substeps keep every series short and well conditioned.
  const int pieces = static_cast<int>(std::ceil(std::abs(to - from) / 0.5));
  const double h = (to - from) / pieces;
  double z = from;
  for (int i = 0; i < pieces; ++i) {
    s = taylor_step(z, s, h);
    z = from + (i + 1) * h;
  }
  return s;
}

struct AsymptoticSums {
  double even_u = 0.0, odd_u = 0.0;  // sum (-1)^k u_{2k}/zeta^{2k}, sum (-1)^k u_{2k+1}/zeta^{2k+1}
  double even_v = 0.0, odd_v = 0.0;
  double alt_u = 0.0, all_u = 0.0;   // sum (-1)^k u_k/zeta^k, sum u_k/zeta^k
  double alt_v = 0.0, all_v = 0.0;
};

// u_k = (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k) u_{k-1},  v_k = -(6k+1)/(6k-1) u_k.
AsymptoticSums asymptotic_sums(double zeta) {
  AsymptoticSums s;
  double u = 1.0;
  double power = 1.0;  // zeta^-k
  double previous = INFINITY;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
      power /= zeta;
    }
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    const double tu = u * power;
    const double tv = v * power;
    const double magnitude = std::abs(tu) + std::abs(tv);
    if (magnitude > previous) break;  // past the smallest term
    previous = magnitude;
    const double alt = (k % 2 == 0) ? 1.0 : -1.0;
    s.alt_u += alt * tu;
    s.all_u += tu;
    s.alt_v += alt * tv;
    s.all_v += tv;
    const double pair_sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      s.even_u += pair_sign * tu;
      s.even_v += pair_sign * tv;
    } else {
      s.odd_u += pair_sign * tu;
      s.odd_v += pair_sign * tv;
    }
    if (magnitude < 1e-18) break;
  }
  return s;
}

ScaledAiry asymptotic_positive(double z) {
  const double root = std::sqrt(z);
  const double zeta = 2.0 / 3.0 * z * root;
  const double quarter = std::sqrt(root);
  const double sqrt_pi = std::sqrt(pi);
  const AsymptoticSums s = asymptotic_sums(zeta);
  ScaledAiry out;
  out.zeta = zeta;
  out.values.ai = s.alt_u / (2.0 * sqrt_pi * quarter);
  out.values.ai_prime = -quarter * s.alt_v / (2.0 * sqrt_pi);
  out.values.bi = s.all_u / (sqrt_pi * quarter);
  out.values.bi_prime = quarter * s.all_v / sqrt_pi;
  return out;
}

AiryQuartet asymptotic_negative(double z) {
  const double x = -z;
  const double root = std::sqrt(x);
  const double zeta = 2.0 / 3.0 * x * root;
  const double quarter = std::sqrt(root);
  const double sqrt_pi = std::sqrt(pi);
  const AsymptoticSums s = asymptotic_sums(zeta);
  // cos/sin(zeta - pi/4) without rounding pi/4 into a large argument.
  const double c = std::cos(zeta);
  const double sn = std::sin(zeta);
  const double cm = (c + sn) / std::numbers::sqrt2;
  const double sm = (sn - c) / std::numbers::sqrt2;
  AiryQuartet q;
  q.ai = (cm * s.even_u + sm * s.odd_u) / (sqrt_pi * quarter);
  q.ai_prime = quarter * (sm * s.even_v - cm * s.odd_v) / sqrt_pi;
  q.bi = (-sm * s.even_u + cm * s.odd_u) / (sqrt_pi * quarter);
  q.bi_prime = quarter * (cm * s.even_v + sm * s.odd_v) / sqrt_pi;
  return q;
}

// Unscaled (Ai, Ai', Bi, Bi') at the integers -10..10. Bi and the negative
// side are stepped out from z = 0; Ai on z > 0 is stepped inward from the
// asymptotic value at z = 10, the direction in which it grows.
struct AnchorTable {
  std::array<Solution, 2 * kAnchorSpan + 1> ai;
  std::array<Solution, 2 * kAnchorSpan + 1> bi;

  AnchorTable() {
    ai[kAnchorSpan] = {kAi0, kAip0};
    bi[kAnchorSpan] = {kBi0, kBip0};
    for (int j = 1; j <= kAnchorSpan; ++j) {
      ai[kAnchorSpan - j] = advance(1.0 - j, ai[kAnchorSpan - j + 1], -static_cast<double>(j));
      bi[kAnchorSpan - j] = advance(1.0 - j, bi[kAnchorSpan - j + 1], -static_cast<double>(j));
      bi[kAnchorSpan + j] = advance(j - 1.0, bi[kAnchorSpan + j - 1], static_cast<double>(j));
    }
    const ScaledAiry top = asymptotic_positive(kAsymptoticStart);
    const double decay = std::exp(-top.zeta);
    ai[2 * kAnchorSpan] = {top.values.ai * decay, top.values.ai_prime * decay};
    for (int j = kAnchorSpan - 1; j >= 1; --j) {
      ai[kAnchorSpan + j] = advance(j + 1.0, ai[kAnchorSpan + j + 1], static_cast<double>(j));
    }
  }
};

const AnchorTable& anchors() {
  static const AnchorTable table;
  return table;
}

AiryQuartet airy_interior(double z) {
  const double j = std::nearbyint(z);
  const double h = z - j;
  const auto idx = static_cast<std::size_t>(j + kAnchorSpan);
  const AnchorTable& t = anchors();
  const Solution a = h == 0.0 ? t.ai[idx] : taylor_step(j, t.ai[idx], h);
  const Solution b = h == 0.0 ? t.bi[idx] : taylor_step(j, t.bi[idx], h);
  return {a.y, b.y, a.yp, b.yp};
}

// Lanczos approximation, g = 7, nine terms (Godfrey's coefficient set).
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

Complex lanczos_log_gamma(Complex z) {
  const Complex shifted = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (shifted + static_cast<double>(i));
  const Complex t = shifted + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (shifted + 0.5) * std::log(t) - t + std::log(series);
}

// Branch of log(sin(pi z)) analytic in the upper half plane and real on (0, 1):
//   -i pi z - ln 2 + i pi/2 + log(1 - exp(2 pi i z)).
Complex log_sin_pi_upper(Complex z) {
  const double frac = z.real() - std::nearbyint(z.real());
  const Complex unit = std::exp(Complex(-2.0 * pi * z.imag(), 2.0 * pi * frac));
  return Complex(pi * z.imag(), -pi * z.real()) - std::log(2.0) + Complex(0.0, pi / 2.0) +
         std::log(1.0 - unit);
}

// cot(pi x) after reducing Re x modulo 1; stable for any Im x.
Complex cot_pi(Complex x) {
  const double re = x.real() - std::nearbyint(x.real());
  const double two_re = 2.0 * pi * re;
  const double two_im = 2.0 * pi * x.imag();
  const double e = std::exp(-std::abs(two_im));
  const double sign = two_im < 0.0 ? -1.0 : 1.0;
  const double den = 1.0 + e * e - 2.0 * e * std::cos(two_re);
  return Complex(2.0 * e * std::sin(two_re) / den, -sign * (1.0 - e * e) / den);
}

bool near_integer(Complex z, double& n) {
  n = std::nearbyint(z.real());
  return std::abs(z.imag()) < kPoleTolerance && std::abs(z.real() - n) < kPoleTolerance;
}

}  // namespace

AiryQuartet airy(double z) {
  if (!std::isfinite(z)) throw DomainError("airy: argument is not finite");
  if (std::abs(z) > kAiryRangeLimit) {
    std::ostringstream msg;
    msg << "airy: |z| = " << std::abs(z) << " exceeds the supported range " << kAiryRangeLimit
        << " (Bi overflows near z = 104)";
    throw RangeError(msg.str(), kAiryRangeLimit);
  }
  const ScaledAiry s = airy_scaled(z);
  if (s.zeta == 0.0) return s.values;
  const double grow = std::exp(s.zeta);
  const double decay = std::exp(-s.zeta);
  return {s.values.ai * decay, s.values.bi * grow, s.values.ai_prime * decay, s.values.bi_prime * grow};
}

ScaledAiry airy_scaled(double z) {
  if (!std::isfinite(z)) throw DomainError("airy_scaled: argument is not finite");
  if (z >= kAsymptoticStart) return asymptotic_positive(z);
  if (z <= -kAsymptoticStart) return {asymptotic_negative(z), 0.0};
  AiryQuartet q = airy_interior(z);
  if (z <= 0.0) return {q, 0.0};
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double grow = std::exp(zeta);
  const double decay = std::exp(-zeta);
  q.ai *= grow;
  q.ai_prime *= grow;
  q.bi *= decay;
  q.bi_prime *= decay;
  return {q, zeta};
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("log_gamma: argument is not finite");
  double n = 0.0;
  if (z.real() < 0.5 && near_integer(z, n) && n <= 0.0) {
    std::ostringstream msg;
    msg << "log_gamma: pole at z = " << n;
    throw PoleError(msg.str(), static_cast<long>(-n));
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection, computed in the closed upper half plane; the lower half
  // follows from log_gamma(conj z) = conj(log_gamma(z)).
  const bool lower = z.imag() < 0.0;
  const Complex w = lower ? std::conj(z) : z;
  const Complex value = std::log(pi) - log_sin_pi_upper(w) - lanczos_log_gamma(1.0 - w);
  return lower ? std::conj(value) : value;
}

Complex gamma_ratio(Complex w) {
  double n = 0.0;
  if (near_integer(w - 0.25, n) && n >= 0.0) {
    std::ostringstream msg;
    msg << "gamma_ratio: numerator pole at w = 1/4 + " << n;
    throw PoleError(msg.str(), static_cast<long>(n));
  }
  if (near_integer(w - 0.75, n) && n >= 0.0) return 0.0;
  if (w.real() <= 0.0) return std::exp(log_gamma(0.25 - w) - log_gamma(0.75 - w));
  // Gamma(1/4-w)/Gamma(3/4-w) = cot(pi(1/4-w)) Gamma(1/4+w)/Gamma(3/4+w).
  return cot_pi(0.25 - w) * std::exp(log_gamma(0.25 + w) - log_gamma(0.75 + w));
}

}  // namespace pointspec
