#include "pointspec/greens.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pointspec/errors.hpp"

namespace pointspec {
namespace {

using std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    std::ostringstream msg;
    msg << what << " must be finite and > 0 (got " << value << ")";
    throw DomainError(msg.str());
  }
}

bool near(double E, double pole) {
  return std::abs(E - pole) < kBackgroundPoleTolerance * std::max(1.0, std::abs(E));
}

[[noreturn]] void background_pole(const std::string& model, double pole, long index) {
  std::ostringstream msg;
  msg.precision(17);
  msg << model << ": energy sits on the unperturbed level E = " << pole << " (index " << index << ")";
  throw PoleError(msg.str(), index);
}

double real_energy(Complex E, const char* model) {
  if (E.imag() != 0.0) {
    std::ostringstream msg;
    msg << model << " coefficients are defined for real energies only";
    throw DomainError(msg.str());
  }
  return E.real();
}

GreenCoefficients free_coefficients(Complex E) {
  if (std::abs(E) < kBackgroundPoleTolerance) background_pole("free", 0.0, 0);
  // Branch with Im sqrt(E) > 0; on the positive axis the outgoing root.
  Complex k = std::sqrt(E);
  if (k.imag() < 0.0 || (k.imag() == 0.0 && k.real() < 0.0)) k = -k;
  const Complex i(0.0, 1.0);
  return {1.0 / (2.0 * i * k), 0.5, -0.5, -i * k / 2.0};
}

GreenCoefficients linear_field_coefficients(const LinearField& m, Complex E) {
  const double energy = real_energy(E, "linear-field");
  const double cube_root = std::cbrt(m.field);
  const double z = -energy / (cube_root * cube_root);
  const AiryQuartet q = airy_scaled(z).values;
  return {-pi / cube_root * q.ai * q.bi, -pi * q.ai * q.bi_prime, -pi * q.ai_prime * q.bi,
          -pi * cube_root * q.ai_prime * q.bi_prime};
}

GreenCoefficients harmonic_coefficients(const Harmonic& m, Complex E) {
  const double k = m.stiffness;
  const double n = std::nearbyint(E.real() / k - 0.25);
  if (n >= 0.0 && E.imag() == 0.0 && near(E.real(), k * (n + 0.25))) {
    background_pole("harmonic", k * (n + 0.25), static_cast<long>(n));
  }
  const Complex A = gamma_ratio(E / k) / (2.0 * std::sqrt(k));
  return {A, 0.0, 0.0, -k * A};
}

// tan(x)/x and x/tan(x) as series in u = x^2 (valid for either sign of u).
double tan_over_x(double u) { return 1.0 + u * (1.0 / 3.0 + u * (2.0 / 15.0 + u * 17.0 / 315.0)); }
double x_over_tan(double u) { return 1.0 - u * (1.0 / 3.0 + u * (1.0 / 45.0 + u * 2.0 / 945.0)); }

GreenCoefficients square_well_coefficients(const SquareWell& m, Complex E, GreenConvention convention) {
  const double energy = real_energy(E, "square-well");
  const double c = m.half_width;
  if (energy > 0.0) {
    const double n = std::nearbyint(2.0 * c * std::sqrt(energy) / pi);
    const double level = std::pow(n * pi / (2.0 * c), 2);
    if (n >= 1.0 && near(energy, level)) background_pole("square-well", level, static_cast<long>(n));
  }
  // ratio = tan(c sqrt E)/sqrt E, inverse = sqrt E / tan(c sqrt E); both real for E < 0.
  double ratio = 0.0;
  double inverse = 0.0;
  const double u = c * c * energy;
  if (std::abs(u) < 1e-4) {
    ratio = c * tan_over_x(u);
    inverse = x_over_tan(u) / c;
  } else if (energy > 0.0) {
    const double s = std::sqrt(energy);
    const double t = std::tan(c * s);
    ratio = t / s;
    inverse = s / t;
  } else {
    const double q = std::sqrt(-energy);
    const double t = std::tanh(c * q);
    ratio = t / q;
    inverse = q / t;
  }
  if (convention == GreenConvention::Standard) {
    return {ratio / (2.0 * pi), 0.0, 0.0, inverse / 2.0};
  }
  return {ratio / 2.0, 0.0, 0.0, -inverse / 2.0};
}

}  // namespace

void validate(const PotentialModel& model) {
  std::visit(Overloaded{[](const Free&) {}, [](const LinearField& m) { require_positive(m.field, "field F"); },
                        [](const Harmonic& m) { require_positive(m.stiffness, "stiffness k"); },
                        [](const SquareWell& m) { require_positive(m.half_width, "half-width c"); }},
             model);
}

std::string model_name(const PotentialModel& model) {
  return std::visit(Overloaded{[](const Free&) { return std::string("free"); },
                               [](const LinearField&) { return std::string("linear"); },
                               [](const Harmonic&) { return std::string("harmonic"); },
                               [](const SquareWell&) { return std::string("well"); }},
                    model);
}

EnergyPoint energy_point(const PotentialModel& model, Complex E) {
  EnergyPoint p{E, std::nullopt};
  if (const auto* lf = std::get_if<LinearField>(&model)) {
    const double cube_root = std::cbrt(lf->field);
    p.z = -E.real() / (cube_root * cube_root);
  }
  return p;
}

GreenCoefficients coefficients(const PotentialModel& model, Complex E, GreenConvention convention) {
  validate(model);
  if (!std::isfinite(E.real()) || !std::isfinite(E.imag())) throw DomainError("energy is not finite");
  return std::visit(Overloaded{[&](const Free&) { return free_coefficients(E); },
                               [&](const LinearField& m) { return linear_field_coefficients(m, E); },
                               [&](const Harmonic& m) { return harmonic_coefficients(m, E); },
                               [&](const SquareWell& m) { return square_well_coefficients(m, E, convention); }},
                    model);
}

std::vector<double> singular_energies(const PotentialModel& model, double lo, double hi) {
  std::vector<double> out;
  if (!(lo <= hi)) return out;
  std::visit(Overloaded{[&](const Free&) {
                          if (lo <= 0.0 && 0.0 <= hi) out.push_back(0.0);
                        },
                        [&](const LinearField&) {},
                        [&](const Harmonic& m) {
                          const double first = std::max(0.0, std::ceil(lo / m.stiffness - 0.25));
                          for (double n = first; m.stiffness * (n + 0.25) <= hi; n += 1.0) {
                            out.push_back(m.stiffness * (n + 0.25));
                          }
                        },
                        [&](const SquareWell& m) {
                          const double step = pi / (2.0 * m.half_width);
                          const double first = lo > 0.0 ? std::max(1.0, std::ceil(std::sqrt(lo) / step)) : 1.0;
                          for (double n = first; std::pow(n * step, 2) <= hi; n += 1.0) {
                            out.push_back(std::pow(n * step, 2));
                          }
                        }},
             model);
  return out;
}

}  // namespace pointspec
