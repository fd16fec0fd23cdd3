#include "pointspec/secular.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pointspec/errors.hpp"

namespace pointspec {
namespace {

const Complex kNaN{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};

SecularValue flagged(SecularForm form) { return {kNaN, form, true}; }

SecularValue determinant(const PotentialModel& model, const Coupling& g, Complex E, GreenConvention convention,
                         double sign01) {
  GreenCoefficients c;
  try {
    c = coefficients(model, E, convention);
  } catch (const PoleError&) {
    return flagged(SecularForm::FullDeterminant);
  }
  const double a = g.a;
  const double b = g.b;
  const Complex m01 = -1.0 + sign01 * (b / 2.0) * (c.B - c.C);
  const Complex m11 = 1.0 + (a / 2.0) * c.A + (b / 2.0) * c.C;
  const Complex m12 = (b / 2.0) * c.A;
  const Complex m21 = (a / 2.0) * (c.B + c.C) + b * c.D;
  const Complex m22 = 1.0 + (b / 2.0) * (c.B + c.C);
  // Cofactor expansion along the first row; m10 = -1, m20 = 0, m02 = 0.
  const Complex value = 2.0 * (m11 * m22 - m12 * m21) + m01 * m22;
  return {value, SecularForm::FullDeterminant, false};
}

bool has_vanishing_bc(const PotentialModel& model) {
  return std::holds_alternative<Harmonic>(model) || std::holds_alternative<SquareWell>(model);
}

[[noreturn]] void invalid(const std::string& why) { throw InvalidFormError(why); }

}  // namespace

std::string_view form_name(SecularForm form) {
  switch (form) {
    case SecularForm::FullDeterminant:
      return "full";
    case SecularForm::ReducedBZero:
      return "b-zero";
    case SecularForm::ReducedBCZero:
      return "bc-zero";
    case SecularForm::ReducedSquareWell:
      return "square-well";
    case SecularForm::ReducedFree:
      return "free";
    case SecularForm::ReducedOscillator:
      return "oscillator";
  }
  return "unknown";
}

SecularValue full_determinant(const PotentialModel& model, const Coupling& g, Complex E, GreenConvention convention) {
  return determinant(model, g, E, convention, 1.0);
}

SecularValue printed_determinant(const PotentialModel& model, const Coupling& g, Complex E,
                                 GreenConvention convention) {
  return determinant(model, g, E, convention, -1.0);
}

SecularValue reduced(const PotentialModel& model, const Coupling& g, Complex E, GreenConvention convention) {
  if (std::holds_alternative<SquareWell>(model)) return reduced(model, g, E, SecularForm::ReducedSquareWell, convention);
  if (std::holds_alternative<Harmonic>(model)) return reduced(model, g, E, SecularForm::ReducedOscillator, convention);
  if (std::holds_alternative<Free>(model)) return reduced(model, g, E, SecularForm::ReducedFree, convention);
  return reduced(model, g, E, SecularForm::ReducedBZero, convention);
}

SecularValue reduced(const PotentialModel& model, const Coupling& g, Complex E, SecularForm form,
                     GreenConvention convention) {
  const double a = g.a;
  const double b = g.b;
  switch (form) {
    case SecularForm::FullDeterminant:
      return full_determinant(model, g, E, convention);
    case SecularForm::ReducedBZero:
      if (b != 0.0) invalid("the 1 + aA form needs b = 0");
      break;
    case SecularForm::ReducedBCZero:
      if (!has_vanishing_bc(model)) invalid("the 1 + aA - b^2 AD form needs a background with B = C = 0");
      break;
    case SecularForm::ReducedFree:
      if (!std::holds_alternative<Free>(model)) invalid("the free-particle form needs the free background");
      break;
    case SecularForm::ReducedOscillator:
      if (!std::holds_alternative<Harmonic>(model)) invalid("the quadratic alpha form needs the harmonic background");
      break;
    case SecularForm::ReducedSquareWell:
      if (!std::holds_alternative<SquareWell>(model)) invalid("the tan form needs the square-well background");
      if (a == 0.0) {
        invalid("square well with a = 0: the reduced equation tan(c sqrt E)/sqrt E = (b^2 - 4 pi)/(2a) is meaningless");
      }
      break;
  }

  GreenCoefficients c;
  try {
    c = coefficients(model, E, convention);
  } catch (const PoleError&) {
    return flagged(form);
  }
  switch (form) {
    case SecularForm::ReducedBZero:
      return {1.0 + a * c.A, form, false};
    case SecularForm::ReducedBCZero:
    case SecularForm::ReducedFree:
      return {1.0 + a * c.A - b * b * c.A * c.D, form, false};
    case SecularForm::ReducedOscillator: {
      const double k = std::get<Harmonic>(model).stiffness;
      const Complex alpha = 2.0 * std::sqrt(k) * c.A;
      return {b * b * alpha * alpha + 2.0 * (a / std::sqrt(k)) * alpha + 4.0, form, false};
    }
    case SecularForm::ReducedSquareWell: {
      if (convention == GreenConvention::Standard) {
        const Complex ratio = 2.0 * std::numbers::pi * c.A;
        return {ratio - (b * b - 4.0 * std::numbers::pi) / (2.0 * a), form, false};
      }
      const Complex ratio = 2.0 * c.A;
      return {ratio + (4.0 + b * b) / (2.0 * a), form, false};
    }
    default:
      break;
  }
  return full_determinant(model, g, E, convention);
}

}  // namespace pointspec
