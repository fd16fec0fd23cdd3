#pragma once

// Bound-state condition for H0 - a delta(x) + b delta'(x): the 3x3 secular
// determinant and the scalar reduced forms available for special cases.

#include <string_view>

#include "pointspec/greens.hpp"

namespace pointspec {

enum class SecularForm {
  FullDeterminant,
  ReducedBZero,       // 1 + aA
  ReducedBCZero,      // 1 + aA - b^2 AD
  ReducedSquareWell,  // tan(c sqrt E)/sqrt E - (b^2 - 4 pi)/(2a)
  ReducedFree,        // 1 + aA - b^2 AD with B + C = 0
  ReducedOscillator,  // b^2 alpha^2 + 2 (a/sqrt k) alpha + 4
};

std::string_view form_name(SecularForm form);

struct SecularValue {
  Complex value;
  SecularForm form = SecularForm::FullDeterminant;
  /// Set when E sits on a background pole; value is NaN then.
  bool pole_flag = false;
};

/// det [[2, -1 + (b/2)(B-C), 0], [-1, 1 + (a/2)A + (b/2)C, (b/2)A], [0, (a/2)(B+C) + bD, 1 + (b/2)(B+C)]]
SecularValue full_determinant(const PotentialModel& model, const Coupling& g, Complex E,
                              GreenConvention convention = GreenConvention::Standard);

/// Same matrix with the (0,1) entry written -1 - (b/2)(B-C). Kept for comparison only.
SecularValue printed_determinant(const PotentialModel& model, const Coupling& g, Complex E,
                                 GreenConvention convention = GreenConvention::Standard);

/// Natural reduced form for the model: SquareWell -> ReducedSquareWell,
/// Harmonic -> ReducedOscillator, Free -> ReducedFree, LinearField with b = 0
/// -> ReducedBZero. Throws InvalidFormError when none applies (SquareWell with
/// a = 0, LinearField with b != 0).
SecularValue reduced(const PotentialModel& model, const Coupling& g, Complex E,
                     GreenConvention convention = GreenConvention::Standard);

/// A specific reduced form; InvalidFormError if it does not exist for the input.
SecularValue reduced(const PotentialModel& model, const Coupling& g, Complex E, SecularForm form,
                     GreenConvention convention = GreenConvention::Standard);

}  // namespace pointspec
