#pragma once

// Root finding on the secular function: real bound and quasibound states by
// pole-aware scanning plus bisection, oscillator resonances by complex
// Newton iteration, closed-form thresholds, and parameter sweeps.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pointspec/greens.hpp"
#include "pointspec/secular.hpp"

namespace pointspec {

enum class RootKind { BoundState, QuasiboundState, Resonance };

std::string_view kind_name(RootKind kind);

struct EnergyRoot {
  Complex E;
  double residual = 0.0;
  RootKind kind = RootKind::BoundState;
  std::optional<std::pair<double, double>> bracket;
  int iterations = 0;
};

struct ScanWindow {
  double E_min = -50.0;
  double E_max = 50.0;
  double step = 0.025;
  bool pole_split = true;
};

struct RootOptions {
  GreenConvention convention = GreenConvention::Standard;
  /// Secular function whose sign changes are scanned; residuals refer to it.
  SecularForm form = SecularForm::FullDeterminant;
  /// Accepted roots satisfy |secular| < residual_factor * max(1, |E|).
  double residual_factor = 1e-10;
  /// Upper bound on samples per pole-free segment.
  std::size_t max_samples = 400000;
};

/// [-50, 50] for LinearField and Harmonic, (-10 (a/c)^2, (20 pi/c)^2) for
/// SquareWell, [-(a^2/4 + 1), 0] for Free; roughly 4000 uniform steps.
ScanWindow default_window(const PotentialModel& model, const Coupling& g);

/// All sign-change roots in the window, sorted by energy. Throws
/// PreconditionError for an invalid window or when no two adjacent samples
/// can be evaluated.
std::vector<EnergyRoot> find_real_roots(const PotentialModel& model, const Coupling& g, const ScanWindow& window,
                                        const RootOptions& options = {});

/// The negative-energy square-well root, searched over all E < 0 (not
/// limited to a window). Empty when there is none.
std::optional<EnergyRoot> squarewell_negative_root(const SquareWell& well, const Coupling& g,
                                                   GreenConvention convention = GreenConvention::Standard);

struct ResonanceSearch {
  std::vector<EnergyRoot> roots;
  std::vector<std::string> failures;
};

/// n_pairs conjugate pairs of complex roots for the harmonic background above
/// threshold (b^2 > a^2/(4k)). Pairs ascend in Re E, Im E > 0 member first.
/// Throws DomainError at or below threshold.
ResonanceSearch find_resonances(double k, const Coupling& g, int n_pairs);

/// b_c = a/(2 sqrt k).
double oscillator_threshold(double a, double k);

/// Open interval of b > 0 with a negative-energy square-well root:
/// (2 sqrt(pi), sqrt(4 pi + 2ac)).
std::pair<double, double> squarewell_negative_window(double a, double c);

struct FieldWindow {
  double F_min = 1e-3;
  double F_max = 2.0;
};

/// Largest F at which the linear-field secular function still has a real
/// root in the default window, by bisection on F to 1e-7.
double ionization_field(const Coupling& g, const FieldWindow& window = {}, const RootOptions& options = {});

enum class SweepParameter { A, B, F, K, C };

std::string_view parameter_name(SweepParameter p);
std::optional<SweepParameter> parse_parameter(std::string_view name);

struct SweepSpec {
  PotentialModel model;
  Coupling coupling;
  SweepParameter parameter = SweepParameter::A;
  std::vector<double> grid;
  /// Used for every grid point when set; otherwise default_window per point.
  std::optional<ScanWindow> window;
  RootOptions options;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SweepResult {
  SweepParameter parameter = SweepParameter::A;
  std::vector<double> grid;
  std::vector<std::vector<EnergyRoot>> roots;
  /// branch[i][j] labels roots[i][j]; labels are assigned in order of appearance.
  std::vector<std::vector<int>> branch;
  std::vector<std::string> warnings;
};

/// Model and coupling with one parameter replaced.
std::pair<PotentialModel, Coupling> with_parameter(const PotentialModel& model, const Coupling& g, SweepParameter p,
                                                   double value);

/// Throws PreconditionError unless the grid is non-empty and strictly monotone.
SweepResult sweep(const SweepSpec& spec);

struct FigureOverrides {
  std::optional<double> a, b, F, k, c;
  int grid_points = 400;
  GreenConvention convention = GreenConvention::Standard;
  unsigned threads = 0;
};

struct FigureSeries {
  std::string label;  // e.g. "b=-1"
  SweepResult result;
};

struct FigureData {
  int number = 0;
  SweepParameter parameter = SweepParameter::A;
  std::vector<FigureSeries> series;
};

/// Sweeps reproducing figures 1-6. An override of the series parameter
/// replaces the series set by that single value. Throws PreconditionError
/// for n outside 1..6.
FigureData figure(int n, const FigureOverrides& overrides = {});

}  // namespace pointspec
