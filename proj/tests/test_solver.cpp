#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "pointspec/errors.hpp"
#include "pointspec/solver.hpp"
#include "reference_values.hpp"

using namespace pointspec;
using std::numbers::pi;

namespace {

ScanWindow window(double lo, double hi, int samples = 4000) { return {lo, hi, (hi - lo) / samples, true}; }

void check_residuals(const PotentialModel& m, const Coupling& g, const std::vector<EnergyRoot>& roots) {
  for (const EnergyRoot& r : roots) {
    CHECK(r.residual < 1e-10 * std::max(1.0, std::abs(r.E)));
    CHECK(std::abs(full_determinant(m, g, r.E).value) < 1e-10 * std::max(1.0, std::abs(r.E)));
    if (r.kind == RootKind::BoundState) CHECK(r.E.imag() == 0.0);
  }
}

}  // namespace

TEST_CASE("free particle in a window") {
  const auto roots = find_real_roots(Free{}, {1.0, 1.0}, window(-1.0, -1e-6));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].E.real() == doctest::Approx(-0.16).epsilon(1e-14));
  CHECK(roots[0].bracket.has_value());
  CHECK(roots[0].kind == RootKind::BoundState);
}

TEST_CASE("harmonic above threshold has no real roots") {
  CHECK(find_real_roots(Harmonic{1.0}, {1.0, 1.0}, window(-10.0, 10.0)).empty());
}

TEST_CASE("square-well lowest root for b = 0") {
  const double hi = std::pow(1.5 * pi, 2);
  const auto roots = find_real_roots(SquareWell{1.0}, {1.0, 0.0}, window(1e-9, hi));
  REQUIRE(!roots.empty());
  CHECK(roots[0].E.real() == doctest::Approx(reference::kWellLowestRootC1A1B0).epsilon(1e-12));
  const double x = std::sqrt(roots[0].E.real());
  CHECK(x > pi / 2.0);
  CHECK(x < pi);
  CHECK(std::tan(x) / x == doctest::Approx(-2.0 * pi).epsilon(1e-9));
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(find_real_roots(Free{}, {1.0, 0.0}, {1.0, -1.0, 0.1, true}), PreconditionError);
  CHECK_THROWS_AS(find_real_roots(Free{}, {1.0, 0.0}, {-1.0, 0.0, 0.5, true}), PreconditionError);
  CHECK_THROWS_AS(find_real_roots(Free{}, {1.0, 0.0}, window(0.5, 2.0)), PreconditionError);
  CHECK_THROWS_AS(find_real_roots(SquareWell{1.0}, {0.0, 1.0}, window(-1.0, 1.0)), InvalidFormError);
  CHECK_THROWS_AS(find_real_roots(Harmonic{1.0}, {0.0, 0.0}, window(-1.0, 1.0)), DomainError);
}

TEST_CASE("residuals, kinds and ordering over random configurations") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> a(0.1, 6.0);
  std::uniform_real_distribution<double> b(-4.0, 4.0);
  for (int i = 0; i < 12; ++i) {
    const Coupling g{a(rng), b(rng)};
    for (const PotentialModel& m : {PotentialModel{LinearField{0.3}}, PotentialModel{Harmonic{1.0}},
                                    PotentialModel{SquareWell{1.0}}, PotentialModel{Free{}}}) {
      const auto roots = find_real_roots(m, g, default_window(m, g));
      check_residuals(m, g, roots);
      for (std::size_t j = 1; j < roots.size(); ++j) CHECK(roots[j - 1].E.real() < roots[j].E.real());
      for (const auto& r : roots) {
        if (std::holds_alternative<LinearField>(m)) {
          CHECK((r.kind == RootKind::QuasiboundState) == (r.E.real() > 0.0));
        } else {
          CHECK(r.kind == RootKind::BoundState);
        }
      }
      const auto again = find_real_roots(m, g, default_window(m, g));
      REQUIRE(again.size() == roots.size());
      for (std::size_t j = 0; j < roots.size(); ++j) CHECK(again[j].E == roots[j].E);
    }
  }
}

TEST_CASE("reduced forms share the determinant's roots") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> a(0.2, 8.0);
  std::uniform_real_distribution<double> b(0.0, 6.0);
  for (int i = 0; i < 50; ++i) {
    PotentialModel m;
    Coupling g{a(rng), b(rng)};
    SecularForm form;
    switch (i % 4) {
      case 0:
        m = Harmonic{0.5 + i * 0.05};
        g.b = std::min(g.b, 0.9 * oscillator_threshold(g.a, std::get<Harmonic>(m).stiffness));
        form = SecularForm::ReducedOscillator;
        break;
      case 1:
        m = SquareWell{0.6 + i * 0.02};
        form = SecularForm::ReducedSquareWell;
        break;
      case 2:
        m = LinearField{0.05 + i * 0.01};
        g.b = 0.0;
        form = SecularForm::ReducedBZero;
        break;
      default:
        m = Free{};
        form = SecularForm::ReducedFree;
        break;
    }
    const ScanWindow w = default_window(m, g);
    RootOptions reduced_opts;
    reduced_opts.form = form;
    const auto full = find_real_roots(m, g, w);
    const auto red = find_real_roots(m, g, w, reduced_opts);
    CAPTURE(i);
    REQUIRE(full.size() == red.size());
    for (std::size_t j = 0; j < full.size(); ++j) {
      CHECK(std::abs(full[j].E - red[j].E) <= 1e-9 * std::max(1.0, std::abs(full[j].E)));
    }
  }
}

TEST_CASE("oscillator below threshold binds a ladder of pairs") {
  for (auto [a, k] : {std::pair{1.0, 1.0}, std::pair{2.0, 1.0}, std::pair{1.0, 4.0}}) {
    const Coupling g{a, 0.99 * oscillator_threshold(a, k)};
    const auto roots = find_real_roots(Harmonic{k}, g, window(1e-9, 11.0 * k));
    CHECK(roots.size() >= 10);
    check_residuals(Harmonic{k}, g, roots);
    const Coupling above{a, 1.01 * oscillator_threshold(a, k)};
    CHECK(find_real_roots(Harmonic{k}, above, window(-50.0, 50.0)).empty());
  }
}

TEST_CASE("oscillator threshold") {
  CHECK(oscillator_threshold(2.0, 1.0) == 1.0);
  CHECK(oscillator_threshold(1.0, 1.0) == 0.5);
  CHECK(oscillator_threshold(3.0, 16.0) == oscillator_threshold(3.0, 4.0) / 2.0);
  CHECK_THROWS_AS(oscillator_threshold(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(oscillator_threshold(1.0, -1.0), DomainError);
}

TEST_CASE("resonances come in exact conjugate pairs") {
  const ResonanceSearch found = find_resonances(1.0, {1.0, 2.0}, 3);
  REQUIRE(found.roots.size() >= 6);
  for (std::size_t i = 0; i + 1 < found.roots.size(); i += 2) {
    CHECK(found.roots[i].E.imag() > 0.0);
    CHECK(found.roots[i + 1].E == std::conj(found.roots[i].E));
    CHECK(found.roots[i].kind == RootKind::Resonance);
    CHECK(found.roots[i].residual < 1e-10);
    CHECK(found.roots[i + 1].residual < 1e-10);
    if (i > 0) CHECK(found.roots[i - 2].E.real() < found.roots[i].E.real());
  }
  CHECK_THROWS_AS(find_resonances(1.0, {1.0, 0.49}, 3), DomainError);
  CHECK_THROWS_AS(find_resonances(1.0, {1.0, 0.5}, 3), DomainError);
}

TEST_CASE("square-well negative window") {
  const auto [lo, hi] = squarewell_negative_window(1.0, 1.0);
  CHECK(lo == doctest::Approx(2.0 * std::sqrt(pi)));
  CHECK(hi == doctest::Approx(std::sqrt(2.0 + 4.0 * pi)));
  const auto [lo5, hi5] = squarewell_negative_window(5.0, 1.0);
  CHECK(lo5 == lo);
  CHECK(hi5 == doctest::Approx(std::sqrt(4.0 * pi + 10.0)));
  CHECK_THROWS_AS(squarewell_negative_window(0.0, 1.0), DomainError);

  // Just inside and just outside for a = 5.
  CHECK(squarewell_negative_root(SquareWell{1.0}, {5.0, hi5 - 1e-3}).has_value());
  CHECK_FALSE(squarewell_negative_root(SquareWell{1.0}, {5.0, hi5 + 1e-3}).has_value());
  CHECK(squarewell_negative_root(SquareWell{1.0}, {5.0, lo5 + 1e-3}).has_value());
  CHECK_FALSE(squarewell_negative_root(SquareWell{1.0}, {5.0, lo5 - 1e-3}).has_value());

  const auto at_edge = squarewell_negative_root(SquareWell{1.0}, {1.0, hi - 1e-12});
  REQUIRE(at_edge.has_value());
  CHECK(std::abs(at_edge->E.real()) < 1e-6);
}

TEST_CASE("square-well negative root agrees with the scan") {
  const Coupling g{1.0, 3.7};
  const auto deep = squarewell_negative_root(SquareWell{1.0}, g);
  REQUIRE(deep.has_value());
  const auto roots = find_real_roots(SquareWell{1.0}, g, default_window(SquareWell{1.0}, g));
  REQUIRE(!roots.empty());
  CHECK(roots[0].E.real() == doctest::Approx(deep->E.real()).epsilon(1e-12));
}

TEST_CASE("square well: one root between consecutive poles, confirmed by a dense scan") {
  const Coupling g{2.0, 1.5};
  const PotentialModel m = SquareWell{1.0};
  const double hi = std::pow(8.0 * pi / 2.0, 2) - 1e-3;
  const auto roots = find_real_roots(m, g, window(1e-6, hi));
  const auto poles = singular_energies(m, 0.0, hi);
  // Sign changes of a 10x denser plain scan that are not poles.
  int dense = 0;
  double prev = std::nan("");
  const int n = 400000;
  for (int i = 0; i <= n; ++i) {
    const double E = 1e-6 + (hi - 1e-6) * i / n;
    const SecularValue v = full_determinant(m, g, E);
    if (v.pole_flag) {
      prev = std::nan("");
      continue;
    }
    const double cur = v.value.real();
    if (!std::isnan(prev) && (prev < 0) != (cur < 0)) {
      bool straddles_pole = false;
      for (double p : poles) straddles_pole = straddles_pole || (p > E - (hi / n) * 1.01 && p < E);
      const bool large = std::abs(cur) > 1.0 && std::abs(prev) > 1.0;
      if (!(straddles_pole || large)) ++dense;
    }
    prev = cur;
  }
  CHECK(static_cast<int>(roots.size()) == dense);
  std::size_t pole_index = 0;
  int in_interval = 0;
  for (const auto& r : roots) {
    while (pole_index < poles.size() && poles[pole_index] < r.E.real()) {
      CHECK(in_interval <= 1);
      in_interval = 0;
      ++pole_index;
    }
    ++in_interval;
  }
  CHECK(in_interval <= 1);
}

TEST_CASE("ionization field bounds the linear-field spectrum") {
  const Coupling g{1.0, 0.0};
  const double Fc = ionization_field(g);
  CHECK(Fc == doctest::Approx(reference::kIonizationFieldBZero).epsilon(1e-6));
  CHECK_FALSE(find_real_roots(LinearField{Fc / 2.0}, g, default_window(LinearField{Fc / 2.0}, g)).empty());
  CHECK(find_real_roots(LinearField{1.05 * Fc}, g, default_window(LinearField{1.05 * Fc}, g)).empty());
  CHECK_THROWS_AS(ionization_field({0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(ionization_field(g, {0.5, 2.0}), PreconditionError);
}

TEST_CASE("single-point sweep equals a direct scan") {
  SweepSpec spec;
  spec.model = Harmonic{1.0};
  spec.coupling = {1.0, 0.2};
  spec.parameter = SweepParameter::A;
  spec.grid = {1.5};
  const SweepResult r = sweep(spec);
  const auto direct = find_real_roots(Harmonic{1.0}, {1.5, 0.2}, default_window(Harmonic{1.0}, {1.5, 0.2}));
  REQUIRE(r.roots.size() == 1);
  REQUIRE(r.roots[0].size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) CHECK(r.roots[0][i].E == direct[i].E);
}

TEST_CASE("parallel sweep matches a serial one") {
  SweepSpec spec;
  spec.model = SquareWell{1.0};
  spec.coupling = {3.0, 0.0};
  spec.parameter = SweepParameter::B;
  for (int i = 0; i < 40; ++i) spec.grid.push_back(0.25 * i);
  spec.window = window(-30.0, 60.0);
  spec.threads = 1;
  const SweepResult serial = sweep(spec);
  spec.threads = 4;
  const SweepResult parallel = sweep(spec);
  REQUIRE(serial.roots.size() == parallel.roots.size());
  for (std::size_t i = 0; i < serial.roots.size(); ++i) {
    REQUIRE(serial.roots[i].size() == parallel.roots[i].size());
    for (std::size_t j = 0; j < serial.roots[i].size(); ++j) CHECK(serial.roots[i][j].E == parallel.roots[i][j].E);
    CHECK(serial.branch[i] == parallel.branch[i]);
  }
}

TEST_CASE("sweep validation") {
  SweepSpec spec;
  spec.model = Harmonic{1.0};
  spec.coupling = {1.0, 0.0};
  spec.parameter = SweepParameter::A;
  CHECK_THROWS_AS(sweep(spec), PreconditionError);
  spec.grid = {1.0, 2.0, 1.5};
  CHECK_THROWS_AS(sweep(spec), PreconditionError);
  spec.grid = {1.0, 2.0};
  spec.parameter = SweepParameter::F;
  CHECK_THROWS_AS(sweep(spec), PreconditionError);
}

TEST_CASE("branches follow smooth curves") {
  SweepSpec spec;
  spec.model = SquareWell{1.0};
  spec.coupling = {1.0, 1.0};
  spec.parameter = SweepParameter::A;
  for (int i = 1; i <= 60; ++i) spec.grid.push_back(0.1 * i);
  spec.window = window(-10.0, 30.0);
  const SweepResult r = sweep(spec);
  CHECK(r.warnings.empty());
  // The lowest level is one continuous branch.
  const int first = r.branch[0][0];
  for (std::size_t i = 0; i < r.grid.size(); ++i) CHECK(r.branch[i][0] == first);
}

TEST_CASE("figure 4: b = 0 leaves one even level between consecutive poles") {
  FigureOverrides o;
  o.b = 0.0;
  o.grid_points = 8;
  const FigureData d = figure(4, o);
  REQUIRE(d.series.size() == 1);
  CHECK(d.series[0].label == "b=0");
  for (const auto& roots : d.series[0].result.roots) {
    for (int n = 0; n < 8; ++n) {
      int count = 0;
      for (const auto& root : roots) {
        if (root.E.real() > n + 0.25 && root.E.real() < n + 1.25) ++count;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("figure 6 has no level pinned at E = pi^2") {
  FigureOverrides o;
  o.grid_points = 30;
  const FigureData d = figure(6, o);
  for (const auto& s : d.series) {
    for (const auto& roots : s.result.roots) {
      for (const auto& root : roots) CHECK(std::abs(root.E.real() - pi * pi) > 1e-6);
    }
  }
}

TEST_CASE("figure 3 with a = 2 ends at b = +-1") {
  FigureOverrides o;
  o.a = 2.0;
  o.grid_points = 101;
  const FigureData d = figure(3, o);
  REQUIRE(d.series.size() == 1);
  CHECK(d.series[0].label == "a=2");
  const SweepResult& r = d.series[0].result;
  double lo = 1e9, hi = -1e9;
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    if (r.roots[i].empty()) continue;
    lo = std::min(lo, r.grid[i]);
    hi = std::max(hi, r.grid[i]);
  }
  CHECK(lo == doctest::Approx(-1.0).epsilon(0.06));
  CHECK(hi == doctest::Approx(1.0).epsilon(0.06));
  CHECK(hi <= 1.0);
}

TEST_CASE("figure arguments") {
  CHECK_THROWS_AS(figure(0), PreconditionError);
  CHECK_THROWS_AS(figure(7), PreconditionError);
  FigureOverrides o;
  o.a = 1.0;
  CHECK_THROWS_AS(figure(1, o), PreconditionError);
  FigureOverrides bad;
  bad.F = 0.5;
  CHECK_THROWS_AS(figure(3, bad), PreconditionError);
}
