#include "pointspec/solver.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "pointspec/errors.hpp"
#include "pointspec/kernels.hpp"

namespace pointspec {
namespace {

using std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kGrading = 1.5;

struct Segment {
  double lo;
  double hi;
  bool lo_singular;
  bool hi_singular;
};

class SecularFunction {
 public:
  SecularFunction(const PotentialModel& model, const Coupling& g, const RootOptions& options)
      : model_(model), g_(g), options_(options) {}

  Complex complex_value(double E) const {
    const SecularValue v = options_.form == SecularForm::FullDeterminant
                               ? full_determinant(model_, g_, E, options_.convention)
                               : reduced(model_, g_, E, options_.form, options_.convention);
    if (v.pole_flag) return {kNaN, kNaN};
    return v.value;
  }

  // Real sample for sign analysis; NaN marks a pole or a genuinely complex value.
  double operator()(double E) const {
    Complex v;
    try {
      v = complex_value(E);
    } catch (const InvalidFormError&) {
      throw;
    } catch (const Error&) {
      return kNaN;
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return kNaN;
    if (std::abs(v.imag()) > 1e-9 * std::abs(v.real()) + 1e-300) return kNaN;
    return v.real();
  }

 private:
  const PotentialModel& model_;
  const Coupling& g_;
  const RootOptions& options_;
};

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

std::vector<Segment> split_window(const PotentialModel& model, const ScanWindow& w) {
  std::vector<double> poles;
  if (w.pole_split) poles = singular_energies(model, w.E_min, w.E_max);
  std::vector<Segment> out;
  double lo = w.E_min;
  bool lo_singular = false;
  for (double p : poles) {
    if (p > lo) out.push_back({lo, p, lo_singular, true});
    lo = p;
    lo_singular = true;
  }
  if (w.E_max > lo) out.push_back({lo, w.E_max, lo_singular, false});
  return out;
}

// Largest step that still resolves the oscillation of the linear-field
// Airy products at positive energy.
double local_step(const PotentialModel& model, double x, double step) {
  if (const auto* lf = std::get_if<LinearField>(&model); lf != nullptr && x > 0.0) {
    return std::min(step, pi * lf->field / (6.0 * std::sqrt(x)));
  }
  return step;
}

std::vector<double> sample_points(const PotentialModel& model, const Segment& s, double step,
                                  std::size_t max_samples) {
  std::vector<double> xs;
  const double width = s.hi - s.lo;
  const double floor_step = width / static_cast<double>(max_samples);
  if (!s.lo_singular) xs.push_back(s.lo);
  for (double x = s.lo;;) {
    x += std::max(local_step(model, x, step), floor_step);
    if (x >= s.hi) break;
    xs.push_back(x);
  }
  if (!s.hi_singular) xs.push_back(s.hi);
  const double reach = std::min(step, width / 2.0);
  if (s.lo_singular) {
    for (double d = 2.0 * kBackgroundPoleTolerance * std::max(1.0, std::abs(s.lo)); d < reach; d *= kGrading) {
      xs.push_back(s.lo + d);
    }
  }
  if (s.hi_singular) {
    for (double d = 2.0 * kBackgroundPoleTolerance * std::max(1.0, std::abs(s.hi)); d < reach; d *= kGrading) {
      xs.push_back(s.hi - d);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

struct Bracket {
  double lo, hi, f_lo, f_hi;
};

// Minimizes s*f on [lo, hi]; returns (x, s*f(x)).
std::pair<double, double> golden_minimum(const SecularFunction& f, double s, double lo, double hi) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  auto g = [&](double x) {
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : s * v;
  };
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int i = 0; i < 80 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x1); ++i) {
    if (g1 < 0.0 || g2 < 0.0) break;
    if (g1 < g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - r * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + r * (hi - lo);
      g2 = g(x2);
    }
  }
  return g1 < g2 ? std::pair{x1, g1} : std::pair{x2, g2};
}

void collect_brackets(const SecularFunction& f, const std::vector<double>& xs, const std::vector<double>& vs,
                      std::vector<Bracket>& brackets, std::vector<double>& exact_zeros) {
  std::vector<std::size_t> changes;
  kernels::sign_changes(vs, changes);
  for (std::size_t i : changes) brackets.push_back({xs[i], xs[i + 1], vs[i], vs[i + 1]});

  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] == 0.0) exact_zeros.push_back(xs[i]);
  }

  // Close pairs of roots can fall between two samples; look for local minima of |v|
  // whose parabolic model dips to (or near) zero.
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    const double v0 = vs[i - 1], v1 = vs[i], v2 = vs[i + 1];
    if (std::isnan(v0) || std::isnan(v1) || std::isnan(v2) || v1 == 0.0) continue;
    const double s = sign_of(v1);
    if (sign_of(v0) != s || sign_of(v2) != s || v0 == 0.0 || v2 == 0.0) continue;
    if (!(std::abs(v1) <= std::abs(v0) && std::abs(v1) <= std::abs(v2))) continue;
    const double x0 = xs[i - 1], x1 = xs[i], x2 = xs[i + 1];
    const double d01 = (v1 - v0) / (x1 - x0);
    const double d12 = (v2 - v1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    double vertex = v1;
    if (curvature != 0.0) {
      const double slope1 = d01 + curvature * (x1 - x0);
      vertex = v1 - slope1 * slope1 / (4.0 * curvature);
    }
    if (!(s * vertex < 0.0 || std::abs(vertex) < 0.25 * std::abs(v1))) continue;
    const auto [xm, gm] = golden_minimum(f, s, x0, x2);
    if (gm < 0.0) {
      const double vm = s * gm;
      brackets.push_back({x0, xm, v0, vm});
      brackets.push_back({xm, x2, vm, v2});
    }
  }
}

std::optional<std::pair<double, int>> bisect(const SecularFunction& f, Bracket b) {
  double lo = b.lo, hi = b.hi, f_lo = b.f_lo, f_hi = b.f_hi;
  int it = 0;
  for (; it < 400; ++it) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (std::isnan(fm)) return std::nullopt;
    if (fm == 0.0) return std::pair{mid, it + 1};
    if (sign_of(fm) == sign_of(f_lo)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
      f_hi = fm;
    }
  }
  return std::pair{std::abs(f_lo) <= std::abs(f_hi) ? lo : hi, it};
}

RootKind real_kind(const PotentialModel& model, double E) {
  return std::holds_alternative<LinearField>(model) && E > 0.0 ? RootKind::QuasiboundState : RootKind::BoundState;
}

void validate_window(const ScanWindow& w) {
  if (!std::isfinite(w.E_min) || !std::isfinite(w.E_max) || !(w.E_min < w.E_max)) {
    throw PreconditionError("scan window needs finite E_min < E_max");
  }
  if (!(w.step > 0.0) || (w.E_max - w.E_min) / w.step < 10.0) {
    throw PreconditionError("scan step must be positive and give at least 10 samples");
  }
}

bool root_order(const EnergyRoot& x, const EnergyRoot& y) {
  if (x.E.real() != y.E.real()) return x.E.real() < y.E.real();
  return x.E.imag() < y.E.imag();
}

std::string shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

std::string_view kind_name(RootKind kind) {
  switch (kind) {
    case RootKind::BoundState:
      return "bound";
    case RootKind::QuasiboundState:
      return "quasibound";
    case RootKind::Resonance:
      return "resonance";
  }
  return "unknown";
}

ScanWindow default_window(const PotentialModel& model, const Coupling& g) {
  ScanWindow w;
  if (const auto* well = std::get_if<SquareWell>(&model)) {
    const double c = well->half_width;
    w.E_min = -10.0 * (g.a / c) * (g.a / c);
    w.E_max = std::pow(20.0 * pi / c, 2);
    if (!(w.E_min < 0.0)) w.E_min = -1.0 / (c * c);
  } else if (std::holds_alternative<Free>(model)) {
    w.E_min = -(g.a * g.a / 4.0 + 1.0);
    w.E_max = 0.0;
  } else {
    w.E_min = -50.0;
    w.E_max = 50.0;
  }
  w.step = (w.E_max - w.E_min) / 4000.0;
  return w;
}

std::vector<EnergyRoot> find_real_roots(const PotentialModel& model, const Coupling& g, const ScanWindow& window,
                                        const RootOptions& options) {
  validate(model);
  validate_window(window);
  if (g.a == 0.0 && g.b == 0.0) throw DomainError("coupling a = b = 0: there is no interaction to bind");
  if (std::holds_alternative<SquareWell>(model) && g.a == 0.0) {
    throw InvalidFormError("square well with a = 0: the secular equation is meaningless (it reduces to a constant)");
  }
  const SecularFunction f(model, g, options);

  std::vector<EnergyRoot> roots;
  bool any_pair = false;
  for (const Segment& seg : split_window(model, window)) {
    const std::vector<double> xs = sample_points(model, seg, window.step, options.max_samples);
    std::vector<double> vs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) vs[i] = f(xs[i]);
    for (std::size_t i = 0; i + 1 < vs.size() && !any_pair; ++i) {
      any_pair = !std::isnan(vs[i]) && !std::isnan(vs[i + 1]);
    }

    std::vector<Bracket> brackets;
    std::vector<double> zeros;
    collect_brackets(f, xs, vs, brackets, zeros);
    for (double z : zeros) roots.push_back({z, 0.0, real_kind(model, z), std::pair{z, z}, 0});
    for (const Bracket& b : brackets) {
      const auto hit = bisect(f, b);
      if (!hit) continue;
      const double E = hit->first;
      const double residual = std::abs(f.complex_value(E));
      if (!(residual < options.residual_factor * std::max(1.0, std::abs(E)))) continue;
      roots.push_back({E, residual, real_kind(model, E), std::pair{b.lo, b.hi}, hit->second});
    }
  }
  if (!any_pair) throw PreconditionError("no two adjacent samples in the scan window could be evaluated");

  std::sort(roots.begin(), roots.end(), root_order);
  std::vector<EnergyRoot> unique;
  for (const EnergyRoot& r : roots) {
    if (!unique.empty() &&
        std::abs(r.E - unique.back().E) <= 4e-12 * std::max(1.0, std::abs(r.E.real()))) {
      if (r.residual < unique.back().residual) unique.back() = r;
      continue;
    }
    unique.push_back(r);
  }
  return unique;
}

std::optional<EnergyRoot> squarewell_negative_root(const SquareWell& well, const Coupling& g,
                                                   GreenConvention convention) {
  validate(PotentialModel{well});
  if (g.a == 0.0) throw InvalidFormError("square well with a = 0 has no reduced equation");
  const double c = well.half_width;
  // E = -q^2: tanh(cq)/q falls monotonically from c to 0, so it meets the level once at most.
  const double level = convention == GreenConvention::Standard ? (g.b * g.b - 4.0 * pi) / (2.0 * g.a)
                                                            : -(4.0 + g.b * g.b) / (2.0 * g.a);
  auto h = [&](double q) {
    const double x = c * q;
    const double ratio = x < 1e-8 ? c : std::tanh(x) / q;
    return ratio - level;
  };
  if (!(level > 0.0 && level < c)) return std::nullopt;
  double lo = 0.0;
  double hi = 1.0;
  while (h(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e8) return std::nullopt;
  }
  int it = 0;
  for (; it < 400; ++it) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  const double q = std::abs(h(lo)) <= std::abs(h(hi)) ? lo : hi;
  const double E = -q * q;
  const SecularValue v = full_determinant(PotentialModel{well}, g, E, convention);
  return EnergyRoot{E, std::abs(v.value), RootKind::BoundState, std::pair{-hi * hi, -lo * lo}, it};
}

double oscillator_threshold(double a, double k) {
  if (!(a > 0.0) || !(k > 0.0) || !std::isfinite(a) || !std::isfinite(k)) {
    throw DomainError("oscillator threshold needs a > 0 and k > 0");
  }
  return a / (2.0 * std::sqrt(k));
}

std::pair<double, double> squarewell_negative_window(double a, double c) {
  if (!(a > 0.0) || !(c > 0.0) || !std::isfinite(a) || !std::isfinite(c)) {
    throw DomainError("square-well window needs a > 0 and c > 0");
  }
  return {2.0 * std::sqrt(pi), std::sqrt(4.0 * pi + 2.0 * a * c)};
}

ResonanceSearch find_resonances(double k, const Coupling& g, int n_pairs) {
  validate(PotentialModel{Harmonic{k}});
  const double a = g.a;
  const double b = g.b;
  const double disc = 4.0 * b * b - a * a / k;
  if (!(disc > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "b^2 <= a^2/(4k) (threshold b_c = " << a / (2.0 * std::sqrt(k))
        << "): roots are real, use the real-root scan instead";
    throw DomainError(msg.str());
  }
  if (n_pairs < 1) throw PreconditionError("n_pairs must be at least 1");
  const Complex target = Complex(-a / std::sqrt(k), std::sqrt(disc)) / (b * b);

  auto F = [&](Complex w) -> std::optional<Complex> {
    try {
      return gamma_ratio(w) - target;
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  ResonanceSearch out;
  std::vector<Complex> found;  // in w, Im w > 0 representative
  const int max_seeds = 4 * n_pairs + 16;
  for (int n = 0; n < max_seeds && static_cast<int>(found.size()) < n_pairs; ++n) {
    Complex w(n + 0.25, 0.1);
    auto fw = F(w);
    bool converged = false;
    int it = 0;
    for (; fw && it < 200; ++it) {
      if (std::abs(*fw) <= 1e-15 * std::abs(target)) {
        converged = true;
        break;
      }
      const double h = 1e-6 * std::max(1.0, std::abs(w));
      const auto fp = F(w + h);
      const auto fm = F(w - h);
      if (!fp || !fm) break;
      const Complex deriv = (*fp - *fm) / (2.0 * h);
      if (deriv == 0.0) break;
      Complex step = *fw / deriv;
      bool improved = false;
      for (int halving = 0; halving <= 30; ++halving) {
        const auto trial = F(w - step);
        if (trial && std::abs(*trial) < std::abs(*fw)) {
          w -= step;
          fw = trial;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) {
        converged = std::abs(*fw) <= 1e-12 * std::abs(target);
        break;
      }
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) {
        converged = std::abs(*fw) <= 1e-12 * std::abs(target);
        break;
      }
    }
    std::ostringstream why;
    why << "seed n=" << n << ": ";
    if (!converged) {
      why << "no convergence after " << it << " iterations";
      out.failures.push_back(why.str());
      continue;
    }
    if (w.imag() == 0.0) {
      why << "converged to a real point";
      out.failures.push_back(why.str());
      continue;
    }
    const Complex rep = w.imag() > 0.0 ? w : std::conj(w);
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](Complex o) {
      return std::abs(o - rep) <= 1e-9 * std::max(1.0, std::abs(rep));
    });
    if (duplicate) continue;
    found.push_back(rep);
    const Complex E = k * rep;
    const double residual = std::abs(full_determinant(PotentialModel{Harmonic{k}}, g, E).value);
    if (!(residual < 1e-10 * std::max(1.0, std::abs(E)))) {
      why << "residual " << residual << " too large";
      out.failures.push_back(why.str());
      found.pop_back();
      continue;
    }
    const double residual_conj = std::abs(full_determinant(PotentialModel{Harmonic{k}}, g, std::conj(E)).value);
    out.roots.push_back({E, residual, RootKind::Resonance, std::nullopt, it});
    out.roots.push_back({std::conj(E), residual_conj, RootKind::Resonance, std::nullopt, it});
  }
  // Pairs ascend in Re E; the Im E > 0 member leads each pair.
  std::vector<std::pair<EnergyRoot, EnergyRoot>> pairs;
  for (std::size_t i = 0; i + 1 < out.roots.size(); i += 2) pairs.emplace_back(out.roots[i], out.roots[i + 1]);
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return root_order(x.first, y.first); });
  out.roots.clear();
  for (const auto& [up, down] : pairs) {
    out.roots.push_back(up);
    out.roots.push_back(down);
  }
  return out;
}

double ionization_field(const Coupling& g, const FieldWindow& window, const RootOptions& options) {
  if (!(g.a > 0.0)) throw DomainError("ionization field needs a > 0");
  if (!(window.F_min > 0.0) || !(window.F_min < window.F_max)) {
    throw PreconditionError("field window needs 0 < F_min < F_max");
  }
  auto has_root = [&](double F) {
    const PotentialModel model = LinearField{F};
    return !find_real_roots(model, g, default_window(model, g), options).empty();
  };
  double lo = window.F_min;
  double hi = window.F_max;
  if (!has_root(lo)) throw PreconditionError("no root at the smallest probed field F = " + shortest(lo));
  if (has_root(hi)) throw PreconditionError("roots persist up to the largest probed field F = " + shortest(hi));
  while (hi - lo > 1e-7) {
    const double mid = lo + (hi - lo) / 2.0;
    (has_root(mid) ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2.0;
}

std::string_view parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::A:
      return "a";
    case SweepParameter::B:
      return "b";
    case SweepParameter::F:
      return "F";
    case SweepParameter::K:
      return "k";
    case SweepParameter::C:
      return "c";
  }
  return "?";
}

std::optional<SweepParameter> parse_parameter(std::string_view name) {
  if (name == "a") return SweepParameter::A;
  if (name == "b") return SweepParameter::B;
  if (name == "F") return SweepParameter::F;
  if (name == "k") return SweepParameter::K;
  if (name == "c") return SweepParameter::C;
  return std::nullopt;
}

std::pair<PotentialModel, Coupling> with_parameter(const PotentialModel& model, const Coupling& g, SweepParameter p,
                                                   double value) {
  PotentialModel m = model;
  Coupling c = g;
  auto mismatch = [&] {
    throw PreconditionError(std::string("parameter ") + std::string(parameter_name(p)) + " does not belong to the " +
                            model_name(model) + " model");
  };
  switch (p) {
    case SweepParameter::A:
      c.a = value;
      break;
    case SweepParameter::B:
      c.b = value;
      break;
    case SweepParameter::F:
      if (!std::holds_alternative<LinearField>(m)) mismatch();
      m = LinearField{value};
      break;
    case SweepParameter::K:
      if (!std::holds_alternative<Harmonic>(m)) mismatch();
      m = Harmonic{value};
      break;
    case SweepParameter::C:
      if (!std::holds_alternative<SquareWell>(m)) mismatch();
      m = SquareWell{value};
      break;
  }
  return {m, c};
}

SweepResult sweep(const SweepSpec& spec) {
  const std::size_t n = spec.grid.size();
  if (n == 0) throw PreconditionError("sweep grid is empty");
  for (std::size_t i = 1; i < n; ++i) {
    const bool up = spec.grid[1] > spec.grid[0];
    if (up ? !(spec.grid[i] > spec.grid[i - 1]) : !(spec.grid[i] < spec.grid[i - 1])) {
      throw PreconditionError("sweep grid must be strictly monotone");
    }
  }
  for (double p : spec.grid) with_parameter(spec.model, spec.coupling, spec.parameter, p);

  SweepResult result;
  result.parameter = spec.parameter;
  result.grid = spec.grid;
  result.roots.resize(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const auto [model, g] = with_parameter(spec.model, spec.coupling, spec.parameter, spec.grid[i]);
        const ScanWindow w = spec.window ? *spec.window : default_window(model, g);
        result.roots[i] = find_real_roots(model, g, w, spec.options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = spec.threads != 0 ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  struct Tail {
    int id;
    double p;
    Complex E;
    double slope;
  };
  std::vector<Tail> tails;
  int next_id = 0;
  result.branch.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& roots = result.roots[i];
    const double p = spec.grid[i];
    struct Candidate {
      double distance;
      std::size_t root;
      std::size_t tail;
    };
    std::vector<Candidate> candidates;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      for (std::size_t t = 0; t < tails.size(); ++t) {
        const double dp = std::abs(p - tails[t].p);
        const double tol = 5.0 * dp * std::max(tails[t].slope, 1.0);
        const double distance = std::abs(roots[r].E - tails[t].E);
        if (distance <= tol) candidates.push_back({distance, r, t});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.distance < y.distance; });
    std::vector<int> label(roots.size(), -1);
    std::vector<bool> tail_used(tails.size(), false);
    std::vector<Tail> next_tails;
    for (const Candidate& c : candidates) {
      if (label[c.root] != -1 || tail_used[c.tail]) continue;
      label[c.root] = tails[c.tail].id;
      tail_used[c.tail] = true;
      const double dp = std::abs(p - tails[c.tail].p);
      next_tails.push_back({tails[c.tail].id, p, roots[c.root].E, dp > 0.0 ? c.distance / dp : 0.0});
    }
    const bool tail_lost = std::find(tail_used.begin(), tail_used.end(), false) != tail_used.end();
    bool split = false;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      if (label[r] != -1) continue;
      label[r] = next_id++;
      next_tails.push_back({label[r], p, roots[r].E, 0.0});
      split = split || (i > 0 && tail_lost);
    }
    if (split) {
      result.warnings.push_back("branch jump at " + std::string(parameter_name(spec.parameter)) + "=" + shortest(p) +
                                ": a branch ended while a new one started");
    }
    result.branch[i] = std::move(label);
    tails = std::move(next_tails);
  }
  return result;
}

namespace {

struct FigureLayout {
  PotentialModel model;
  Coupling coupling;
  SweepParameter series_parameter;
  std::vector<double> series_values;
  SweepParameter parameter;
  double lo;
  double hi;
  bool open_lo;
  ScanWindow window;
};

FigureLayout layout(int n) {
  auto window = [](double lo, double hi) { return ScanWindow{lo, hi, (hi - lo) / 4000.0, true}; };
  switch (n) {
    case 1:
      return {LinearField{1.0}, {1.0, 0.0}, SweepParameter::B, {-1.0, 0.0, 1.0}, SweepParameter::A, 0.0, 5.0, true,
              window(-10.0, 10.0)};
    case 2:
      return {LinearField{1.0}, {1.0, 1.0}, SweepParameter::B, {1.0}, SweepParameter::F, 0.0005, 0.2, false,
              window(-5.0, 5.0)};
    case 3:
      return {Harmonic{1.0}, {1.0, 0.0}, SweepParameter::A, {1.0, 2.0, 4.0}, SweepParameter::B, -2.5, 2.5, false,
              window(-5.0, 10.0)};
    case 4:
      return {Harmonic{1.0}, {1.0, 0.0}, SweepParameter::B, {0.0, 1.0, 3.0}, SweepParameter::A, 0.0, 8.0, true,
              window(-5.0, 10.0)};
    case 5:
      return {SquareWell{1.0}, {1.0, 0.0}, SweepParameter::A, {1.0, 5.0, 10.0}, SweepParameter::B, 0.0, 10.0, false,
              window(-50.0, 100.0)};
    case 6:
      return {SquareWell{1.0}, {1.0, 1.0}, SweepParameter::B, {1.0, 5.0, 10.0}, SweepParameter::A, 0.0, 10.0, true,
              window(-50.0, 100.0)};
    default:
      throw PreconditionError("figure number must be between 1 and 6");
  }
}

}  // namespace

FigureData figure(int n, const FigureOverrides& overrides) {
  FigureLayout f = layout(n);
  if (overrides.grid_points < 1) throw PreconditionError("grid points must be at least 1");

  const std::pair<SweepParameter, std::optional<double>> given[] = {
      {SweepParameter::A, overrides.a}, {SweepParameter::B, overrides.b}, {SweepParameter::F, overrides.F},
      {SweepParameter::K, overrides.k}, {SweepParameter::C, overrides.c}};
  for (const auto& [p, value] : given) {
    if (!value) continue;
    if (p == f.parameter) {
      throw PreconditionError(std::string(parameter_name(p)) + " is the swept parameter of figure " +
                              std::to_string(n));
    }
    if (p == f.series_parameter) {
      f.series_values = {*value};
      continue;
    }
    std::tie(f.model, f.coupling) = with_parameter(f.model, f.coupling, p, *value);
  }

  std::vector<double> grid;
  const int points = overrides.grid_points;
  for (int i = 0; i < points; ++i) {
    if (f.open_lo) {
      grid.push_back(f.lo + (f.hi - f.lo) * (i + 1) / points);
    } else {
      grid.push_back(points == 1 ? f.lo : f.lo + (f.hi - f.lo) * i / (points - 1));
    }
  }

  FigureData data;
  data.number = n;
  data.parameter = f.parameter;
  for (double value : f.series_values) {
    SweepSpec spec;
    std::tie(spec.model, spec.coupling) = with_parameter(f.model, f.coupling, f.series_parameter, value);
    spec.parameter = f.parameter;
    spec.grid = grid;
    spec.window = f.window;
    spec.options.convention = overrides.convention;
    spec.threads = overrides.threads;
    data.series.push_back({std::string(parameter_name(f.series_parameter)) + "=" + shortest(value), sweep(spec)});
  }
  return data;
}

}  // namespace pointspec
