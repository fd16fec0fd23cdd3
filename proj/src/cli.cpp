#include "pointspec/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "pointspec/config.hpp"
#include "pointspec/errors.hpp"
#include "pointspec/kernels.hpp"
#include "pointspec/oracle.hpp"
#include "pointspec/output.hpp"
#include "pointspec/solver.hpp"

namespace pointspec::cli {
namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err) {
    const char* env = std::getenv("PS_LOG");
    const std::string v = env ? env : "info";
    if (v == "quiet") level_ = LogLevel::Quiet;
    if (v == "debug") level_ = LogLevel::Debug;
  }
  void info(const std::string& msg) const { write(LogLevel::Info, "info", msg); }
  void debug(const std::string& msg) const { write(LogLevel::Debug, "debug", msg); }
  void error(const std::string& msg) const { err_ << "pointspec: error: " << msg << '\n'; }

 private:
  void write(LogLevel at, const char* tag, const std::string& msg) const {
    if (static_cast<int>(level_) >= static_cast<int>(at)) err_ << "pointspec: " << tag << ": " << msg << '\n';
  }
  std::ostream& err_;
  LogLevel level_ = LogLevel::Info;
};

class ValidationFailure : public Error {
 public:
  using Error::Error;
};

struct Loaded {
  RunConfig config;
  std::set<std::string> given;
};

struct Command {
  std::string config_path;
  std::map<std::string, std::string> values;
  bool dump_config = false;
  int figure = 0;
};

void add_config_options(CLI::App* app, Command& cmd) {
  app->add_option("--config", cmd.config_path, "flat key = value configuration file");
  app->add_flag("--dump-config", cmd.dump_config, "print the normalized configuration and exit");
  for (const std::string& key : config_keys()) {
    app->add_option("--" + key, cmd.values[key], "configuration key '" + key + "'");
  }
}

Loaded load(const Command& cmd, CLI::App* app) {
  Loaded l;
  if (!cmd.config_path.empty()) {
    const RunConfig from_file = load_config(cmd.config_path);
    l.config = from_file;
    // Keys present in the file count as given.
    std::ifstream in(cmd.config_path);
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(0, eq);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      l.given.insert(key);
    }
  }
  for (const auto& [key, value] : cmd.values) {
    if (app->count("--" + key) == 0) continue;
    set_config_value(l.config, key, value);
    l.given.insert(key);
  }
  return l;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output file '" + cfg.output + "'");
  file << text;
  if (!file) throw ConfigError("failed writing output file '" + cfg.output + "'");
}

Meta coupling_meta(const RunConfig& cfg) {
  Meta m{{"model", cfg.model}};
  if (cfg.model == "linear") m.emplace_back("F", format_number(cfg.F));
  if (cfg.model == "harmonic") m.emplace_back("k", format_number(cfg.k));
  if (cfg.model == "well") m.emplace_back("c", format_number(cfg.c));
  m.emplace_back("a", format_number(cfg.a));
  m.emplace_back("b", format_number(cfg.b));
  m.emplace_back("green_convention", cfg.green_convention);
  return m;
}

std::string render(const RunConfig& cfg, const Meta& fields) {
  return cfg.format == "json" ? scalar_json(fields) : scalar_csv(fields);
}

int cmd_solve(const Loaded& l, std::ostream& out, const Log& log) {
  const RunConfig& cfg = l.config;
  const PotentialModel model = make_model(cfg);
  const ScanWindow w = make_window(cfg);
  log.debug("scan window [" + format_number(w.E_min) + ", " + format_number(w.E_max) +
            "], step " + format_number(w.step) + ", kernels " + std::string(kernels::isa_name(kernels::active_isa())));
  const auto roots = find_real_roots(model, make_coupling(cfg), w, make_root_options(cfg));
  log.info(std::to_string(roots.size()) + " root(s) found");
  Meta meta = coupling_meta(cfg);
  meta.emplace_back("e_min", format_number(w.E_min));
  meta.emplace_back("e_max", format_number(w.E_max));
  emit(cfg, cfg.format == "json" ? roots_json(roots, meta) : roots_csv(roots), out);
  return kExitOk;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> grid;
  for (int i = 0; i < n; ++i) grid.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  return grid;
}

void report_warnings(const std::string& prefix, const std::vector<std::string>& warnings, const Log& log) {
  for (const auto& w : warnings) log.debug(prefix + w);
  if (!warnings.empty()) {
    log.info(prefix + std::to_string(warnings.size()) + " branch discontinuities (PS_LOG=debug lists them)");
  }
}

int cmd_sweep(const Loaded& l, std::ostream& out, const Log& log) {
  const RunConfig& cfg = l.config;
  if (!cfg.param || !cfg.grid_min || !cfg.grid_max) {
    throw ConfigError("sweep needs param, grid-min and grid-max");
  }
  SweepSpec spec;
  spec.model = make_model(cfg);
  spec.coupling = make_coupling(cfg);
  spec.parameter = *parse_parameter(*cfg.param);
  spec.grid = linear_grid(*cfg.grid_min, *cfg.grid_max, cfg.grid_points);
  if (cfg.e_min || cfg.e_max || cfg.step) spec.window = make_window(cfg);
  spec.options = make_root_options(cfg);
  spec.threads = static_cast<unsigned>(cfg.threads);
  const SweepResult result = sweep(spec);
  report_warnings("", result.warnings, log);
  Meta meta = coupling_meta(cfg);
  emit(cfg, cfg.format == "json" ? sweep_json(result, meta) : sweep_csv(result, *cfg.param), out);
  return kExitOk;
}

int cmd_figure(const Loaded& l, int number, std::ostream& out, const Log& log) {
  const RunConfig& cfg = l.config;
  FigureOverrides o;
  if (l.given.count("a")) o.a = cfg.a;
  if (l.given.count("b")) o.b = cfg.b;
  if (l.given.count("F")) o.F = cfg.F;
  if (l.given.count("k")) o.k = cfg.k;
  if (l.given.count("c")) o.c = cfg.c;
  o.grid_points = cfg.grid_points;
  o.convention = make_convention(cfg);
  o.threads = static_cast<unsigned>(cfg.threads);
  if (l.given.count("model")) log.info("figure " + std::to_string(number) + " fixes its own model; 'model' ignored");
  const FigureData data = figure(number, o);
  for (const auto& s : data.series) {
    report_warnings(s.label + ": ", s.result.warnings, log);
  }
  emit(cfg, cfg.format == "json" ? figure_json(data) : figure_csv(data), out);
  return kExitOk;
}

int cmd_resonances(const Loaded& l, std::ostream& out, const Log& log) {
  const RunConfig& cfg = l.config;
  if (l.given.count("model") && cfg.model != "harmonic") {
    throw ConfigError("resonances are computed for the harmonic background only");
  }
  const ResonanceSearch found = find_resonances(cfg.k, make_coupling(cfg), cfg.pairs);
  for (const auto& f : found.failures) log.info(f);
  if (static_cast<int>(found.roots.size()) < 2 * cfg.pairs) {
    log.info("only " + std::to_string(found.roots.size() / 2) + " of " + std::to_string(cfg.pairs) +
             " pairs converged");
  }
  RunConfig shown = cfg;
  shown.model = "harmonic";
  emit(cfg, cfg.format == "json" ? roots_json(found.roots, coupling_meta(shown)) : roots_csv(found.roots), out);
  return kExitOk;
}

int cmd_threshold(const Loaded& l, std::ostream& out, const Log&) {
  const RunConfig& cfg = l.config;
  const double bc = oscillator_threshold(cfg.a, cfg.k);
  emit(cfg, render(cfg, {{"a", format_number(cfg.a)}, {"k", format_number(cfg.k)}, {"b_c", format_number(bc)}}), out);
  return kExitOk;
}

int cmd_window(const Loaded& l, std::ostream& out, const Log&) {
  const RunConfig& cfg = l.config;
  const auto [lo, hi] = squarewell_negative_window(cfg.a, cfg.c);
  Meta fields{{"a", format_number(cfg.a)},
              {"c", format_number(cfg.c)},
              {"b_lo", format_number(lo)},
              {"b_hi", format_number(hi)}};
  if (l.given.count("b")) {
    const auto root = squarewell_negative_root(SquareWell{cfg.c}, make_coupling(cfg), make_convention(cfg));
    fields.emplace_back("b", format_number(cfg.b));
    fields.emplace_back("negative_energy", root ? format_number(root->E.real()) : std::string());
  }
  emit(cfg, render(cfg, fields), out);
  return kExitOk;
}

int cmd_ionize(const Loaded& l, std::ostream& out, const Log& log) {
  const RunConfig& cfg = l.config;
  const double Fc = ionization_field(make_coupling(cfg), {cfg.f_min, cfg.f_max}, make_root_options(cfg));
  log.info("ionization field F_c = " + format_number(Fc));
  emit(cfg, render(cfg, {{"a", format_number(cfg.a)}, {"b", format_number(cfg.b)}, {"F_c", format_number(Fc)}}),
       out);
  return kExitOk;
}

int cmd_oracle(const Loaded& l, std::ostream& out, const Log& log) {
  const RunConfig& cfg = l.config;
  if (cfg.model != "harmonic" && cfg.model != "well") {
    throw ConfigError("the oracle covers model = harmonic or model = well");
  }
  if (cfg.oracle_terms < 100) throw ConfigError("oracle-terms must be at least 100");
  const PotentialModel model = make_model(cfg);
  const GreenConvention convention = make_convention(cfg);
  std::vector<SpectralSumReport> reports;
  for (double E : linear_grid(cfg.oracle_e_min, cfg.oracle_e_max, cfg.oracle_points)) {
    reports.push_back(spectral_A(model, E, static_cast<std::size_t>(cfg.oracle_terms), convention));
  }
  bool passed = true;
  double lo = reports.front().ratio, hi = reports.front().ratio;
  for (const auto& r : reports) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
    if (!r.warning.empty()) {
      log.info("E = " + format_number(r.E) + ": " + r.warning);
      passed = false;
    }
  }
  const double reference = reports.front().ratio;
  const double spread = (hi - lo) / std::abs(reference);
  // Harmonic A must equal its spectral sum; the well ratio must only be constant.
  if (cfg.model == "harmonic") {
    for (const auto& r : reports) passed = passed && std::abs(r.ratio - 1.0) <= cfg.oracle_tolerance;
  } else {
    passed = passed && spread <= cfg.oracle_tolerance;
    log.info("square-well closed/spectral ratio = " + format_number(reference) + " (1/pi = " +
             format_number(1.0 / std::numbers::pi) + ")");
  }
  Meta meta = coupling_meta(cfg);
  meta.emplace_back("ratio_min", format_number(lo));
  meta.emplace_back("ratio_max", format_number(hi));
  meta.emplace_back("ratio_spread", format_number(spread));
  meta.emplace_back("tolerance", format_number(cfg.oracle_tolerance));
  emit(cfg, cfg.format == "json" ? reports_json(reports, meta, passed) : reports_csv(reports), out);
  if (!passed) throw ValidationFailure("spectral-sum agreement outside tolerance");
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Log log(err);
  CLI::App app{"Spectra of one-dimensional Hamiltonians with delta and delta-prime point interactions"};
  app.name("pointspec");
  app.require_subcommand(1);

  struct Entry {
    const char* name;
    const char* help;
    Command cmd;
    CLI::App* app = nullptr;
  };
  std::vector<Entry> entries = {
      {"solve", "real bound and quasibound energies in a scan window", {}},
      {"sweep", "roots along a one-parameter grid with branch tracking", {}},
      {"figure", "data for figures 1-6", {}},
      {"resonances", "complex resonance pairs of the oscillator above threshold", {}},
      {"threshold", "oscillator threshold b_c = a/(2 sqrt k)", {}},
      {"window", "range of b with a negative square-well level", {}},
      {"ionize", "largest linear field that still binds", {}},
      {"oracle", "spectral-sum check of the closed-form Green coefficient", {}},
  };
  for (Entry& e : entries) {
    e.app = app.add_subcommand(e.name, e.help);
    add_config_options(e.app, e.cmd);
  }
  entries[2].app->add_option("number", entries[2].cmd.figure, "figure number 1-6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  for (Entry& e : entries) {
    if (!e.app->parsed()) continue;
    try {
      const Loaded loaded = load(e.cmd, e.app);
      if (e.cmd.dump_config) {
        out << serialize_config(loaded.config);
        return kExitOk;
      }
      const std::string name = e.name;
      if (name == "solve") return cmd_solve(loaded, out, log);
      if (name == "sweep") return cmd_sweep(loaded, out, log);
      if (name == "figure") return cmd_figure(loaded, e.cmd.figure, out, log);
      if (name == "resonances") return cmd_resonances(loaded, out, log);
      if (name == "threshold") return cmd_threshold(loaded, out, log);
      if (name == "window") return cmd_window(loaded, out, log);
      if (name == "ionize") return cmd_ionize(loaded, out, log);
      return cmd_oracle(loaded, out, log);
    } catch (const ValidationFailure& ex) {
      log.error(ex.what());
      return kExitValidation;
    } catch (const std::exception& ex) {
      log.error(ex.what());
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace pointspec::cli
