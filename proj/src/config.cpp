#include "pointspec/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "pointspec/errors.hpp"

namespace pointspec {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& expected) {
  throw ConfigError("invalid value '" + value + "' for key '" + key + "': expected " + expected);
}

double to_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* end = value.data() + value.size();
  const auto r = std::from_chars(value.data(), end, out);
  if (value.empty() || r.ec != std::errc() || r.ptr != end) bad_value(key, value, "a number");
  return out;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& value) {
  Int out = 0;
  const char* end = value.data() + value.size();
  const auto r = std::from_chars(value.data(), end, out);
  if (value.empty() || r.ec != std::errc() || r.ptr != end) bad_value(key, value, "an integer");
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  bad_value(key, value, "true or false");
}

std::string number(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string canonical_model(const std::string& key, const std::string& value) {
  if (value == "free") return "free";
  if (value == "linear" || value == "linear-field" || value == "field") return "linear";
  if (value == "harmonic" || value == "oscillator") return "harmonic";
  if (value == "well" || value == "square-well") return "well";
  bad_value(key, value, "free, linear, harmonic or well");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "model",        "F",          "k",           "c",           "a",
      "b",            "e-min",      "e-max",       "step",        "pole-split",
      "param",        "grid-min",   "grid-max",    "grid-points", "output",
      "format",       "green-convention", "residual-factor", "max-samples", "pairs",
      "threads",      "f-min",      "f-max",       "oracle-e-min", "oracle-e-max",
      "oracle-points", "oracle-terms", "oracle-tolerance"};
  return keys;
}

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "model") {
    cfg.model = canonical_model(key, value);
  } else if (key == "F") {
    cfg.F = to_double(key, value);
  } else if (key == "k") {
    cfg.k = to_double(key, value);
  } else if (key == "c") {
    cfg.c = to_double(key, value);
  } else if (key == "a") {
    cfg.a = to_double(key, value);
  } else if (key == "b") {
    cfg.b = to_double(key, value);
  } else if (key == "e-min") {
    cfg.e_min = to_double(key, value);
  } else if (key == "e-max") {
    cfg.e_max = to_double(key, value);
  } else if (key == "step") {
    cfg.step = to_double(key, value);
  } else if (key == "pole-split") {
    cfg.pole_split = to_bool(key, value);
  } else if (key == "param") {
    if (!parse_parameter(value)) bad_value(key, value, "one of a, b, F, k, c");
    cfg.param = value;
  } else if (key == "grid-min") {
    cfg.grid_min = to_double(key, value);
  } else if (key == "grid-max") {
    cfg.grid_max = to_double(key, value);
  } else if (key == "grid-points") {
    cfg.grid_points = to_integer<int>(key, value);
    if (cfg.grid_points < 1) bad_value(key, value, "a positive integer");
  } else if (key == "output") {
    if (value.empty()) bad_value(key, value, "a path or '-'");
    cfg.output = value;
  } else if (key == "format") {
    if (value != "csv" && value != "json") bad_value(key, value, "csv or json");
    cfg.format = value;
  } else if (key == "green-convention") {
    if (value != "standard" && value != "spectral") bad_value(key, value, "standard or spectral");
    cfg.green_convention = value;
  } else if (key == "residual-factor") {
    cfg.residual_factor = to_double(key, value);
    if (!(cfg.residual_factor > 0.0)) bad_value(key, value, "a positive number");
  } else if (key == "max-samples") {
    cfg.max_samples = to_integer<long>(key, value);
    if (cfg.max_samples < 10) bad_value(key, value, "an integer >= 10");
  } else if (key == "pairs") {
    cfg.pairs = to_integer<int>(key, value);
    if (cfg.pairs < 1) bad_value(key, value, "a positive integer");
  } else if (key == "threads") {
    cfg.threads = to_integer<int>(key, value);
    if (cfg.threads < 0) bad_value(key, value, "a non-negative integer");
  } else if (key == "f-min") {
    cfg.f_min = to_double(key, value);
  } else if (key == "f-max") {
    cfg.f_max = to_double(key, value);
  } else if (key == "oracle-e-min") {
    cfg.oracle_e_min = to_double(key, value);
  } else if (key == "oracle-e-max") {
    cfg.oracle_e_max = to_double(key, value);
  } else if (key == "oracle-points") {
    cfg.oracle_points = to_integer<int>(key, value);
    if (cfg.oracle_points < 1) bad_value(key, value, "a positive integer");
  } else if (key == "oracle-terms") {
    cfg.oracle_terms = to_integer<long>(key, value);
  } else if (key == "oracle-tolerance") {
    cfg.oracle_tolerance = to_double(key, value);
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    set_config_value(cfg, key, line.substr(eq + 1));
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  auto put = [&](const char* key, const std::string& value) { out << key << " = " << value << '\n'; };
  put("model", cfg.model);
  put("F", number(cfg.F));
  put("k", number(cfg.k));
  put("c", number(cfg.c));
  put("a", number(cfg.a));
  put("b", number(cfg.b));
  if (cfg.e_min) put("e-min", number(*cfg.e_min));
  if (cfg.e_max) put("e-max", number(*cfg.e_max));
  if (cfg.step) put("step", number(*cfg.step));
  put("pole-split", cfg.pole_split ? "true" : "false");
  if (cfg.param) put("param", *cfg.param);
  if (cfg.grid_min) put("grid-min", number(*cfg.grid_min));
  if (cfg.grid_max) put("grid-max", number(*cfg.grid_max));
  put("grid-points", std::to_string(cfg.grid_points));
  put("output", cfg.output);
  put("format", cfg.format);
  put("green-convention", cfg.green_convention);
  put("residual-factor", number(cfg.residual_factor));
  put("max-samples", std::to_string(cfg.max_samples));
  put("pairs", std::to_string(cfg.pairs));
  put("threads", std::to_string(cfg.threads));
  put("f-min", number(cfg.f_min));
  put("f-max", number(cfg.f_max));
  put("oracle-e-min", number(cfg.oracle_e_min));
  put("oracle-e-max", number(cfg.oracle_e_max));
  put("oracle-points", std::to_string(cfg.oracle_points));
  put("oracle-terms", std::to_string(cfg.oracle_terms));
  put("oracle-tolerance", number(cfg.oracle_tolerance));
  return out.str();
}

PotentialModel make_model(const RunConfig& cfg) {
  PotentialModel m = Free{};
  if (cfg.model == "linear") m = LinearField{cfg.F};
  if (cfg.model == "harmonic") m = Harmonic{cfg.k};
  if (cfg.model == "well") m = SquareWell{cfg.c};
  try {
    validate(m);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return m;
}

Coupling make_coupling(const RunConfig& cfg) { return {cfg.a, cfg.b}; }

GreenConvention make_convention(const RunConfig& cfg) {
  return cfg.green_convention == "spectral" ? GreenConvention::Spectral : GreenConvention::Standard;
}

RootOptions make_root_options(const RunConfig& cfg) {
  RootOptions o;
  o.convention = make_convention(cfg);
  o.residual_factor = cfg.residual_factor;
  o.max_samples = static_cast<std::size_t>(cfg.max_samples);
  return o;
}

ScanWindow make_window(const RunConfig& cfg) {
  ScanWindow w = default_window(make_model(cfg), make_coupling(cfg));
  if (cfg.e_min) w.E_min = *cfg.e_min;
  if (cfg.e_max) w.E_max = *cfg.e_max;
  w.step = cfg.step ? *cfg.step : (w.E_max - w.E_min) / 4000.0;
  w.pole_split = cfg.pole_split;
  return w;
}

}  // namespace pointspec
