#pragma once

// Run configuration shared by every CLI subcommand: a flat "key = value"
// text format with '#' comments. Unknown or repeated keys are rejected.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pointspec/greens.hpp"
#include "pointspec/solver.hpp"

namespace pointspec {

struct RunConfig {
  std::string model = "free";  // free | linear | harmonic | well
  double F = 1.0;
  double k = 1.0;
  double c = 1.0;
  double a = 1.0;
  double b = 0.0;
  std::optional<double> e_min;
  std::optional<double> e_max;
  std::optional<double> step;
  bool pole_split = true;
  std::optional<std::string> param;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  int grid_points = 400;
  std::string output = "-";
  std::string format = "csv";  // csv | json
  std::string green_convention = "standard";
  double residual_factor = 1e-10;
  long max_samples = 400000;
  int pairs = 3;
  int threads = 0;
  double f_min = 1e-3;
  double f_max = 2.0;
  double oracle_e_min = -10.0;
  double oracle_e_max = -0.1;
  int oracle_points = 20;
  long oracle_terms = 4096;
  double oracle_tolerance = 1e-6;

  bool operator==(const RunConfig&) const = default;
};

/// Every accepted key, in serialization order.
const std::vector<std::string>& config_keys();

/// Sets one key from its text value; ConfigError for unknown keys or bad values.
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);

/// Parses the flat text format onto the defaults.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical text: every key with a value, in config_keys() order, numbers in
/// shortest round-trip form.
std::string serialize_config(const RunConfig& config);

PotentialModel make_model(const RunConfig& config);
Coupling make_coupling(const RunConfig& config);
GreenConvention make_convention(const RunConfig& config);
RootOptions make_root_options(const RunConfig& config);
/// Window from e-min/e-max/step where given, default_window otherwise.
ScanWindow make_window(const RunConfig& config);

}  // namespace pointspec
