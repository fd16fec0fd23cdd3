#pragma once

// CSV and JSON renderings of solver results. CSV numbers carry 17
// significant digits and never depend on the process locale.

#include <string>
#include <utility>
#include <vector>

#include "pointspec/oracle.hpp"
#include "pointspec/solver.hpp"

namespace pointspec {

std::string format_number(double v);

using Meta = std::vector<std::pair<std::string, std::string>>;

/// Header `index,re_energy,im_energy,residual,kind`.
std::string roots_csv(const std::vector<EnergyRoot>& roots);
std::string roots_json(const std::vector<EnergyRoot>& roots, const Meta& meta);

/// Header `param,branch,re_energy,im_energy`; branch labels are `<prefix>#<id>`.
std::string sweep_csv(const SweepResult& result, const std::string& prefix = "");
std::string sweep_json(const SweepResult& result, const Meta& meta);

std::string figure_csv(const FigureData& data);
std::string figure_json(const FigureData& data);

std::string reports_csv(const std::vector<SpectralSumReport>& reports);
std::string reports_json(const std::vector<SpectralSumReport>& reports, const Meta& meta, bool passed);

/// One header line and one value line.
std::string scalar_csv(const Meta& fields);
std::string scalar_json(const Meta& fields);

}  // namespace pointspec
