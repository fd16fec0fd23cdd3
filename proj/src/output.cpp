#include "pointspec/output.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace pointspec {
namespace {

using nlohmann::ordered_json;

ordered_json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

// Values in Meta are preformatted text; numbers go to JSON as numbers.
ordered_json meta_value(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, v);
  if (!text.empty() && r.ec == std::errc() && r.ptr == end) return v;
  if (text == "true") return true;
  if (text == "false") return false;
  return text;
}

ordered_json root_json(const EnergyRoot& r, std::size_t index) {
  ordered_json j;
  j["index"] = index;
  j["re_energy"] = number_json(r.E.real());
  j["im_energy"] = number_json(r.E.imag());
  j["residual"] = number_json(r.residual);
  j["kind"] = std::string(kind_name(r.kind));
  if (r.bracket) {
    j["bracket"] = ordered_json::array({number_json(r.bracket->first), number_json(r.bracket->second)});
  } else {
    j["bracket"] = nullptr;
  }
  j["iterations"] = r.iterations;
  return j;
}

void add_meta(ordered_json& j, const Meta& meta) {
  for (const auto& [k, v] : meta) j[k] = meta_value(v);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void sweep_rows(std::ostringstream& out, const SweepResult& result, const std::string& prefix) {
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    for (std::size_t r = 0; r < result.roots[i].size(); ++r) {
      const EnergyRoot& root = result.roots[i][r];
      out << format_number(result.grid[i]) << ',' << prefix << '#' << result.branch[i][r] << ','
          << format_number(root.E.real()) << ',' << format_number(root.E.imag()) << '\n';
    }
  }
}

ordered_json sweep_body(const SweepResult& result, const std::string& prefix) {
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    for (std::size_t r = 0; r < result.roots[i].size(); ++r) {
      const EnergyRoot& root = result.roots[i][r];
      ordered_json p;
      p["param"] = number_json(result.grid[i]);
      p["branch"] = prefix + "#" + std::to_string(result.branch[i][r]);
      p["re_energy"] = number_json(root.E.real());
      p["im_energy"] = number_json(root.E.imag());
      p["residual"] = number_json(root.residual);
      p["kind"] = std::string(kind_name(root.kind));
      points.push_back(std::move(p));
    }
  }
  ordered_json j;
  j["parameter"] = std::string(parameter_name(result.parameter));
  j["grid_points"] = result.grid.size();
  j["points"] = std::move(points);
  j["warnings"] = result.warnings;
  return j;
}

ordered_json report_json(const SpectralSumReport& r) {
  ordered_json j;
  j["model"] = r.model;
  j["quantity"] = r.quantity;
  j["E"] = number_json(r.E);
  j["E_ref"] = r.E_ref ? number_json(*r.E_ref) : ordered_json(nullptr);
  j["closed_form"] = number_json(r.closed_form);
  j["spectral_sum"] = number_json(r.spectral_sum);
  j["n_terms"] = r.n_terms;
  j["tail_estimate"] = number_json(r.tail_estimate);
  j["ratio"] = number_json(r.ratio);
  j["warning"] = r.warning;
  return j;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

std::string roots_csv(const std::vector<EnergyRoot>& roots) {
  std::ostringstream out;
  out << "index,re_energy,im_energy,residual,kind\n";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out << i << ',' << format_number(roots[i].E.real()) << ',' << format_number(roots[i].E.imag()) << ','
        << format_number(roots[i].residual) << ',' << kind_name(roots[i].kind) << '\n';
  }
  return out.str();
}

std::string roots_json(const std::vector<EnergyRoot>& roots, const Meta& meta) {
  ordered_json j;
  add_meta(j, meta);
  j["roots"] = ordered_json::array();
  for (std::size_t i = 0; i < roots.size(); ++i) j["roots"].push_back(root_json(roots[i], i));
  return dump(j);
}

std::string sweep_csv(const SweepResult& result, const std::string& prefix) {
  std::ostringstream out;
  out << "param,branch,re_energy,im_energy\n";
  sweep_rows(out, result, prefix);
  return out.str();
}

std::string sweep_json(const SweepResult& result, const Meta& meta) {
  ordered_json j;
  add_meta(j, meta);
  for (auto& [k, v] : sweep_body(result, "").items()) j[k] = v;
  return dump(j);
}

std::string figure_csv(const FigureData& data) {
  std::ostringstream out;
  out << "param,branch,re_energy,im_energy\n";
  for (const FigureSeries& s : data.series) sweep_rows(out, s.result, s.label);
  return out.str();
}

std::string figure_json(const FigureData& data) {
  ordered_json j;
  j["figure"] = data.number;
  j["parameter"] = std::string(parameter_name(data.parameter));
  j["series"] = ordered_json::array();
  for (const FigureSeries& s : data.series) {
    ordered_json series;
    series["label"] = s.label;
    for (auto& [k, v] : sweep_body(s.result, s.label).items()) series[k] = v;
    j["series"].push_back(std::move(series));
  }
  return dump(j);
}

std::string reports_csv(const std::vector<SpectralSumReport>& reports) {
  std::ostringstream out;
  out << "model,quantity,E,closed_form,spectral_sum,n_terms,tail_estimate,ratio\n";
  for (const auto& r : reports) {
    out << r.model << ',' << r.quantity << ',' << format_number(r.E) << ',' << format_number(r.closed_form) << ','
        << format_number(r.spectral_sum) << ',' << r.n_terms << ',' << format_number(r.tail_estimate) << ','
        << format_number(r.ratio) << '\n';
  }
  return out.str();
}

std::string reports_json(const std::vector<SpectralSumReport>& reports, const Meta& meta, bool passed) {
  ordered_json j;
  add_meta(j, meta);
  j["passed"] = passed;
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(report_json(r));
  return dump(j);
}

std::string scalar_csv(const Meta& fields) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
  out << '\n';
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
  out << '\n';
  return out.str();
}

std::string scalar_json(const Meta& fields) {
  ordered_json j;
  add_meta(j, fields);
  return dump(j);
}

}  // namespace pointspec
