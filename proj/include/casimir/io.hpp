#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "casimir/analysis.hpp"
#include "casimir/forces.hpp"
#include "casimir/verify.hpp"

namespace casimir::io {

/// 17 significant digits, independent of the global locale.
std::string format_number(double v);

/// Header `r,p_x,p_z`, one line per sample.
std::string emit_csv(const PressureProfile& profile);
/// Header `param,f_x,f_z,err_x,err_z,converged`, one line per row.
std::string emit_csv(const SweepTable& table);

nlohmann::json to_json(const CavitySpec& spec);
nlohmann::json to_json(const ForceResult& result);
nlohmann::json to_json(const PressureProfile& profile);
nlohmann::json to_json(const SweepTable& table);
nlohmann::json to_json(const OptimumReport& report);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const std::vector<OracleReport>& reports, const CavitySpec& spec);
nlohmann::json error_json(const std::string& kind, const std::string& field, const std::string& message);

/// Serialized JSON with a trailing newline.
std::string dump(const nlohmann::json& doc);

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::optional<double> reference_y;  ///< drawn as an extra dashed polyline
  std::string reference_label;
  int width = 640;
  int height = 400;
};

/// Throws InvalidArgument unless there is at least one series, every series
/// has two or more points and every coordinate is finite.
void check_plot(const PlotSpec& plot);

/// Single-panel line chart. A flat y range is padded rather than rejected.
std::string emit_svg(const PlotSpec& plot);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace casimir::io
