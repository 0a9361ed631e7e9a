#include <cmath>
#include <numbers>

#include "casimir/io.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::io {

using nlohmann::json;

json to_json(const CavitySpec& spec) {
  return {{"a", spec.a},
          {"R", spec.R},
          {"L", spec.L},
          {"phi", spec.phi},
          {"phi_deg", spec.phi * 180.0 / std::numbers::pi},
          {"units", std::string(to_string(spec.units))}};
}

json to_json(const ForceResult& r) {
  return {{"f_x", r.f_x},
          {"f_z", r.f_z},
          {"err_x", r.err_x},
          {"err_z", r.err_z},
          {"converged", r.converged},
          {"evaluations", r.evaluations},
          {"wing_count", r.wing_count},
          {"method", std::string(QuadratureResult::method)},
          {"spec", to_json(r.spec)}};
}

json to_json(const PressureProfile& profile) {
  json samples = json::array();
  for (const auto& s : profile.samples) samples.push_back({{"r", s.r}, {"p_x", s.p_x}, {"p_z", s.p_z}});
  return {{"spec", to_json(profile.spec)}, {"samples", std::move(samples)}};
}

json to_json(const SweepTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json j = {{"param", row.param}, {"converged", row.converged()}};
    if (row.result) {
      j["f_x"] = row.result->f_x;
      j["f_z"] = row.result->f_z;
      j["err_x"] = row.result->err_x;
      j["err_z"] = row.result->err_z;
    } else {
      j["error"] = row.error;
    }
    rows.push_back(std::move(j));
  }
  return {{"axis", to_string(table.axis)}, {"base", to_json(table.base)}, {"rows", std::move(rows)}};
}

json to_json(const OptimumReport& report) {
  json grid = json::array();
  for (const auto& [phi, fx] : report.grid_prescan) grid.push_back({{"phi", phi}, {"f_x", fx}});
  return {{"phi_star", report.phi_star},
          {"phi_star_deg", report.phi_star * 180.0 / std::numbers::pi},
          {"f_x_star", report.f_x_star},
          {"bracket", {report.bracket.first, report.bracket.second}},
          {"iterations", report.iterations},
          {"grid_prescan", std::move(grid)}};
}

json to_json(const OracleReport& r) {
  return {{"quantity", r.quantity},
          {"closed_form", r.closed_form},
          {"oracle", r.oracle},
          {"relative_deviation", r.relative_deviation},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

json to_json(const std::vector<OracleReport>& reports, const CavitySpec& spec) {
  json checks = json::array();
  for (const auto& r : reports) checks.push_back(to_json(r));
  return {{"spec", to_json(spec)}, {"all_pass", all_pass(reports)}, {"checks", std::move(checks)}};
}

json error_json(const std::string& kind, const std::string& field, const std::string& message) {
  return {{"error", kind}, {"field", field}, {"message", message}};
}

std::string dump(const json& doc) { return doc.dump(2) + '\n'; }

}  // namespace casimir::io
