#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/forces.hpp"
#include "casimir/types.hpp"

namespace casimir {

enum class SweepAxis { Phi, R };

std::string to_string(SweepAxis axis);
std::optional<SweepAxis> parse_axis(const std::string& text);

struct SweepRow {
  double param = 0.0;
  std::optional<ForceResult> result;  ///< empty when the row failed
  std::string error;                  ///< diagnostic for a failed row

  bool converged() const { return result && result->converged; }
};

struct SweepTable {
  SweepAxis axis = SweepAxis::Phi;
  CavitySpec base;
  std::vector<SweepRow> rows;
};

struct SweepOptions {
  ForceOptions force;
  int workers = 1;
};

/// One total_forces evaluation per value of the swept parameter. Rows are
/// evaluated independently (in parallel when workers > 1); a failing row is
/// flagged and the sweep continues. Values must be strictly increasing.
SweepTable sweep(const CavitySpec& base, SweepAxis axis, const std::vector<double>& values,
                 const SweepOptions& opts = {});

struct OptimizeOptions {
  double rel_tol = 1e-12;
  int prescan_points = 32;
  int wing_count = 1;
};

struct OptimumReport {
  double phi_star = 0.0;
  double f_x_star = 0.0;
  std::pair<double, double> bracket;
  int iterations = 0;
  std::vector<std::pair<double, double>> grid_prescan;  ///< (phi, f_x)
};

/// Half-angle maximizing |F_x|. A uniform prescan over [lo, hi] must show a
/// single interior peak; golden-section search then narrows the bracket
/// around it to width `tol`.
OptimumReport optimize_phi(const CavitySpec& base, double lo, double hi, double tol = 1e-5,
                           const OptimizeOptions& opts = {});

struct RescaleReport {
  double lambda = 1.0;
  ForceResult base;
  ForceResult scaled;
  double force_ratio = 1.0;            ///< F_z(scaled) / F_z(base)
  std::optional<double> expulsion_ratio;  ///< F_x ratio, absent when F_x vanishes
  double expected_force_ratio = 1.0;   ///< lambda^-3
  double pressure_ratio = 1.0;         ///< p_z at the mid-wing point
  double expected_pressure_ratio = 1.0;  ///< lambda^-4
  double force_deviation = 0.0;        ///< relative deviation from lambda^-3
  double pressure_deviation = 0.0;     ///< relative deviation from lambda^-4
};

/// Forces and mid-wing pressures at spec and at (a, R) scaled by lambda,
/// compared against the dimensional scaling laws at fixed width L. Reduced
/// specs are rescaled as dimensional cavities with K = 1.
RescaleReport rescale_report(const CavitySpec& spec, double lambda, const ForceOptions& opts = {});

}  // namespace casimir
