#include "casimir/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "casimir/error.hpp"
#include "casimir/kernels.hpp"

namespace casimir {

std::string to_string(SweepAxis axis) { return axis == SweepAxis::Phi ? "phi" : "R"; }

std::optional<SweepAxis> parse_axis(const std::string& text) {
  if (text == "phi") return SweepAxis::Phi;
  if (text == "R") return SweepAxis::R;
  return std::nullopt;
}

namespace {

SweepRow evaluate_row(const CavitySpec& base, SweepAxis axis, double value, const ForceOptions& opts) {
  SweepRow row{value, std::nullopt, {}};
  CavitySpec spec = base;
  (axis == SweepAxis::Phi ? spec.phi : spec.R) = value;
  try {
    row.result = total_forces(spec, opts);
  } catch (const Error& e) {
    row.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return row;
}

}  // namespace

SweepTable sweep(const CavitySpec& base, SweepAxis axis, const std::vector<double>& values,
                 const SweepOptions& opts) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i - 1] < values[i]))
      throw Error(ErrorKind::InvalidArgument, "values", "sweep values must be strictly increasing");

  SweepTable table{axis, base, std::vector<SweepRow>(values.size())};
  const int workers = std::clamp(opts.workers, 1, std::max<int>(1, static_cast<int>(values.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < values.size(); ++i) table.rows[i] = evaluate_row(base, axis, values[i], opts.force);
    return table;
  }

  // Rows land in their own slots, so the table is independent of scheduling.
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < values.size(); i += static_cast<std::size_t>(workers))
        table.rows[i] = evaluate_row(base, axis, values[i], opts.force);
    });
  }
  pool.clear();
  return table;
}

OptimumReport optimize_phi(const CavitySpec& base, double lo, double hi, double tol, const OptimizeOptions& opts) {
  if (!(lo > 0.0 && lo < hi && hi < std::numbers::pi / 4))
    throw Error(ErrorKind::InvalidArgument, "bracket", "bracket must satisfy 0 < lo < hi < pi/4");
  if (!(tol >= 1e-6)) throw Error(ErrorKind::InvalidArgument, "tol", "optimizer tolerance must be at least 1e-6");
  if (opts.prescan_points < 3)
    throw Error(ErrorKind::InvalidArgument, "prescan_points", "prescan needs at least 3 points");

  ForceOptions force_opts;
  force_opts.rel_tol = opts.rel_tol;
  force_opts.wing_count = opts.wing_count;
  auto expulsion = [&](double phi) {
    CavitySpec spec = base;
    spec.phi = phi;
    return total_forces(spec, force_opts).f_x;
  };

  OptimumReport report;
  const int n = opts.prescan_points;
  report.grid_prescan.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double phi = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
    report.grid_prescan.emplace_back(phi, expulsion(phi));
  }

  auto magnitude = [&](int i) { return std::abs(report.grid_prescan[static_cast<std::size_t>(i)].second); };
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (magnitude(i) > magnitude(best)) best = i;
  if (best == 0 || best == n - 1) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "largest |f_x| of the prescan sits at the bracket edge phi = " << report.grid_prescan[best].first;
    throw Error(ErrorKind::NoInteriorMaximum, "phi", msg.str());
  }
  int peaks = 0;
  for (int i = 1; i + 1 < n; ++i)
    if (magnitude(i) > magnitude(i - 1) && magnitude(i) >= magnitude(i + 1)) ++peaks;
  if (peaks != 1)
    throw Error(ErrorKind::NoInteriorMaximum, "phi",
                "prescan of |f_x| shows " + std::to_string(peaks) + " interior peaks, expected one");

  double left = report.grid_prescan[best - 1].first;
  double right = report.grid_prescan[best + 1].first;
  report.bracket = {left, right};

  // Golden-section search for the maximum of |f_x|; the retained interior
  // point is always the best one evaluated so far.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = right - inv_phi * (right - left);
  double x2 = left + inv_phi * (right - left);
  double f1 = std::abs(expulsion(x1));
  double f2 = std::abs(expulsion(x2));
  while (right - left > tol) {
    ++report.iterations;
    if (f1 >= f2) {
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - inv_phi * (right - left);
      f1 = std::abs(expulsion(x1));
    } else {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + inv_phi * (right - left);
      f2 = std::abs(expulsion(x2));
    }
  }
  report.phi_star = f1 >= f2 ? x1 : x2;
  report.f_x_star = expulsion(report.phi_star);
  return report;
}

RescaleReport rescale_report(const CavitySpec& spec, double lambda, const ForceOptions& opts) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw Error(ErrorKind::InvalidArgument, "lambda", "scale factor must be positive and finite");

  ForceOptions work_opts = opts;
  work_opts.k_override = opts.k_override.value_or(pressure_prefactor(spec.units));
  CavitySpec base = spec;
  base.units = Units::SI;
  CavitySpec scaled = base;
  scaled.a *= lambda;
  scaled.R *= lambda;

  RescaleReport report;
  report.lambda = lambda;
  report.base = total_forces(base, work_opts);
  report.scaled = total_forces(scaled, work_opts);
  report.base.spec = spec;
  report.force_ratio = report.scaled.f_z / report.base.f_z;
  if (std::abs(report.base.f_x) > 1e-8 * std::abs(report.base.f_z))
    report.expulsion_ratio = report.scaled.f_x / report.base.f_x;
  report.expected_force_ratio = 1.0 / (lambda * lambda * lambda);

  const double p_base = specific_pressures(base, 0.5 * base.R, work_opts.k_override).p_z;
  const double p_scaled = specific_pressures(scaled, 0.5 * scaled.R, work_opts.k_override).p_z;
  report.pressure_ratio = p_scaled / p_base;
  report.expected_pressure_ratio = report.expected_force_ratio / lambda;

  report.force_deviation = std::abs(report.force_ratio / report.expected_force_ratio - 1.0);
  if (report.expulsion_ratio)
    report.force_deviation =
        std::max(report.force_deviation, std::abs(*report.expulsion_ratio / report.expected_force_ratio - 1.0));
  report.pressure_deviation = std::abs(report.pressure_ratio / report.expected_pressure_ratio - 1.0);
  return report;
}

}  // namespace casimir
