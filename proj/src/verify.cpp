#include "casimir/verify.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/error.hpp"
#include "casimir/forces.hpp"
#include "casimir/geometry.hpp"
#include "casimir/kernels.hpp"
#include "casimir/oracle.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {
namespace {

// Deviation relative to max(|oracle|, scale); scale keeps near-zero references meaningful.
OracleReport compare(std::string quantity, double closed_form, double oracle, double tolerance, double scale) {
  const double denom = std::max(std::abs(oracle), scale);
  const double dev = denom > 0.0 ? std::abs(closed_form - oracle) / denom : std::abs(closed_form - oracle);
  return {std::move(quantity), closed_form, oracle, dev, tolerance, std::isfinite(dev) && dev <= tolerance};
}

OracleReport failure(std::string quantity, const std::exception& e) {
  OracleReport r;
  r.quantity = std::move(quantity) + " (" + e.what() + ")";
  r.closed_form = std::nan("");
  r.oracle = std::nan("");
  r.relative_deviation = std::nan("");
  r.pass = false;
  return r;
}

template <class F>
void guarded(std::vector<OracleReport>& out, const std::string& quantity, F&& check) {
  try {
    check();
  } catch (const std::exception& e) {
    out.push_back(failure(quantity, e));
  }
}

}  // namespace

std::vector<OracleReport> verify_suite(const CavitySpec& spec, const VerifyOptions& opts) {
  std::vector<OracleReport> out;
  guarded(out, "cavity", [&] { validate(spec); });
  if (!out.empty()) return out;

  // Angles: worst deviation over a uniform grid including both endpoints.
  guarded(out, "limit_angles", [&] {
    double worst1 = 0.0, worst2 = 0.0;
    AngleWindow at1{}, at2{}, ref1{}, ref2{};
    for (int i = 0; i < opts.angle_samples; ++i) {
      const double r = i + 1 == opts.angle_samples ? spec.R : spec.R * i / (opts.angle_samples - 1);
      const AngleWindow w = limit_angles(spec, r);
      const AngleWindow v = oracle::limit_angles_vector(spec, r);
      if (std::abs(w.theta1 - v.theta1) >= worst1) { worst1 = std::abs(w.theta1 - v.theta1); at1 = w; ref1 = v; }
      if (std::abs(w.theta2 - v.theta2) >= worst2) { worst2 = std::abs(w.theta2 - v.theta2); at2 = w; ref2 = v; }
    }
    out.push_back(compare("theta1", at1.theta1, ref1.theta1, 1e-12, 1.0));
    out.push_back(compare("theta2", at2.theta2, ref2.theta2, 1e-12, 1.0));
  });

  const double r_mid = 0.5 * spec.R;
  guarded(out, "s_factor", [&] {
    const AngleWindow w = limit_angles(spec, r_mid);
    const double theta = 0.5 * (w.theta1 + w.theta2);
    const double ray = oracle::ray_length_vector(spec, r_mid, theta);
    out.push_back(compare("s_factor", s_factor(spec, r_mid), ray * std::sin(theta - 2.0 * spec.phi), 1e-10, 0.0));
  });
  guarded(out, "ray_length", [&] {
    const double r = 0.25 * spec.R;
    const AngleWindow w = limit_angles(spec, r);
    out.push_back(compare("ray_length_theta1", ray_length(spec, r, w.theta1),
                          oracle::ray_length_vector(spec, r, w.theta1), 1e-10, 0.0));
    out.push_back(compare("ray_length_theta2", ray_length(spec, r, w.theta2),
                          oracle::ray_length_vector(spec, r, w.theta2), 1e-10, 0.0));
  });

  guarded(out, "inner_integrals", [&] {
    const AngleWindow w = limit_angles(spec, r_mid);
    QuadratureOptions q;
    q.rel_tol = 1e-13;
    const double qz = integrate_adaptive([&](double t) { return integrand_z(t, spec.phi); }, w.theta1, w.theta2, q).value;
    const double qx = integrate_adaptive([&](double t) { return integrand_x(t, spec.phi); }, w.theta1, w.theta2, q).value;
    out.push_back(compare("inner_integral_z", inner_integral_z(w, spec.phi), qz, 1e-10, 0.0));
    out.push_back(compare("inner_integral_x", inner_integral_x(w, spec.phi), qx, 1e-10, std::abs(qz)));
  });

  guarded(out, "pressures", [&] {
    const PressureSample p = specific_pressures(spec, r_mid, opts.primary_k_override);
    const int n = 4 * opts.riemann_n;
    const PressureSample coarse = oracle::riemann_pressures(spec, r_mid, n);
    const PressureSample fine = oracle::riemann_pressures(spec, r_mid, 2 * n);
    const double ref_z = (4.0 * fine.p_z - coarse.p_z) / 3.0;
    const double ref_x = (4.0 * fine.p_x - coarse.p_x) / 3.0;
    out.push_back(compare("p_z_mid", p.p_z, ref_z, 1e-6, 0.0));
    out.push_back(compare("p_x_mid", p.p_x, ref_x, 1e-6, std::abs(ref_z)));
  });

  guarded(out, "forces", [&] {
    ForceOptions fo;
    fo.k_override = opts.primary_k_override;
    fo.rel_tol = 1e-11;
    const ForceResult f = total_forces(spec, fo);
    const int n = opts.riemann_n;
    const ForceResult coarse = oracle::riemann_forces(spec, n, n, opts.workers);
    const ForceResult fine = oracle::riemann_forces(spec, 2 * n, 2 * n, opts.workers);
    const double ref_z = (4.0 * fine.f_z - coarse.f_z) / 3.0;
    const double ref_x = (4.0 * fine.f_x - coarse.f_x) / 3.0;
    out.push_back(compare("f_z", f.f_z, ref_z, opts.force_tolerance, 0.0));
    out.push_back(compare("f_x", f.f_x, ref_x, opts.force_tolerance, 1e-3 * std::abs(ref_z)));
  });

  return out;
}

bool all_pass(const std::vector<OracleReport>& reports) {
  return !reports.empty() && std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace casimir
