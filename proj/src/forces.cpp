#include "casimir/forces.hpp"

#include <cmath>

#include "casimir/error.hpp"
#include "casimir/geometry.hpp"
#include "casimir/kernels.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

ForceResult total_forces(const CavitySpec& spec, const ForceOptions& opts) {
  validate(spec);
  if (opts.wing_count != 1 && opts.wing_count != 2)
    throw Error(ErrorKind::InvalidArgument, "wing_count", "wing_count must be 1 or 2");

  // Integrate in gap-normalized units; F = (K L / a^3) * integral of the reduced pressures over rho.
  const double span = spec.R / spec.a;
  const double k = opts.k_override.value_or(pressure_prefactor(spec.units));
  const double scale = k * spec.L / (spec.a * spec.a * spec.a);

  QuadratureOptions qz;
  qz.rel_tol = opts.rel_tol;
  const QuadratureResult iz =
      integrate_adaptive([&](double rho) { return reduced_pressures(spec, rho).p_z; }, 0.0, span, qz);

  QuadratureOptions qx = qz;
  qx.abs_tol = opts.rel_tol * std::abs(iz.value);
  const QuadratureResult ix =
      integrate_adaptive([&](double rho) { return reduced_pressures(spec, rho).p_x; }, 0.0, span, qx);

  ForceResult out;
  out.spec = spec;
  out.wing_count = opts.wing_count;
  out.converged = iz.converged && ix.converged;
  out.evaluations = iz.evaluations + ix.evaluations;
  out.f_x = scale * ix.value;
  out.f_z = scale * iz.value;
  out.err_x = std::abs(scale) * ix.error_estimate;
  out.err_z = std::abs(scale) * iz.error_estimate;
  if (opts.wing_count == 2) {
    out.f_x *= 2.0;
    out.err_x *= 2.0;
    out.f_z = 0.0;
    out.err_z = 0.0;
  }
  return out;
}

PressureProfile pressure_profile(const CavitySpec& spec, int n, std::optional<double> k_override) {
  validate(spec);
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "samples", "a profile needs at least 2 samples");
  PressureProfile profile{spec, {}};
  profile.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = i + 1 == n ? spec.R : spec.R * i / (n - 1);
    profile.samples.push_back(specific_pressures(spec, r, k_override));
  }
  return profile;
}

}  // namespace casimir
