#pragma once

#include "casimir/types.hpp"

/// Brute-force reference computations. Nothing here calls into the primary
/// geometry, kernel or quadrature code: points M0..M3 are built explicitly,
/// angles come from dot products, ray lengths from line intersection, and the
/// forces from dense midpoint sums of the per-ray pressure.
namespace casimir::oracle {

/// Limit angles from the raw vectors M0M1, M1M2, M1M3. At r = 0 the generatrix
/// direction (cos phi, sin phi) stands in for the undefined M0M1.
AngleWindow limit_angles_vector(const CavitySpec& spec, double r);

/// Distance from M1 to the segment M3M2 along the ray at angle theta from the
/// generatrix, by solving the 2x2 intersection system.
double ray_length_vector(const CavitySpec& spec, double r, double theta);

/// Specific forces at r from a midpoint sum over n_theta rays of -K / b^4.
PressureSample riemann_pressures(const CavitySpec& spec, double r, int n_theta);

/// Double midpoint sum over (r, theta) of the per-ray pressure projected on
/// sin(theta - phi) (compression) and -cos(theta - phi) (expulsion), times L.
/// Rows are summed independently and reduced pairwise, so the result does not
/// depend on `workers`.
ForceResult riemann_forces(const CavitySpec& spec, int n_r, int n_theta, int workers = 1);

}  // namespace casimir::oracle
