#pragma once

#include <optional>

#include "casimir/types.hpp"

namespace casimir {

/// Casimir energy per unit plate area, -K / (3 a^3).
double casimir_energy_per_area(double a, double k = PhysicalConstants::codata().k());

/// Classical parallel-plate pressure T^33 = 3 E_c / a = -K / a^4.
double classical_casimir_pressure(double a, double k = PhysicalConstants::codata().k());

/// Pressure carried by a single ray of length b, -K / b^4.
double local_ray_pressure(double b, double k = PhysicalConstants::codata().k());

/// Closed form of the integral of sin^4(theta - 2 phi) sin(theta - phi) over the window.
double inner_integral_z(const AngleWindow& w, double phi);

/// Closed form of the integral of sin^4(theta - 2 phi) cos(theta - phi) over the window.
double inner_integral_x(const AngleWindow& w, double phi);

/// Angular integrands matching the closed forms above.
double integrand_z(double theta, double phi);
double integrand_x(double theta, double phi);

/// Specific forces at wing coordinate r, in the units of `spec`.
///   p_z = -(K / s^4) inner_integral_z,  p_x = +(K / s^4) inner_integral_x
/// Evaluation happens on the gap-normalized cavity; `k_override` replaces the
/// prefactor K of the units mode.
PressureSample specific_pressures(const CavitySpec& spec, double r,
                                  std::optional<double> k_override = std::nullopt);

/// Same as above in gap-normalized units (a = 1, K = 1) at rho = r / a.
PressureSample reduced_pressures(const CavitySpec& spec, double rho);

}  // namespace casimir
