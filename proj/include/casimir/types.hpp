#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>

namespace casimir {

enum class Units { SI, Reduced };

std::string_view to_string(Units units);
std::optional<Units> parse_units(std::string_view text);

/// Symmetric trapezoid cavity. The upper wing runs from the apex M0 = (0, 0)
/// along (cos phi, sin phi); the lower wing runs from M3 = (0, -a) along
/// (cos phi, -sin phi). Both wings have length R and extend L along y.
struct CavitySpec {
  double a = 1.0;    ///< gap at the narrow end
  double R = 10.0;   ///< wing length
  double L = 1.0;    ///< width along y
  double phi = 0.0;  ///< half-opening angle, radians
  Units units = Units::Reduced;

  bool operator==(const CavitySpec&) const = default;
};

/// Limit angles of the visible ray fan at a wing point, measured from the
/// generatrix direction towards the opposite wing.
struct AngleWindow {
  double theta1 = 0.0;
  double theta2 = 0.0;

  double width() const { return theta2 - theta1; }
};

struct WingPoint {
  double r = 0.0;
  double x = 0.0;
  double z = 0.0;
};

/// Frozen CODATA values. `k()` is the per-ray pressure prefactor hbar c pi^2 / 240.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;  // J s
  double c = 2.99792458e8;        // m / s

  constexpr double k() const { return hbar * c * std::numbers::pi * std::numbers::pi / 240.0; }

  static constexpr PhysicalConstants codata() { return {}; }
};

/// Pressure prefactor K for a units mode: the CODATA value in SI, one in reduced units.
constexpr double pressure_prefactor(Units units) {
  return units == Units::SI ? PhysicalConstants::codata().k() : 1.0;
}

/// Specific forces at wing coordinate r. Negative p_z compresses the wing;
/// negative p_x pushes against the x axis.
struct PressureSample {
  double r = 0.0;
  double p_x = 0.0;
  double p_z = 0.0;
};

struct ForceResult {
  double f_x = 0.0;
  double f_z = 0.0;
  double err_x = 0.0;
  double err_z = 0.0;
  bool converged = true;
  int evaluations = 0;
  int wing_count = 1;
  CavitySpec spec;
};

}  // namespace casimir
