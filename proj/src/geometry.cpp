#include "casimir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {
namespace {

constexpr double kClampSlack = 1e-12;
constexpr double kSineFloor = 1e-14;

double checked_acos(double arg, const char* which) {
  if (!std::isfinite(arg) || std::abs(arg) > 1.0 + kClampSlack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "arccos argument for " << which << " is " << arg;
    throw Error(ErrorKind::NumericDomain, which, msg.str());
  }
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

void check_coordinate(const CavitySpec& spec, double r) {
  if (!(r >= 0.0 && r <= spec.R)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "wing coordinate r = " << r << " outside [0, " << spec.R << "]";
    throw Error(ErrorKind::OutOfRange, "r", msg.str());
  }
}

}  // namespace

std::vector<Violation> violations(const CavitySpec& spec) {
  std::vector<Violation> out;
  if (!std::isfinite(spec.a) || spec.a <= 0.0) out.push_back({"a", "gap must be positive and finite"});
  if (!std::isfinite(spec.R) || spec.R <= 0.0) out.push_back({"R", "wing length must be positive and finite"});
  if (!std::isfinite(spec.L) || spec.L <= 0.0) out.push_back({"L", "width must be positive and finite"});
  if (!std::isfinite(spec.phi) || spec.phi < 0.0 || spec.phi >= std::numbers::pi / 4)
    out.push_back({"phi", "half-angle must lie in [0, pi/4)"});
  if (spec.units == Units::Reduced && spec.a != 1.0)
    out.push_back({"a", "reduced units fix the gap to 1"});
  return out;
}

void validate(const CavitySpec& spec) {
  const auto found = violations(spec);
  if (found.empty()) return;
  std::string message = "invalid cavity:";
  for (const auto& v : found) message += " " + v.field + " (" + v.reason + ");";
  message.pop_back();
  throw Error(ErrorKind::InvalidCavity, found.front().field, message);
}

WingPoint wing_point(const CavitySpec& spec, double r) {
  check_coordinate(spec, r);
  return {r, r * std::cos(spec.phi), r * std::sin(spec.phi)};
}

AngleWindow limit_angles(const CavitySpec& spec, double r) {
  check_coordinate(spec, r);
  const double a = spec.a;
  const double R = spec.R;
  const double sp = std::sin(spec.phi);
  const double cp = std::cos(spec.phi);

  // Ray to the far end M2 of the lower wing.
  const double dz = a + R * sp + r * sp;
  const double dx = r * cp - R * cp;
  const double arg1 = -(r + a * sp - R * std::cos(2.0 * spec.phi)) / std::hypot(dz, dx);
  // Ray to the near end M3.
  const double arg2 = -(r + a * sp) / std::sqrt(a * a + r * r + 2.0 * r * a * sp);

  AngleWindow w{checked_acos(arg1, "theta1"), checked_acos(arg2, "theta2")};
  if (!(w.theta1 < w.theta2)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "empty ray fan at r = " << r << ": theta1 = " << w.theta1 << ", theta2 = " << w.theta2;
    throw Error(ErrorKind::DegenerateFan, "phi", msg.str());
  }
  return w;
}

double s_factor(const CavitySpec& spec, double r) {
  if (spec.phi == 0.0) {
    check_coordinate(spec, r);
    return spec.a;
  }
  return s_factor(spec, r, limit_angles(spec, r));
}

double s_factor(const CavitySpec& spec, double r, const AngleWindow& window) {
  if (spec.phi == 0.0) return spec.a;
  const double den = std::sin(spec.phi - window.theta2);
  if (std::abs(den) <= kSineFloor)
    throw Error(ErrorKind::NumericDegeneracy, "theta2", "sin(phi - theta2) vanishes");
  const double s = std::sin(2.0 * spec.phi - window.theta2) * (spec.a + r * std::sin(spec.phi)) / den;
  if (!(s > 0.0)) throw Error(ErrorKind::NumericDegeneracy, "s", "non-positive ray scale");
  return s;
}

double ray_length(const CavitySpec& spec, double r, double theta) {
  const AngleWindow w = limit_angles(spec, r);
  if (theta < w.theta1 - kClampSlack || theta > w.theta2 + kClampSlack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "theta = " << theta << " outside the visible fan [" << w.theta1 << ", " << w.theta2 << "]";
    throw Error(ErrorKind::OutOfRange, "theta", msg.str());
  }
  const double sine = std::sin(theta - 2.0 * spec.phi);
  if (sine <= kSineFloor)
    throw Error(ErrorKind::NumericDegeneracy, "theta", "ray parallel to the opposite wing");
  return s_factor(spec, r, w) / sine;
}

}  // namespace casimir
