#include "casimir/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/error.hpp"
#include "casimir/geometry.hpp"

namespace casimir {
namespace {

void require_positive(double v, ErrorKind kind, const char* field) {
  if (!(v > 0.0)) throw Error(kind, field, std::string(field) + " must be positive");
}

double pow4(double v) {
  const double sq = v * v;
  return sq * sq;
}

// Integral of sin^5 over [u1, u2]. With t = 1 - cos u the antiderivative is
// P(t) = 4/3 t^3 - t^4 + t^5 / 5, so the difference factors as
// (t2 - t1) * B(t1, t2) with t2 - t1 computed from half-angle sines. Near
// u = pi the mirrored variable 1 + cos u is used instead, so B never cancels.
double sin5_integral(double u1, double u2) {
  const double d = 2.0 * std::sin(0.5 * (u2 - u1));
  const double m = 0.5 * (u1 + u2);
  const bool near_zero = std::cos(m) >= 0.0;
  auto shifted = [&](double u) {
    const double h = near_zero ? std::sin(0.5 * u) : std::cos(0.5 * u);
    return 2.0 * h * h;
  };
  const double t1 = shifted(u1);
  const double t2 = shifted(u2);
  const double s2 = t1 * t1 + t1 * t2 + t2 * t2;
  const double s3 = (t1 + t2) * (t1 * t1 + t2 * t2);
  const double s4 = t1 * t1 * t1 * t1 + t1 * t2 * s2 + t2 * t2 * t2 * t2;
  const double b = 4.0 / 3.0 * s2 - s3 + s4 / 5.0;
  return std::sin(m) * d * b;
}

// Integral of sin^4 u cos u over [u1, u2], (s2^5 - s1^5) / 5 in factored form.
double sin4cos_integral(double u1, double u2) {
  const double d = 2.0 * std::sin(0.5 * (u2 - u1));
  const double m = 0.5 * (u1 + u2);
  const double a = std::sin(u1);
  const double b = std::sin(u2);
  const double a2 = a * a;
  const double b2 = b * b;
  const double sum = a2 * a2 + a * b * (a2 + a * b + b2) + b2 * b2;
  return std::cos(m) * d * sum / 5.0;
}

}  // namespace

double casimir_energy_per_area(double a, double k) {
  require_positive(a, ErrorKind::NonPositiveGap, "a");
  return -k / (3.0 * a * a * a);
}

double classical_casimir_pressure(double a, double k) {
  require_positive(a, ErrorKind::NonPositiveGap, "a");
  return -k / pow4(a);
}

double local_ray_pressure(double b, double k) {
  require_positive(b, ErrorKind::NonPositiveRay, "b");
  return -k / pow4(b);
}

// With u = theta - 2 phi: sin(theta - phi) = sin u cos phi + cos u sin phi.
double inner_integral_z(const AngleWindow& w, double phi) {
  const double u1 = w.theta1 - 2.0 * phi;
  const double u2 = w.theta2 - 2.0 * phi;
  return std::cos(phi) * sin5_integral(u1, u2) + std::sin(phi) * sin4cos_integral(u1, u2);
}

// cos(theta - phi) = cos u cos phi - sin u sin phi.
double inner_integral_x(const AngleWindow& w, double phi) {
  const double u1 = w.theta1 - 2.0 * phi;
  const double u2 = w.theta2 - 2.0 * phi;
  return std::cos(phi) * sin4cos_integral(u1, u2) - std::sin(phi) * sin5_integral(u1, u2);
}

double integrand_z(double theta, double phi) {
  return pow4(std::sin(theta - 2.0 * phi)) * std::sin(theta - phi);
}

double integrand_x(double theta, double phi) {
  return pow4(std::sin(theta - 2.0 * phi)) * std::cos(theta - phi);
}

PressureSample reduced_pressures(const CavitySpec& spec, double rho) {
  const CavitySpec unit{1.0, spec.R / spec.a, spec.L / spec.a, spec.phi, Units::Reduced};
  rho = std::min(rho, unit.R);
  const AngleWindow w = limit_angles(unit, rho);
  const double scale = 1.0 / pow4(s_factor(unit, rho, w));
  return {rho, scale * inner_integral_x(w, spec.phi), -scale * inner_integral_z(w, spec.phi)};
}

PressureSample specific_pressures(const CavitySpec& spec, double r, std::optional<double> k_override) {
  validate(spec);
  if (!(r >= 0.0 && r <= spec.R)) throw Error(ErrorKind::OutOfRange, "r", "wing coordinate outside [0, R]");
  const PressureSample unit = reduced_pressures(spec, r / spec.a);
  const double scale = k_override.value_or(pressure_prefactor(spec.units)) / pow4(spec.a);
  return {r, scale * unit.p_x, scale * unit.p_z};
}

}  // namespace casimir
