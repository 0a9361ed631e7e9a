#include "casimir/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "casimir/error.hpp"

namespace casimir::oracle {
namespace {

struct Points {
  Eigen::Vector2d m0, m1, m2, m3;
};

Points cavity_points(const CavitySpec& spec, double r) {
  const double c = std::cos(spec.phi);
  const double s = std::sin(spec.phi);
  return {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(r * c, r * s),
          Eigen::Vector2d(spec.R * c, -spec.R * s - spec.a), Eigen::Vector2d(0.0, -spec.a)};
}

double angle_between(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return std::acos(std::clamp(u.dot(v) / (u.norm() * v.norm()), -1.0, 1.0));
}

// Generatrix direction; rays leave the upper wing rotated clockwise from it.
Eigen::Vector2d generatrix(const CavitySpec& spec, const Points& p) {
  return p.m1.norm() > 0.0 ? Eigen::Vector2d(p.m1 - p.m0) : Eigen::Vector2d(std::cos(spec.phi), std::sin(spec.phi));
}

double pairwise(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += v[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}

double pairwise(const std::vector<double>& v) { return v.empty() ? 0.0 : pairwise(v, 0, v.size()); }

double prefactor(const CavitySpec& spec) {
  return spec.units == Units::SI ? PhysicalConstants::codata().k() : 1.0;
}

struct RowSums {
  double x = 0.0;
  double z = 0.0;
};

// Midpoint sums of -K/b^4 {cos, sin}(theta - phi) over the visible fan at r.
RowSums fan_sums(const CavitySpec& spec, double r, int n_theta, double k) {
  const AngleWindow w = limit_angles_vector(spec, r);
  const double h = (w.theta2 - w.theta1) / n_theta;
  std::vector<double> xs(static_cast<std::size_t>(n_theta));
  std::vector<double> zs(static_cast<std::size_t>(n_theta));
  for (int j = 0; j < n_theta; ++j) {
    const double theta = w.theta1 + (j + 0.5) * h;
    const double b = ray_length_vector(spec, r, theta);
    const double b2 = b * b;
    const double pc = -k / (b2 * b2);
    if (!std::isfinite(pc)) throw Error(ErrorKind::NonFiniteSample, "theta", "non-finite ray pressure");
    xs[j] = pc * std::cos(theta - spec.phi);
    zs[j] = pc * std::sin(theta - spec.phi);
  }
  return {pairwise(xs) * h, pairwise(zs) * h};
}

}  // namespace

AngleWindow limit_angles_vector(const CavitySpec& spec, double r) {
  const Points p = cavity_points(spec, r);
  const Eigen::Vector2d dir = generatrix(spec, p);
  const AngleWindow w{angle_between(dir, p.m2 - p.m1), angle_between(dir, p.m3 - p.m1)};
  if (!(w.theta1 < w.theta2)) throw Error(ErrorKind::DegenerateFan, "phi", "empty ray fan");
  return w;
}

double ray_length_vector(const CavitySpec& spec, double r, double theta) {
  const Points p = cavity_points(spec, r);
  const Eigen::Vector2d g = generatrix(spec, p).normalized();
  const Eigen::Vector2d dir = Eigen::Rotation2Dd(-theta) * g;
  // m1 + b dir = m3 + t (m2 - m3)
  Eigen::Matrix2d system;
  system.col(0) = dir;
  system.col(1) = p.m3 - p.m2;
  const Eigen::Vector2d bt = system.partialPivLu().solve(p.m3 - p.m1);
  return bt(0);
}

PressureSample riemann_pressures(const CavitySpec& spec, double r, int n_theta) {
  if (n_theta < 1) throw Error(ErrorKind::InvalidArgument, "n_theta", "need at least one ray");
  const RowSums sums = fan_sums(spec, r, n_theta, prefactor(spec));
  return {r, -sums.x, sums.z};
}

ForceResult riemann_forces(const CavitySpec& spec, int n_r, int n_theta, int workers) {
  if (n_r < 2 || n_theta < 2) throw Error(ErrorKind::InvalidArgument, "n", "grid needs at least 2x2 points");
  const double k = prefactor(spec);
  const double h_r = spec.R / n_r;
  std::vector<double> row_x(static_cast<std::size_t>(n_r));
  std::vector<double> row_z(static_cast<std::size_t>(n_r));
  auto fill = [&](int first, int stride) {
    for (int i = first; i < n_r; i += stride) {
      const RowSums s = fan_sums(spec, (i + 0.5) * h_r, n_theta, k);
      row_x[i] = s.x;
      row_z[i] = s.z;
    }
  };
  const int threads = std::clamp(workers, 1, n_r);
  if (threads == 1) {
    fill(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(fill, t, threads);
  }

  ForceResult out;
  out.spec = spec;
  out.f_x = -spec.L * h_r * pairwise(row_x);
  out.f_z = spec.L * h_r * pairwise(row_z);
  out.evaluations = n_r * n_theta;
  return out;
}

}  // namespace casimir::oracle
