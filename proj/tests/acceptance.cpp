// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/analysis.hpp"
#include "casimir/cli.hpp"
#include "casimir/error.hpp"
#include "casimir/forces.hpp"
#include "casimir/geometry.hpp"
#include "casimir/kernels.hpp"
#include "casimir/oracle.hpp"
#include "casimir/quadrature.hpp"

using namespace casimir;
using std::numbers::pi;

namespace {

constexpr double kDeg = pi / 180.0;

CavitySpec reduced(double R, double phi = 0.0) { return {1.0, R, 1.0, phi, Units::Reduced}; }

double rel(double value, double expected) { return std::abs(value - expected) / std::abs(expected); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Outcome ac1() {
  const double pz = specific_pressures(reduced(1e4), 5e3).p_z;
  const double dev = rel(pz, -16.0 / 15.0);
  return {dev <= 1e-3, fmt("p_z(R/2) = %.10f, deviation %.2e", pz, dev)};
}

Outcome ac2() {
  const CavitySpec s = reduced(100);
  const double ratio = std::abs(specific_pressures(s, 0).p_z) / std::abs(specific_pressures(s, 50).p_z);
  return {std::abs(ratio - 0.5) <= 0.005 * 0.5, fmt("edge/centre = %.8f", ratio)};
}

Outcome ac3() {
  const double half = inner_integral_x({0, pi / 2}, 0);
  const double full = inner_integral_x({0, pi}, 0);
  const double ratio = std::abs(half) / std::abs(inner_integral_z({0, pi}, 0));
  const bool pass = std::abs(std::abs(half) - 0.2) <= 1e-10 && std::abs(full) <= 1e-12 &&
                    std::abs(ratio - 3.0 / 16.0) <= 1e-10;
  return {pass, fmt("|Ix half| = %.15f, Ix full = %.1e, ratio = %.15f", std::abs(half), full, ratio)};
}

Outcome ac4() {
  double worst = 0.0;
  for (double a : {1e-7, 4e-7, 1e-6})
    for (double ratio : {3.0, 10.0, 100.0})
      for (double L : {0.5, 1.0, 2.0}) {
        const ForceResult f = total_forces({a, ratio * a, L, 0.0, Units::SI});
        worst = std::max(worst, std::abs(f.f_x) / std::abs(f.f_z));
      }
  return {worst <= 1e-10, fmt("max |f_x|/|f_z| = %.2e over 27 cavities", worst)};
}

Outcome ac5() {
  std::string detail = "f_x [N]:";
  bool pass = true;
  for (double R : {1e-6, 2e-6, 4e-6, 8e-6}) {
    const ForceResult f = total_forces({4e-7, R, 1.0, kDeg, Units::SI});
    pass = pass && f.f_x < 0 && f.converged;
    detail += fmt(" %.4e", f.f_x);
  }
  return {pass, detail};
}

Outcome ac6() {
  std::vector<double> stars;
  for (double R : {2.0, 4.0, 8.0}) stars.push_back(optimize_phi(reduced(R), 1e-3, pi / 4 - 1e-3).phi_star);
  const bool pass = stars[0] > stars[1] && stars[1] > stars[2];
  return {pass, fmt("phi* = %.6f, %.6f, %.6f rad", stars[0], stars[1], stars[2])};
}

Outcome ac7() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, pi), half(0.0, 0.999 * pi / 4);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double t1 = angle(rng), t2 = angle(rng);
    if (t1 > t2) std::swap(t1, t2);
    const double phi = half(rng);
    // Relative to the L1 norm so that sign-changing windows stay meaningful.
    QuadratureOptions rough;
    rough.rel_tol = 1e-6;
    const double nz = integrate_adaptive([&](double t) { return std::abs(integrand_z(t, phi)); }, t1, t2, rough).value;
    const double nx = integrate_adaptive([&](double t) { return std::abs(integrand_x(t, phi)); }, t1, t2, rough).value;
    QuadratureOptions qz, qx;
    qz.rel_tol = qx.rel_tol = 1e-13;
    qz.abs_tol = 1e-13 * nz;
    qx.abs_tol = 1e-13 * nx;
    const double vz = integrate_adaptive([&](double t) { return integrand_z(t, phi); }, t1, t2, qz).value;
    const double vx = integrate_adaptive([&](double t) { return integrand_x(t, phi); }, t1, t2, qx).value;
    if (nz > 0) worst = std::max(worst, std::abs(inner_integral_z({t1, t2}, phi) - vz) / nz);
    if (nx > 0) worst = std::max(worst, std::abs(inner_integral_x({t1, t2}, phi) - vx) / nx);
  }
  return {worst <= 1e-10, fmt("max relative deviation %.2e over 1000 windows", worst)};
}

Outcome ac8() {
  bool pass = true;
  std::string detail;
  ForceOptions tight;
  tight.rel_tol = 1e-12;
  for (double deg : {0.0, 1.0, 5.0}) {
    const CavitySpec s = reduced(10, deg * kDeg);
    const ForceResult f = total_forces(s, tight);
    const ForceResult g = oracle::riemann_forces(s, 2048, 2048, 4);
    const double dz = rel(g.f_z, f.f_z);
    // At phi = 0 the expulsion force vanishes; compare against the compression scale.
    const double dx = std::abs(g.f_x - f.f_x) / (deg == 0.0 ? std::abs(f.f_z) : std::abs(f.f_x));
    pass = pass && dz <= 1e-4 && dx <= 1e-4;
    detail += fmt("%g deg: dz %.1e dx %.1e; ", deg, dz, dx);
  }
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const CavitySpec s = reduced(1.5 + 100 * u(rng), 0.99 * pi / 4 * u(rng));
    const double r = s.R * u(rng);
    const AngleWindow w = limit_angles(s, r);
    const AngleWindow v = oracle::limit_angles_vector(s, r);
    worst = std::max({worst, std::abs(w.theta1 - v.theta1), std::abs(w.theta2 - v.theta2)});
  }
  pass = pass && worst <= 1e-12;
  return {pass, detail + fmt("angles max %.1e rad", worst)};
}

Outcome ac9() {
  bool pass = true;
  std::string detail;
  for (double lambda : {2.0, 10.0}) {
    ForceOptions fo;
    fo.rel_tol = 1e-12;
    const RescaleReport rep = rescale_report({4e-7, 4e-6, 1.0, kDeg, Units::SI}, lambda, fo);
    double fx_dev = 0.0;
    if (rep.expulsion_ratio) fx_dev = rel(*rep.expulsion_ratio, rep.expected_force_ratio);
    pass = pass && rep.pressure_deviation <= 1e-9 && rep.force_deviation <= 1e-9 && fx_dev <= 1e-9;
    detail += fmt("lambda %g: p %.1e F_z %.1e F_x %.1e; ", lambda, rep.pressure_deviation, rep.force_deviation, fx_dev);
  }
  return {pass, detail};
}

Outcome ac10() {
  auto capture = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::main_entry(args, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  const std::vector<std::vector<std::string>> commands = {
      {"sweep", "--units", "reduced", "--range", "0:40:41"},
      {"sweep", "--units", "reduced", "--range", "0:40:41", "--format", "json"},
      {"sweep", "--axis", "R", "--range", "1e-6:8e-6:15", "--format", "json"},
      {"force", "--format", "json"},
      {"profile", "--units", "reduced", "--phi-deg", "3", "--samples", "257"},
  };
  bool pass = true;
  for (const auto& args : commands) {
    const std::string first = capture(args), second = capture(args);
    pass = pass && first == second && first.rfind("0\n", 0) == 0;
    if (args[0] == "sweep") {
      auto one = args, eight = args;
      one.insert(one.end(), {"--workers", "1"});
      eight.insert(eight.end(), {"--workers", "8"});
      pass = pass && capture(one) == capture(eight) && capture(one) == first;
    }
  }
  return {pass, fmt("%zu commands, repeated and 1 vs 8 workers", commands.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 parallel-plate enhancement 16/15", ac1},
      {"AC2 edge halving", ac2},
      {"AC3 half-range expulsion 1/5 and ratio 3/16", ac3},
      {"AC4 net compensation for parallel plates", ac4},
      {"AC5 expulsion sign", ac5},
      {"AC6 expulsion maximum and drift", ac6},
      {"AC7 closed form vs quadrature", ac7},
      {"AC8 oracle equivalence", ac8},
      {"AC9 rescaling law", ac9},
      {"AC10 reproducibility", ac10},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s  (%s) [%.2fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
