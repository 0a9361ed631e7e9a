#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "casimir/forces.hpp"
#include "casimir/geometry.hpp"
#include "casimir/oracle.hpp"
#include "casimir/verify.hpp"

using namespace casimir;
using std::numbers::pi;

namespace {
CavitySpec reduced(double R, double phi = 0.0) { return {1.0, R, 1.0, phi, Units::Reduced}; }
const double kOneDegree = pi / 180;

const OracleReport& find(const std::vector<OracleReport>& reports, const std::string& quantity) {
  for (const auto& r : reports)
    if (r.quantity == quantity) return r;
  throw std::runtime_error("missing check " + quantity);
}
}  // namespace

TEST(VectorAngles, MatchClosedForm) {
  const CavitySpec s = reduced(10);
  const AngleWindow v = oracle::limit_angles_vector(s, 5);
  const AngleWindow w = limit_angles(s, 5);
  EXPECT_NEAR(v.theta1, w.theta1, 1e-12);
  EXPECT_NEAR(v.theta2, w.theta2, 1e-12);
}

TEST(VectorAngles, ApexUsesGeneratrixDirection) {
  EXPECT_NEAR(oracle::limit_angles_vector(reduced(10), 0).theta2, pi / 2, 1e-15);
}

TEST(VectorAngles, FiveDegreeWindowIsOrdered) {
  const AngleWindow v = oracle::limit_angles_vector(reduced(10, 5 * kOneDegree), 3);
  EXPECT_GT(v.theta1, 0.0);
  EXPECT_LT(v.theta1, v.theta2);
  EXPECT_LT(v.theta2, pi);
}

TEST(VectorRay, HitsOppositeWing) {
  const CavitySpec s = reduced(10, 0.2);
  const double r = 4.0, theta = 1.3;
  const double b = oracle::ray_length_vector(s, r, theta);
  // The end point lies on the lower wing line sin(phi) x + cos(phi) z = -a cos(phi).
  const double x = r * std::cos(s.phi) + b * std::cos(s.phi - theta);
  const double z = r * std::sin(s.phi) + b * std::sin(s.phi - theta);
  EXPECT_NEAR(std::sin(s.phi) * x + std::cos(s.phi) * z, -std::cos(s.phi), 1e-13);
  EXPECT_GT(b, 0.0);
}

TEST(Riemann, ParallelPlateAntisymmetrySurvives) {
  const ForceResult f = oracle::riemann_forces(reduced(10), 1024, 1024);
  EXPECT_LE(std::abs(f.f_x), 1e-6 * std::abs(f.f_z));
}

TEST(Riemann, OneDegreeSiMatchesAdaptive) {
  const CavitySpec s{4e-7, 4e-6, 1.0, kOneDegree, Units::SI};
  const ForceResult f = total_forces(s, {1e-12});
  const ForceResult g = oracle::riemann_forces(s, 2048, 2048, 4);
  EXPECT_NEAR(g.f_z, f.f_z, 1e-4 * std::abs(f.f_z));
  EXPECT_NEAR(g.f_x, f.f_x, 1e-4 * std::abs(f.f_x));
}

TEST(Riemann, CentralPressureOfLongPlates) {
  const PressureSample p = oracle::riemann_pressures(reduced(1e4), 5e3, 4096);
  EXPECT_NEAR(p.p_z, -16.0 / 15.0, 1e-4);
  EXPECT_NEAR(p.p_x, 0.0, 1e-10);
}

TEST(Riemann, WorkerCountDoesNotChangeBits) {
  const CavitySpec s = reduced(10, 3 * kOneDegree);
  const ForceResult a = oracle::riemann_forces(s, 300, 200, 1);
  const ForceResult b = oracle::riemann_forces(s, 300, 200, 7);
  EXPECT_EQ(a.f_x, b.f_x);
  EXPECT_EQ(a.f_z, b.f_z);
}

TEST(RiemannProperty, SecondOrderRefinement) {
  for (double phi : {0.0, 5 * kOneDegree}) {
    const CavitySpec s = reduced(10, phi);
    const double exact = total_forces(s, {1e-13}).f_z;
    for (int n : {64, 128}) {
      const double e1 = std::abs(oracle::riemann_forces(s, n, n).f_z - exact);
      const double e2 = std::abs(oracle::riemann_forces(s, 2 * n, 2 * n).f_z - exact);
      const double ratio = e1 / e2;
      EXPECT_GE(ratio, 3.5) << phi << " " << n;
      EXPECT_LE(ratio, 4.5) << phi << " " << n;
    }
  }
}

TEST(VerifySuite, ParallelPlatesPass) {
  const auto reports = verify_suite(reduced(10));
  EXPECT_TRUE(all_pass(reports));
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.quantity << " dev=" << r.relative_deviation;
}

TEST(VerifySuite, OneDegreePasses) {
  EXPECT_TRUE(all_pass(verify_suite({4e-7, 4e-6, 1.0, kOneDegree, Units::SI})));
  EXPECT_TRUE(all_pass(verify_suite(reduced(10, kOneDegree))));
}

TEST(VerifySuite, CorruptedPrefactorFailsOnlyForceChecks) {
  VerifyOptions opts;
  opts.primary_k_override = 1.01;
  const auto reports = verify_suite(reduced(10, kOneDegree), opts);
  EXPECT_FALSE(all_pass(reports));
  EXPECT_TRUE(find(reports, "theta1").pass);
  EXPECT_TRUE(find(reports, "theta2").pass);
  EXPECT_TRUE(find(reports, "s_factor").pass);
  EXPECT_TRUE(find(reports, "inner_integral_z").pass);
  EXPECT_FALSE(find(reports, "f_z").pass);
  EXPECT_FALSE(find(reports, "f_x").pass);
  EXPECT_FALSE(find(reports, "p_z_mid").pass);
}

TEST(VerifySuite, InvalidCavityIsReportedNotThrown) {
  const auto reports = verify_suite({0.0, 10.0, 1.0, 0.0, Units::SI});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_FALSE(reports[0].pass);
}
