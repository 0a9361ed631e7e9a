#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "casimir/error.hpp"
#include "casimir/forces.hpp"
#include "casimir/oracle.hpp"

using namespace casimir;
using std::numbers::pi;

namespace {
CavitySpec reduced(double R, double phi, double L = 1.0) { return {1.0, R, L, phi, Units::Reduced}; }
const double kOneDegree = pi / 180;
}  // namespace

TEST(TotalForces, ParallelPlatesCompensate) {
  for (double R : {0.5, 10.0, 1e3}) {
    for (double L : {0.1, 1.0, 7.0}) {
      const ForceResult f = total_forces(reduced(R, 0, L));
      EXPECT_TRUE(f.converged);
      EXPECT_LE(std::abs(f.f_x), 1e-10 * std::abs(f.f_z)) << R << " " << L;
      EXPECT_LT(f.f_z, 0.0);
    }
  }
}

TEST(TotalForces, OneDegreeExpulsionAgainstX) {
  for (double R : {1e-6, 2e-6, 4e-6, 8e-6}) {
    const ForceResult f = total_forces({4e-7, R, 1.0, kOneDegree, Units::SI});
    EXPECT_TRUE(f.converged);
    EXPECT_LT(f.f_x, 0.0) << R;
    EXPECT_LT(f.f_z, 0.0) << R;
  }
}

// Central value times length; edge corrections are O(a/R).
TEST(TotalForces, LongPlatesApproachEnhancedClassicalLoad) {
  const ForceResult f = total_forces(reduced(1e4, 0));
  EXPECT_NEAR(f.f_z, -(16.0 / 15.0) * 1e4, 2e-3 * (16.0 / 15.0) * 1e4);
}

TEST(TotalForces, MatchesMidpointSumOfProfile) {
  const CavitySpec s = reduced(10, 3 * kOneDegree);
  const ForceResult f = total_forces(s, {1e-12});
  const int n = 100000;
  const PressureProfile profile = pressure_profile(s, n + 1);
  double sx = 0.0, sz = 0.0;
  for (int i = 0; i < n; ++i) {
    sx += 0.5 * (profile.samples[i].p_x + profile.samples[i + 1].p_x);
    sz += 0.5 * (profile.samples[i].p_z + profile.samples[i + 1].p_z);
  }
  const double h = s.R / n;
  EXPECT_NEAR(f.f_z, sz * h * s.L, 1e-5 * std::abs(f.f_z));
  EXPECT_NEAR(f.f_x, sx * h * s.L, 1e-5 * std::abs(f.f_x));
}

TEST(TotalForces, LinearInWidth) {
  const ForceResult one = total_forces(reduced(10, 0.1, 1.0));
  const ForceResult two = total_forces(reduced(10, 0.1, 2.0));
  EXPECT_EQ(two.f_x, 2.0 * one.f_x);
  EXPECT_EQ(two.f_z, 2.0 * one.f_z);
}

TEST(TotalForces, CubicRescaling) {
  const CavitySpec s{4e-7, 4e-6, 1.0, 2 * kOneDegree, Units::SI};
  const ForceResult base = total_forces(s);
  for (double lambda : {2.0, 10.0, 0.25}) {
    CavitySpec t = s;
    t.a *= lambda;
    t.R *= lambda;
    const ForceResult f = total_forces(t);
    const double l3 = std::pow(lambda, -3.0);
    EXPECT_NEAR(f.f_z, l3 * base.f_z, 1e-9 * std::abs(l3 * base.f_z));
    EXPECT_NEAR(f.f_x, l3 * base.f_x, 1e-9 * std::abs(l3 * base.f_x));
  }
}

TEST(TotalForces, TwoWingsDoubleExpulsionAndCancelCompression) {
  const CavitySpec s = reduced(10, 0.1);
  const ForceResult one = total_forces(s);
  ForceOptions opts;
  opts.wing_count = 2;
  const ForceResult two = total_forces(s, opts);
  EXPECT_EQ(two.f_x, 2.0 * one.f_x);
  EXPECT_EQ(two.f_z, 0.0);
  EXPECT_EQ(two.wing_count, 2);
  opts.wing_count = 3;
  EXPECT_THROW(total_forces(s, opts), Error);
}

TEST(TotalForces, EchoesSpecAndErrorEstimates) {
  const CavitySpec s = reduced(5, 0.2);
  const ForceResult f = total_forces(s);
  EXPECT_EQ(f.spec, s);
  EXPECT_GE(f.err_x, 0.0);
  EXPECT_GE(f.err_z, 0.0);
  EXPECT_LE(f.err_z, 1e-9 * std::abs(f.f_z));
  EXPECT_GT(f.evaluations, 0);
}

TEST(TotalForces, KOverrideScalesLinearly) {
  const CavitySpec s = reduced(5, 0.2);
  ForceOptions opts;
  opts.k_override = 3.0;
  const ForceResult f = total_forces(s);
  const ForceResult g = total_forces(s, opts);
  EXPECT_DOUBLE_EQ(g.f_z, 3.0 * f.f_z);
}

TEST(TotalForces, AgreesWithRiemannOracle) {
  const CavitySpec s = reduced(10, 5 * kOneDegree);
  const ForceResult f = total_forces(s);
  const ForceResult g = oracle::riemann_forces(s, 1024, 1024);
  EXPECT_NEAR(g.f_z, f.f_z, 1e-4 * std::abs(f.f_z));
  EXPECT_NEAR(g.f_x, f.f_x, 1e-4 * std::abs(f.f_x));
}

TEST(PressureProfile, ThreeSampleParallelPlateAntisymmetry) {
  const PressureProfile p = pressure_profile(reduced(10, 0), 3);
  ASSERT_EQ(p.samples.size(), 3u);
  EXPECT_EQ(p.samples[0].r, 0.0);
  EXPECT_EQ(p.samples[2].r, 10.0);
  EXPECT_NEAR(p.samples[0].p_x, -p.samples[2].p_x, 1e-15);
  EXPECT_GT(p.samples[0].p_x, 0.0);
  EXPECT_NEAR(p.samples[1].p_x, 0.0, 1e-15);
}

TEST(PressureProfile, EdgeHalfOfCentre) {
  const PressureProfile p = pressure_profile(reduced(100, 0), 3);
  EXPECT_NEAR(std::abs(p.samples[0].p_z) / std::abs(p.samples[1].p_z), 0.5, 0.005 * 0.5);
}

TEST(PressureProfile, OneDegreeSignChange) {
  const PressureProfile p = pressure_profile({4e-7, 4e-6, 1.0, kOneDegree, Units::SI}, 512);
  int changes = 0;
  for (std::size_t i = 1; i < p.samples.size(); ++i)
    if ((p.samples[i - 1].p_x > 0) != (p.samples[i].p_x > 0)) ++changes;
  EXPECT_GE(changes, 1);
}

TEST(PressureProfile, StrictlyIncreasingCoverage) {
  const PressureProfile p = pressure_profile(reduced(7, 0.3), 17);
  EXPECT_EQ(p.samples.front().r, 0.0);
  EXPECT_EQ(p.samples.back().r, 7.0);
  for (std::size_t i = 1; i < p.samples.size(); ++i) EXPECT_LT(p.samples[i - 1].r, p.samples[i].r);
  EXPECT_THROW(pressure_profile(reduced(7, 0.3), 1), Error);
}
