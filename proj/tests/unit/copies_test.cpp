#include <gtest/gtest.h>

#include <cmath>

#include "ymoptics/copies.hpp"
#include "ymoptics/optics.hpp"
#include "ymoptics/radial.hpp"
#include "ymoptics/sampling.hpp"

namespace ymo {
namespace {

GaugePotential square_law() {
  return ansatz_field(RadialProfile::power_law(2.0));
}

TEST(CurvatureEqual, IdenticalPotentials) {
  const auto pts = sample_shell(1, 10, 0.5, 3.0);
  const CurvatureComparison c =
      curvature_equal(wu_yang_monopole(), wu_yang_monopole(), pts, 1e-10);
  EXPECT_TRUE(c.equal);
  EXPECT_EQ(c.max_deviation, 0.0);
}

TEST(CurvatureEqual, SquareLawMatchesVacuum) {
  const auto pts = sample_shell(2, 20, 0.5, 5.0);
  const CurvatureComparison c =
      curvature_equal(zero_potential(), square_law(), pts, 1e-10);
  EXPECT_TRUE(c.equal);
  EXPECT_LT(c.max_deviation, 1e-10);
}

TEST(CurvatureEqual, MonopoleDiffersFromVacuum) {
  for (double r : {0.5, 1.0, 2.0}) {
    const CurvatureComparison c = curvature_equal(
        zero_potential(), wu_yang_monopole(), {vec3(0, 0, r)}, 1e-10);
    EXPECT_FALSE(c.equal);
    EXPECT_NEAR(c.max_deviation, 1.0 / (r * r), 1e-9);
  }
}

TEST(CurvatureEqual, EmptySampleSetRejected) {
  EXPECT_THROW(curvature_equal(zero_potential(), zero_potential(), {}, 1e-10),
               std::invalid_argument);
}

TEST(TorsionFingerprint, ConformalPairIsTorsionFree) {
  const ScalarField n = monopole_medium().index_field();
  const auto t = torsion_fingerprint(conformal_family(n), isotropic_dreibein(n),
                                     sample_shell(3, 10, 0.5, 3.0));
  for (const TorsionTensor& ti : t) EXPECT_LT(ti.max_abs(), 1e-12);
}

TEST(TorsionFingerprint, VacuumIsTorsionFree) {
  for (const TorsionTensor& t : torsion_fingerprint(
           zero_potential(), identity_dreibein(), sample_cube(4, 5, 2.0)))
    EXPECT_EQ(t.max_abs(), 0.0);
}

TEST(TorsionFingerprint, SquareLawFrozenAtUnitRadius) {
  const auto t = torsion_fingerprint(square_law(), identity_dreibein(),
                                     {vec3(1, 0, 0)});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_NEAR(t[0](1, 0, 1), 2.0, 1e-12);
  EXPECT_NEAR(t[0](2, 0, 2), 2.0, 1e-12);
  EXPECT_NEAR(t[0].max_abs(), 2.0, 1e-12);
}

TEST(TorsionFingerprint, SingularFrameRaises) {
  const Dreibein degenerate([](const Vec3&) {
    Mat3 m = identity3();
    m(2, 2) = 0.0;
    return m;
  });
  EXPECT_THROW(
      torsion_fingerprint(zero_potential(), degenerate, {vec3(1, 0, 0)}),
      SingularMatrixError);
}

TEST(CopyReport, SelfPairIsAllZero) {
  const CopyReport r = copy_report(wu_yang_monopole(), wu_yang_monopole(),
                                   identity_dreibein(),
                                   sample_shell(5, 5, 0.5, 3.0));
  EXPECT_EQ(r.samples, 5);
  EXPECT_EQ(r.potential_difference, 0.0);
  EXPECT_EQ(r.curvature_deviation, 0.0);
  EXPECT_EQ(r.torsion_difference, 0.0);
  EXPECT_LT(r.contorsion_m_residual, 1e-12);
  EXPECT_TRUE(r.curvature_equal);
  EXPECT_FALSE(r.are_copies);
}

TEST(CopyReport, VacuumAndSquareLawAreCopies) {
  const CopyReport r =
      copy_report(zero_potential(), square_law(), identity_dreibein(),
                  sample_shell(6, 10, 0.5, 3.0));
  EXPECT_LT(r.curvature_deviation, 1e-10);
  EXPECT_GT(r.torsion_difference, 0.1);
  EXPECT_LT(r.metric_residual, 1e-6);
  EXPECT_LT(r.contorsion_m_residual, 1e-6);
  EXPECT_LT(r.m_difference, 1e-6);
  EXPECT_TRUE(r.curvature_equal);
  EXPECT_TRUE(r.are_copies);
}

TEST(CopyReport, VacuumAndMonopoleAreNotCopies) {
  const CopyReport r =
      copy_report(zero_potential(), wu_yang_monopole(), identity_dreibein(),
                  sample_shell(7, 10, 0.5, 3.0));
  EXPECT_GT(r.curvature_deviation, 0.1);
  EXPECT_FALSE(r.curvature_equal);
  EXPECT_FALSE(r.are_copies);
}

TEST(CopyReport, CommonDreibeinGivesCommonMetric) {
  const Dreibein h = isotropic_dreibein(spherical_medium().index_field());
  const CopyReport r = copy_report(zero_potential(), wu_yang_monopole(), h,
                                   sample_shell(8, 5, 0.5, 2.0));
  EXPECT_LT(r.metric_residual, 1e-6);
}

}  // namespace
}  // namespace ymo
