#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mannheim/catalog.hpp"
#include "mannheim/errors.hpp"
#include "mannheim/numerics.hpp"
#include "mannheim/offset.hpp"
#include "test_support.hpp"

namespace mannheim {
namespace {

using test::dist;
using test::kSqrt2;

const SurfaceAnalysis& paraboloid() {
  static const SurfaceAnalysis a = darboux_frame(catalog::hyperbolic_paraboloid());
  return a;
}
const SurfaceAnalysis& cone() {
  static const SurfaceAnalysis a = darboux_frame(catalog::cone(M_PI / 4.0));
  return a;
}
const SurfaceAnalysis& hyperboloid() {
  static const SurfaceAnalysis a = darboux_frame(catalog::small_circle(M_PI / 6.0));
  return a;
}

TEST(OffsetAngle, IntegrationConstantsAtOrigin) {
  const OffsetAngles angles = offset_angle(hyperboloid(), 1.2, -0.4);
  const std::size_t mid = hyperboloid().size() / 2;
  EXPECT_EQ(hyperboloid().samples[mid].u, 0.0);
  EXPECT_DOUBLE_EQ(angles.theta[mid], 1.2);
  EXPECT_DOUBLE_EQ(angles.theta_star[mid], -0.4);
}

TEST(OffsetAngle, DevelopableBaseKeepsDistanceConstant) {
  const OffsetAngles angles = offset_angle(cone(), 1.0, 0.75);
  for (double ts : angles.theta_star) EXPECT_NEAR(ts, 0.75, 1e-12);
}

// −∫Δ ds with Δ = −(1+2u²)/2 and ds = √2/(1+2u²) du gives (√2/2) u.
TEST(OffsetAngle, ParaboloidDistanceGrowsLinearly) {
  const OffsetAngles angles = offset_angle(paraboloid(), 0.0, 0.3);
  for (std::size_t i = 0; i < paraboloid().size(); ++i) {
    EXPECT_NEAR(angles.theta_star[i], kSqrt2 / 2.0 * paraboloid().samples[i].u + 0.3, 1e-9);
    EXPECT_NEAR(angles.theta[i], -std::atan(kSqrt2 * paraboloid().samples[i].u), 1e-10);
  }
}

TEST(ConstructOffset, ParaboloidStrictionLines) {
  struct Case {
    double theta, theta_star, shift;
  };
  for (const Case c : {Case{0.0, 4.0 * kSqrt2, -4.0}, Case{M_PI / 4.0, 2.0 * kSqrt2, -2.0}}) {
    const OffsetConstruction built = construct_offset(paraboloid(), OffsetSpec::constant_angle(c.theta, c.theta_star));
    for (std::size_t i = 0; i < paraboloid().size(); ++i) {
      const double u = paraboloid().samples[i].u;
      EXPECT_LT((built.striction[i] - Vec3(u / 2.0 + c.shift, u / 2.0 + c.shift, 0.0)).norm(), 1e-9);
      // Rotation about g by theta: e1 = cos(theta) e + sin(theta) t.
      const Vec3 e = Vec3(0.5, -0.5, u) / std::sqrt(0.5 + u * u);
      const Vec3 t = Vec3(-u, u, 1.0) / std::sqrt(1.0 + 2.0 * u * u);
      const Vec3 expected = std::cos(c.theta) * e + std::sin(c.theta) * t;
      EXPECT_LT((built.director[i].real - expected).norm(), 1e-9);
    }
    EXPECT_LT(built.moment_consistency, 1e-9);
  }
}

TEST(ConstructOffset, IdentityOffset) {
  const OffsetConstruction built = construct_offset(hyperboloid(), OffsetSpec::constant_angle(0.0, 0.0));
  for (std::size_t i = 0; i < hyperboloid().size(); ++i) {
    EXPECT_LT(dist(built.director[i], hyperboloid().samples[i].e_dual()), 1e-15);
    EXPECT_EQ(built.striction[i], hyperboloid().samples[i].c);
  }
}

TEST(ConstructOffset, DualAngleRecoversOffsetAngle) {
  const OffsetConstruction built = construct_offset(hyperboloid(), OffsetSpec::theorem_consistent(1.4, 0.6));
  for (std::size_t i = 0; i < hyperboloid().size(); i += 50) {
    const DualAngle a = dual_angle(hyperboloid().samples[i].e_dual(), built.director[i]);
    EXPECT_NEAR(a.theta, built.angles.theta[i], 1e-12);
    EXPECT_NEAR(a.theta_star, built.angles.theta_star[i], 1e-9);
  }
}

// With θ = −s + c the offset director moves at speed |γ sin θ|; γ ≡ 0 on
// the paraboloid freezes it.
TEST(ConstructOffset, FrozenDirectorIsDegenerate) {
  EXPECT_THROW(construct_offset(paraboloid(), OffsetSpec::theorem_consistent(1.0, 0.0)), DegenerateOffset);
}

TEST(VerifyOffset, VanishingPredictedSpeedIsDegenerate) {
  // θ(0) = c = 0 on the cone.
  EXPECT_THROW(verify_offset(cone(), OffsetSpec::theorem_consistent(0.0, 0.0)), DegenerateOffset);
}

TEST(PredictedInvariants, ClosedForms) {
  FrameSample f;
  f.e = Vec3::UnitX();
  f.t = Vec3::UnitY();
  f.g = Vec3::UnitZ();
  f.gamma = 2.0;
  f.delta = 0.5;

  const PredictedInvariants right = predict_at(f, {M_PI / 2.0, 0.0});
  EXPECT_NEAR(right.gamma.value(), 0.0, 1e-15);
  EXPECT_NEAR(right.R.real, 1.0, 1e-15);
  EXPECT_NEAR(right.speed_ratio, 2.0, 1e-15);

  const PredictedInvariants quarter = predict_at(f, {M_PI / 4.0, 2.0 * kSqrt2});
  EXPECT_LT(dist(quarter.R, {kSqrt2 / 2.0, 2.0}), 1e-12);
  EXPECT_EQ(quarter.rho, (DualAngle{M_PI / 4.0, 2.0 * kSqrt2}));
  EXPECT_NEAR(quarter.Delta.value(), 2.0 * kSqrt2 + 0.25, 1e-12);
  EXPECT_NEAR(quarter.delta.value(), 0.25 - 2.0 * kSqrt2, 1e-12);
  EXPECT_LT(dist(quarter.t1, f.g_dual()), 1e-15);
}

TEST(PredictedInvariants, GuardsRaiseSingularFormula) {
  FrameSample flat;
  flat.e = Vec3::UnitX();
  flat.t = Vec3::UnitY();
  flat.g = Vec3::UnitZ();
  const PredictedInvariants p = predict_at(flat, {1.0, 0.5});
  EXPECT_FALSE(p.Delta.has_value());
  EXPECT_EQ(p.Delta.guard(), Guard::conical_curvature);
  EXPECT_THROW(p.delta.value(), SingularFormula);
  try {
    p.Delta.value();
  } catch (const SingularFormula& e) {
    EXPECT_EQ(e.guard(), Guard::conical_curvature);
  }
  EXPECT_TRUE(p.gamma.has_value());

  flat.gamma = 1.0;
  EXPECT_EQ(predict_at(flat, {0.0, 0.0}).gamma.guard(), Guard::offset_angle);
  EXPECT_EQ(predict_at(flat, {M_PI - 5e-4, 0.0}).gamma.guard(), Guard::angle_range);
}

void expect_mannheim_pair(const SurfaceAnalysis& base, const OffsetSpec& spec) {
  const OffsetReport r = verify_offset(base, spec);
  EXPECT_FALSE(r.mannheim_informational);
  EXPECT_LT(r.mannheim_real, 1e-4);
  EXPECT_LT(r.mannheim_dual, 1e-3);
  for (const Comparison& c : r.table) {
    EXPECT_GT(c.compared, 0u) << c.quantity;
    EXPECT_LT(c.max_deviation, 1e-3) << c.quantity;
  }
  // Pointwise oracles from the base invariants, computed here.
  for (std::size_t i = kDefaultMargin; i + kDefaultMargin < base.size(); ++i) {
    const FrameSample& f = base.samples[i];
    const FrameSample& f1 = r.offset.samples[i];
    const double th = r.construction.angles.theta[i], ts = r.construction.angles.theta_star[i];
    const double cot = std::cos(th) / std::sin(th);
    EXPECT_NEAR(f1.gamma, cot, 1e-3);
    EXPECT_NEAR(f1.Delta, ts * cot + f.delta / f.gamma, 1e-3);
    EXPECT_NEAR(f1.delta, f.delta / f.gamma * cot - ts, 1e-3);
    EXPECT_NEAR(f1.speed / f.speed, f.gamma * std::sin(th), 1e-3);
    EXPECT_NEAR(r.offset.invariants[i].rho.theta, th, 1e-3);
    EXPECT_NEAR(r.offset.invariants[i].rho.theta_star, ts, 1e-3);
    EXPECT_LT(dist(f.g_dual(), f1.t_dual()), 1e-3);
  }
}

TEST(VerifyOffset, ConeMannheimPair) { expect_mannheim_pair(cone(), OffsetSpec::theorem_consistent(M_PI / 2.0, 0.5)); }

TEST(VerifyOffset, HyperboloidMannheimPairs) {
  expect_mannheim_pair(hyperboloid(), OffsetSpec::theorem_consistent(M_PI / 2.0, 0.5));
  expect_mannheim_pair(hyperboloid(), OffsetSpec::theorem_consistent(1.3, -0.25));
}

TEST(VerifyOffset, AngleLawAlongTheoremOffsets) {
  const SurfaceAnalysis& a = hyperboloid();
  const OffsetAngles angles = offset_angle(a, 1.5, 0.2);
  std::vector<double> s, ss;
  for (const FrameSample& f : a.samples) {
    s.push_back(f.s);
    ss.push_back(f.s_star);
  }
  const auto dth = numerics::first_derivative_5pt<double>(angles.theta, a.h);
  const auto dts = numerics::first_derivative_5pt<double>(angles.theta_star, a.h);
  const auto ds = numerics::first_derivative_5pt<double>(s, a.h);
  const auto dss = numerics::first_derivative_5pt<double>(ss, a.h);
  for (std::size_t i = 2; i + 2 < a.size(); ++i) {
    EXPECT_LT(dist(dual_div({dth[i], dts[i]}, {ds[i], dss[i]}), {-1.0, 0.0}), 1e-6);
  }
}

TEST(VerifyOffset, ConstantAngleResidualIsInformational) {
  const OffsetReport r = verify_offset(paraboloid(), OffsetSpec::constant_angle(M_PI / 4.0, 2.0 * kSqrt2));
  EXPECT_TRUE(r.mannheim_informational);
  EXPECT_GT(r.mannheim_real, 1.0);
  EXPECT_EQ(r.comparison("Delta1").compared, 0u);
  EXPECT_EQ(r.comparison("Delta1").first_guard, Guard::conical_curvature);
  EXPECT_FALSE(r.base_class.developable);
  for (std::size_t i = 0; i < paraboloid().size(); ++i) {
    const double u = paraboloid().samples[i].u;
    EXPECT_LT((r.offset.samples[i].c - Vec3(u / 2.0 - 2.0, u / 2.0 - 2.0, 0.0)).norm(), 1e-9);
  }
  EXPECT_THROW(r.comparison("nope"), std::out_of_range);
}

TEST(Developability, ConeBothDirections) {
  const DevelopabilityEvidence ev = developability_conditions(cone(), offset_angle(cone(), M_PI / 2.0, 0.5));
  EXPECT_LT(ev.max_abs_Delta, 1e-8);
  EXPECT_LT(ev.theta_star_variation, 1e-8);
  // δ = 0 makes the developable offset distance zero.
  for (const Guarded& g : ev.developable_theta_star) EXPECT_NEAR(g.value(), 0.0, 1e-12);

  const OffsetConstruction built =
      construct_offset(cone(), developable_offset_angles(cone(), M_PI / 2.0), "cone/developable");
  EXPECT_TRUE(is_developable(darboux_frame(built.spec), 1e-4).developable);
}

TEST(Developability, ParaboloidDistanceVaries) {
  const DevelopabilityEvidence ev = developability_conditions(paraboloid(), offset_angle(paraboloid(), 1.0, 0.0));
  EXPECT_NEAR(ev.max_abs_Delta, 1.5, 1e-6);
  EXPECT_NEAR(ev.theta_star_variation, kSqrt2, 1e-9);
  EXPECT_FALSE(ev.developable_theta_star.front().has_value());
  EXPECT_THROW(developable_offset_angles(paraboloid(), 1.0), SingularFormula);
}

TEST(Developability, VaryingDistanceProfileGivesDevelopableOffset) {
  const SurfaceAnalysis base = darboux_frame(catalog::small_circle(M_PI / 6.0, {-0.5, 0.5}));
  const OffsetAngles angles = developable_offset_angles(base, 0.8);
  const auto [lo, hi] = std::minmax_element(angles.theta_star.begin(), angles.theta_star.end());
  EXPECT_GT(*hi - *lo, 0.1);
  const SurfaceAnalysis off = darboux_frame(construct_offset(base, angles, "developable").spec);
  for (std::size_t i = kDefaultMargin; i + kDefaultMargin < off.size(); ++i) {
    EXPECT_LT(std::abs(off.samples[i].Delta), 1e-4);
  }
}

}  // namespace
}  // namespace mannheim
