#include "mannheim/offset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mannheim/numerics.hpp"

namespace mannheim {

namespace {

// Predicted offset speed |γ sin θ| below this means the Mannheim
// correspondence collapses the offset indicatrix to a point.
constexpr double kCollapsedSpeed = 1e-9;

std::optional<Guard> angle_guard(double theta, const OffsetGuards& guards) {
  if (std::abs(std::sin(theta)) < guards.sin_min) return Guard::offset_angle;
  if (theta <= guards.theta_margin || theta >= M_PI - guards.theta_margin) return Guard::angle_range;
  return std::nullopt;
}

std::optional<Guard> curvature_guard(double gamma, double theta, const OffsetGuards& guards) {
  if (std::abs(gamma) < guards.gamma_min) return Guard::conical_curvature;
  return angle_guard(theta, guards);
}

std::string describe(const OffsetSpec& spec) {
  std::ostringstream out;
  out.precision(6);
  if (spec.mode == OffsetMode::theorem_consistent) {
    out << "offset(theorem_consistent, c=" << spec.angle << ", c*=" << spec.distance << ")";
  } else {
    out << "offset(constant_angle, theta=" << spec.angle << ", theta*=" << spec.distance << ")";
  }
  return out.str();
}

void accumulate(Comparison& row, double deviation) {
  row.max_deviation = std::max(row.max_deviation, deviation);
  ++row.compared;
}

void accumulate(Comparison& row, const Guarded& predicted, double recomputed) {
  if (!predicted.has_value()) {
    if (!row.first_guard) row.first_guard = predicted.guard();
    ++row.guarded;
    return;
  }
  accumulate(row, std::abs(predicted.value() - recomputed));
}

}  // namespace

const char* mode_name(OffsetMode mode) {
  return mode == OffsetMode::theorem_consistent ? "theorem_consistent" : "constant_angle";
}

OffsetAngles offset_angle(const SurfaceAnalysis& analysis, double c, double c_star) {
  OffsetAngles out;
  out.theta.reserve(analysis.size());
  out.theta_star.reserve(analysis.size());
  for (const FrameSample& f : analysis.samples) {
    out.theta.push_back(-f.s + c);
    out.theta_star.push_back(-f.s_star + c_star);
  }
  return out;
}

OffsetAngles offset_angles(const SurfaceAnalysis& analysis, const OffsetSpec& spec) {
  if (spec.mode == OffsetMode::theorem_consistent) {
    return offset_angle(analysis, spec.angle, spec.distance);
  }
  OffsetAngles out;
  out.theta.assign(analysis.size(), spec.angle);
  out.theta_star.assign(analysis.size(), spec.distance);
  return out;
}

OffsetConstruction construct_offset(const SurfaceAnalysis& analysis, const OffsetAngles& angles,
                                    const std::string& name) {
  const std::size_t n = analysis.size();
  if (angles.size() != n) throw std::invalid_argument("construct_offset: angle profile size mismatch");

  std::vector<double> u(n);
  std::vector<Vec3> e1(n), c1(n);
  std::vector<DualVector> director(n);
  double consistency = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const FrameSample& f = analysis.samples[i];
    const DualScalar theta = angles.at(i).as_dual();
    director[i] = dual_cos(theta) * f.e_dual() + dual_sin(theta) * f.t_dual();
    c1[i] = f.c + angles.theta_star[i] * f.g;
    e1[i] = director[i].real;
    u[i] = f.u;
    consistency = std::max(consistency, (director[i].dual - c1[i].cross(e1[i])).norm());
  }

  const std::vector<Vec3> de1 = numerics::first_derivative<Vec3>(e1, analysis.h);
  const bool moves = std::any_of(de1.begin(), de1.end(),
                                 [](const Vec3& d) { return d.norm() >= kIndicatrixSpeedMin; });
  if (!moves) throw DegenerateOffset("offset director is constant: the offset indicatrix is a point");

  OffsetConstruction out{
      SurfaceSpec::sampled(name, std::move(u), std::move(e1), c1).with_arc_origin(analysis.arc_origin),
      angles, std::move(director), std::move(c1), consistency};
  return out;
}

OffsetConstruction construct_offset(const SurfaceAnalysis& analysis, const OffsetSpec& spec) {
  return construct_offset(analysis, offset_angles(analysis, spec), analysis.name + "/" + describe(spec));
}

PredictedInvariants predict_at(const FrameSample& base, DualAngle theta, const OffsetGuards& guards) {
  const DualScalar th = theta.as_dual();
  const DualScalar sin_t = dual_sin(th);
  const DualScalar cos_t = dual_cos(th);
  const double th_r = theta.theta;

  PredictedInvariants out;
  out.theta = theta;
  out.speed_ratio = base.gamma * std::sin(th_r);
  out.dual_speed_ratio = base.gamma_bar() * sin_t;
  out.R = sin_t;
  out.rho = theta;

  if (const auto g = angle_guard(th_r, guards)) {
    out.gamma = Guarded::blocked(*g);
  } else {
    out.gamma = Guarded::of(1.0 / std::tan(th_r));
  }
  if (const auto g = curvature_guard(base.gamma, th_r, guards)) {
    out.Delta = Guarded::blocked(*g);
    out.delta = Guarded::blocked(*g);
  } else {
    const double cot = 1.0 / std::tan(th_r);
    const double ratio = base.delta / base.gamma;
    out.Delta = Guarded::of(theta.theta_star * cot + ratio);
    out.delta = Guarded::of(ratio * cot - theta.theta_star);
  }

  const DualVector e = base.e_dual(), t = base.t_dual(), g = base.g_dual();
  out.e1 = cos_t * e + sin_t * t;
  out.t1 = g;
  out.g1 = sin_t * e - cos_t * t;
  out.darboux = cos_t * out.e1 + sin_t * out.g1;
  return out;
}

std::vector<PredictedInvariants> predicted_invariants(const SurfaceAnalysis& analysis,
                                                      const OffsetAngles& angles,
                                                      const OffsetGuards& guards) {
  std::vector<PredictedInvariants> out;
  out.reserve(analysis.size());
  for (std::size_t i = 0; i < analysis.size(); ++i) {
    out.push_back(predict_at(analysis.samples[i], angles.at(i), guards));
  }
  return out;
}

DevelopabilityEvidence developability_conditions(const SurfaceAnalysis& analysis,
                                                 const OffsetAngles& angles,
                                                 const OffsetGuards& guards) {
  DevelopabilityEvidence out;
  out.max_abs_Delta = is_developable(analysis, 0.0).max_abs_delta;
  const auto [lo, hi] = std::minmax_element(angles.theta_star.begin(), angles.theta_star.end());
  out.theta_star_variation = angles.size() ? *hi - *lo : 0.0;
  out.developable_theta_star.reserve(analysis.size());
  for (std::size_t i = 0; i < analysis.size(); ++i) {
    const FrameSample& f = analysis.samples[i];
    const double th = angles.theta[i];
    if (const auto g = curvature_guard(f.gamma, th, guards)) {
      out.developable_theta_star.push_back(Guarded::blocked(*g));
    } else {
      out.developable_theta_star.push_back(Guarded::of(-(f.delta / f.gamma) * std::tan(th)));
    }
  }
  return out;
}

OffsetAngles developable_offset_angles(const SurfaceAnalysis& analysis, double c,
                                       const OffsetGuards& guards) {
  OffsetAngles out = offset_angle(analysis, c, 0.0);
  const DevelopabilityEvidence ev = developability_conditions(analysis, out, guards);
  for (std::size_t i = 0; i < out.size(); ++i) out.theta_star[i] = ev.developable_theta_star[i].value();
  return out;
}

const std::vector<std::string>& comparison_quantities() {
  static const std::vector<std::string> names = {
      "ds1/ds",     "dual_speed.real", "dual_speed.dual", "Delta1",   "delta1",   "gamma1",
      "R1.real",    "R1.dual",         "rho1.real",       "rho1.dual", "d01.real", "d01.dual",
  };
  return names;
}

const Comparison& OffsetReport::comparison(const std::string& quantity) const {
  for (const Comparison& c : table) {
    if (c.quantity == quantity) return c;
  }
  throw std::out_of_range("no comparison row named " + quantity);
}

OffsetReport verify_offset(const SurfaceAnalysis& analysis, const OffsetSpec& spec,
                           const VerifyOptions& options) {
  return verify_offset(analysis, spec, construct_offset(analysis, spec), options);
}

OffsetReport verify_offset(const SurfaceAnalysis& analysis, const OffsetSpec& spec,
                           OffsetConstruction construction, const VerifyOptions& options) {
  const std::size_t n = analysis.size();
  OffsetReport report{spec, std::move(construction), {}, 0.0, 0.0,
                      spec.mode == OffsetMode::constant_angle, {}, {}, {}, {}};
  const OffsetAngles& angles = report.construction.angles;

  if (spec.mode == OffsetMode::theorem_consistent) {
    for (std::size_t i = 0; i < n; ++i) {
      const double speed = analysis.samples[i].gamma * std::sin(angles.theta[i]);
      if (std::abs(speed) < kCollapsedSpeed) {
        std::ostringstream msg;
        msg << "Mannheim offset degenerates at u = " << analysis.samples[i].u
            << ": predicted ds1/ds = gamma sin(theta) = " << speed;
        throw DegenerateOffset(msg.str());
      }
    }
  }

  try {
    report.offset = darboux_frame(report.construction.spec, options.analysis);
  } catch (const DegenerateIndicatrix& e) {
    throw DegenerateOffset(std::string("offset re-analysis failed: ") + e.what());
  }
  const SurfaceAnalysis& off = report.offset;

  // ds̄₁/ds̄ from differences of the two dual arc lengths on the shared grid.
  auto column = [](const SurfaceAnalysis& a, double FrameSample::*m) {
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.samples[i].*m;
    return v;
  };
  const auto ds = numerics::first_derivative_5pt<double>(column(analysis, &FrameSample::s), analysis.h);
  const auto ds_star =
      numerics::first_derivative_5pt<double>(column(analysis, &FrameSample::s_star), analysis.h);
  const auto ds1 = numerics::first_derivative_5pt<double>(column(off, &FrameSample::s), off.h);
  const auto ds1_star = numerics::first_derivative_5pt<double>(column(off, &FrameSample::s_star), off.h);

  for (const std::string& q : comparison_quantities()) {
    Comparison c;
    c.quantity = q;
    report.table.push_back(c);
  }
  auto row_of = [&](const char* q) -> Comparison& {
    for (Comparison& c : report.table) {
      if (c.quantity == q) return c;
    }
    throw std::logic_error("missing comparison row");
  };

  report.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FrameSample& f = analysis.samples[i];
    const FrameSample& f1 = off.samples[i];
    const DualInvariants& inv1 = off.invariants[i];
    OffsetRow& row = report.rows[i];
    row.u = f.u;
    row.theta = angles.at(i);
    row.predicted = predict_at(f, row.theta, options.guards);
    row.recomputed = {f1.speed / f.speed,
                      dual_div({ds1[i], ds1_star[i]}, {ds[i], ds_star[i]}),
                      f1.Delta,
                      f1.delta,
                      f1.gamma,
                      inv1.R,
                      inv1.rho,
                      inv1.darboux};
    row.mannheim = part_norms(f.g_dual() - f1.t_dual());
    row.in_margin = i < options.margin || i + options.margin >= n;
    if (row.in_margin) continue;

    const PredictedInvariants& p = row.predicted;
    const RecomputedInvariants& r = row.recomputed;
    accumulate(row_of("ds1/ds"), std::abs(p.speed_ratio - r.speed_ratio));
    accumulate(row_of("dual_speed.real"), std::abs(p.dual_speed_ratio.real - r.dual_speed_ratio.real));
    accumulate(row_of("dual_speed.dual"), std::abs(p.dual_speed_ratio.dual - r.dual_speed_ratio.dual));
    accumulate(row_of("Delta1"), p.Delta, r.Delta);
    accumulate(row_of("delta1"), p.delta, r.delta);
    accumulate(row_of("gamma1"), p.gamma, r.gamma);
    accumulate(row_of("R1.real"), std::abs(p.R.real - r.R.real));
    accumulate(row_of("R1.dual"), std::abs(p.R.dual - r.R.dual));
    accumulate(row_of("rho1.real"), std::abs(p.rho.theta - r.rho.theta));
    accumulate(row_of("rho1.dual"), std::abs(p.rho.theta_star - r.rho.theta_star));
    const PartNorms d0 = part_norms(p.darboux - r.darboux);
    accumulate(row_of("d01.real"), d0.real);
    accumulate(row_of("d01.dual"), d0.dual);

    const bool outside_window =
        spec.mode == OffsetMode::theorem_consistent && angle_guard(row.theta.theta, options.guards);
    if (!outside_window) {
      report.mannheim_real = std::max(report.mannheim_real, row.mannheim.real);
      report.mannheim_dual = std::max(report.mannheim_dual, row.mannheim.dual);
    }
  }

  report.base_class = is_developable(analysis, options.developable_tol);
  report.offset_class = is_developable(off, options.developable_tol);
  return report;
}

}  // namespace mannheim
