#include "mannheim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mannheim/catalog.hpp"
#include "mannheim/io.hpp"
#include "mannheim/line.hpp"
#include "mannheim/numerics.hpp"

namespace mannheim::verify {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

class Suite {
 public:
  Suite(std::string name, const Settings& settings, Report& report)
      : name_(std::move(name)), settings_(settings), report_(report) {}

  void check(const std::string& check, double measured, const std::string& tolerance) {
    const double tol = settings_.tolerances.get(tolerance);
    report_.checks.push_back({name_, check, measured, tol, std::isfinite(measured) && measured <= tol});
  }
  /// Exact requirement: passes only when `measured` is zero.
  void exact(const std::string& check, double measured) {
    report_.checks.push_back({name_, check, measured, 0.0, measured == 0.0});
  }
  void note(const std::string& text) { report_.notes.push_back(name_ + ": " + text); }

 private:
  std::string name_;
  const Settings& settings_;
  Report& report_;
};

struct Random {
  explicit Random(std::uint64_t seed) : engine(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
  Vec3 vec(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }
  Vec3 unit() {
    std::normal_distribution<double> n;
    Vec3 v;
    do v = Vec3(n(engine), n(engine), n(engine)); while (v.norm() < 1e-6);
    return v.normalized();
  }
  /// Directions uniform on the sphere, points uniform in [−10, 10]³.
  Line line() {
    const Vec3 d = unit();
    return {vec(-10.0, 10.0), d};
  }
  std::mt19937_64 engine;
};

double max_abs_diff(DualScalar a, DualScalar b) {
  return std::max(std::abs(a.real - b.real), std::abs(a.dual - b.dual));
}

double distance_to_line(const Vec3& x, const Line& l) {
  const Vec3 d = l.direction.normalized();
  const Vec3 r = x - l.point;
  return (r - r.dot(d) * d).norm();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

SurfaceSpec sampled_copy(const SurfaceSpec& spec) {
  const GridSamples g = spec.sample();
  return SurfaceSpec::sampled(spec.name() + "/sampled", g.u, g.e, g.p).with_arc_origin(spec.arc_origin());
}

double max_over_interior(const SurfaceAnalysis& a,
                         const std::function<double(const FrameSample&, std::size_t)>& f,
                         std::size_t margin = kDefaultMargin) {
  double worst = 0.0;
  for (std::size_t i = margin; i + margin < a.size(); ++i) worst = std::max(worst, f(a.samples[i], i));
  return worst;
}

/// Theorem-consistent offsets used by the suites: c = π/2 keeps θ = −s + c
/// inside [0.3, 2.8] on the default range for both surfaces.
struct OffsetCase {
  SurfaceSpec surface;
  OffsetSpec offset;
};

std::vector<OffsetCase> theorem_cases(std::size_t n) {
  return {{catalog::cone(M_PI / 4.0, catalog::kDefaultRange, n),
           OffsetSpec::theorem_consistent(M_PI / 2.0, 0.5)},
          {catalog::small_circle(M_PI / 6.0, catalog::kDefaultRange, n),
           OffsetSpec::theorem_consistent(M_PI / 2.0, 0.5)},
          {catalog::small_circle(M_PI / 6.0, catalog::kDefaultRange, n),
           OffsetSpec::theorem_consistent(1.3, -0.25)}};
}

VerifyOptions offset_options(const Settings& settings) {
  VerifyOptions o;
  o.guards = settings.guards;
  o.developable_tol = settings.developable_tol;
  return o;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> Report::failing_suites() const {
  std::vector<std::string> out;
  for (const Check& c : checks) {
    if (!c.passed && std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  }
  return out;
}

const Check& Report::find(const std::string& suite, const std::string& name) const {
  for (const Check& c : checks) {
    if (c.suite == suite && c.name == name) return c;
  }
  throw std::out_of_range("no check " + suite + "/" + name);
}

void Report::print(std::ostream& out) const {
  char line[256];
  for (const Check& c : checks) {
    std::snprintf(line, sizeof line, "%-4s %-16s %-44s measured=%.3e tol=%.1e\n",
                  c.passed ? "PASS" : "FAIL", c.suite.c_str(), c.name.c_str(), c.measured,
                  c.tolerance);
    out << line;
  }
  for (const std::string& n : notes) out << "NOTE " << n << '\n';
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
  out << "checks: " << checks.size() << ", failed: " << failed << '\n';
  const auto suites = failing_suites();
  if (suites.empty()) {
    out << "result: PASS\n";
  } else {
    out << "result: FAIL (failing suites:";
    for (const auto& s : suites) out << ' ' << s;
    out << ")\n";
  }
}

void dual_algebra_suite(const Settings& settings, Report& report) {
  Suite suite("dual-algebra", settings, report);
  Random rng(settings.seed);
  const std::size_t n = settings.random_count;

  // Product dual part must not see a.dual·b.dual: shift the dual parts along
  // the direction that keeps a.real·b.dual + a.dual·b.real fixed.
  double nilpotency = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double sign = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    const DualScalar a{sign * rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0)};
    const DualScalar b{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
    const double x = rng.uniform(-1.0, 1.0);
    const DualScalar a2{a.real, a.dual + x};
    const DualScalar b2{b.real, b.dual - x * b.real / a.real};
    const DualScalar p = dual_mul(a, b), q = dual_mul(a2, b2);
    nilpotency = std::max({nilpotency, max_abs_diff(p, q),
                           std::abs(p.dual - (a.real * b.dual + a.dual * b.real)),
                           std::abs(p.real - a.real * b.real)});
  }
  suite.check("product_ignores_dual_dual_term", nilpotency, "algebra");

  // lift against central differences, h = 1e-5, relative to |x*|.
  struct Fn {
    double (*f)(double);
    double (*df)(double);
    double lo, hi;
  };
  const Fn fns[] = {
      {[](double x) { return std::sin(x); }, [](double x) { return std::cos(x); }, -3.0, 3.0},
      {[](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); }, -3.0, 3.0},
      {[](double x) { return std::exp(x); }, [](double x) { return std::exp(x); }, -2.0, 2.0},
      {[](double x) { return std::sqrt(x); }, [](double x) { return 0.5 / std::sqrt(x); }, 0.5, 4.0},
  };
  constexpr double h = 1e-5;
  double lift_err = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Fn& fn = fns[k % 4];
    const double x = rng.uniform(fn.lo, fn.hi);
    double xs = rng.uniform(-1.0, 1.0);
    if (std::abs(xs) < 1e-3) xs = 0.5;
    const DualScalar y = lift(fn.f, fn.df, {x, xs});
    const double fd = xs * (fn.f(x + h) - fn.f(x - h)) / (2.0 * h);
    lift_err = std::max(lift_err, std::abs(y.dual - fd) / std::abs(xs));
  }
  suite.check("lift_matches_finite_difference", lift_err, "lift_relative");

  double closed_form = std::max({max_abs_diff(dual_sqrt({4.0, 4.0}), {2.0, 1.0}),
                                 max_abs_diff(dual_cos({0.0, 3.0}), {1.0, 0.0}),
                                 max_abs_diff(dual_sin({M_PI / 2.0, 2.0}), {1.0, 0.0}),
                                 max_abs_diff(dual_div({3.0, 4.0}, {1.0, 0.0}), {3.0, 4.0})});
  for (std::size_t k = 0; k < n; ++k) {
    const DualScalar x{rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 1.0)};
    closed_form = std::max({closed_form,
                            max_abs_diff(dual_sin(x), {std::sin(x.real), x.dual * std::cos(x.real)}),
                            max_abs_diff(dual_cos(x), {std::cos(x.real), -x.dual * std::sin(x.real)})});
  }
  suite.check("dual_functions_closed_form", closed_form, "algebra");

  double lagrange = 0.0, unit = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const DualVector a{rng.vec(-1.0, 1.0), rng.vec(-1.0, 1.0)};
    const DualVector b{rng.vec(-1.0, 1.0), rng.vec(-1.0, 1.0)};
    const DualVector axb = dual_cross(a, b);
    const DualScalar ab = dual_dot(a, b);
    lagrange = std::max(lagrange, max_abs_diff(dual_dot(axb, axb) + ab * ab, dual_dot(a, a) * dual_dot(b, b)));
    if (a.real.norm() > 1e-3) unit = std::max(unit, max_abs_diff(dual_norm(dual_normalize(a)), {1.0, 0.0}));
  }
  suite.check("lagrange_identity", lagrange, "algebra");
  suite.check("normalize_gives_dual_unit", unit, "algebra");
}

void line_geometry_suite(const Settings& settings, Report& report) {
  Suite suite("line-geometry", settings, report);
  Random rng(settings.seed + 1);
  const std::size_t n = settings.random_count;

  double pluecker = 0.0, direction = 0.0, foot = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Line l = rng.line();
    const DualVector d = line_to_dual(l);
    pluecker = std::max({pluecker, std::abs(d.real.dot(d.dual)), std::abs(d.real.norm() - 1.0)});
    const Line back = dual_to_line(d);
    direction = std::max(direction, (back.direction - l.direction).norm());
    foot = std::max(foot, distance_to_line(back.point, l));
  }
  suite.check("pluecker_condition", pluecker, "pluecker");
  suite.check("roundtrip_direction", direction, "line_roundtrip");
  suite.check("roundtrip_foot_on_line", foot, "line_roundtrip");

  double distance = 0.0, angle = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Line l1 = rng.line(), l2 = rng.line();
    const DualAngle a = dual_angle(line_to_dual(l1), line_to_dual(l2));
    const CommonPerpendicular cp = common_perpendicular(l1, l2);
    distance = std::max(distance, std::abs(a.theta_star - cp.signed_distance));
    angle = std::max(angle, std::abs(a.theta - std::acos(std::clamp(l1.direction.dot(l2.direction), -1.0, 1.0))));
  }
  suite.check("dual_angle_distance_vs_common_perpendicular", distance, "line_distance");
  suite.check("dual_angle_real_part", angle, "line_distance");

  // Parallel lines: distance from the point-to-line formula.
  double parallel = 0.0;
  for (std::size_t k = 0; k < 100; ++k) {
    const Line l1 = rng.line();
    const Line l2{rng.vec(-10.0, 10.0), l1.direction};
    const DualAngle a = dual_angle(line_to_dual(l1), line_to_dual(l2));
    parallel = std::max({parallel, std::abs(a.theta), std::abs(a.theta_star - distance_to_line(l2.point, l1))});
  }
  suite.check("parallel_lines_distance", parallel, "line_distance");
}

void ruled_surface_suite(const Settings& settings, Report& report) {
  Suite suite("ruled-surface", settings, report);
  const std::size_t n = settings.sample_count;
  const std::vector<SurfaceSpec> surfaces{
      catalog::hyperbolic_paraboloid(catalog::kDefaultRange, n),
      catalog::cone(M_PI / 4.0, catalog::kDefaultRange, n),
      catalog::small_circle(M_PI / 6.0, catalog::kDefaultRange, n),
      catalog::helicoid(1.0, catalog::kDefaultRange, n),
  };

  for (const SurfaceSpec& spec : surfaces) {
    const std::string tag = spec.name() + ".";
    const SurfaceAnalysis a = darboux_frame(spec);

    double unit = 0.0;
    for (const FrameSample& f : a.samples) {
      unit = std::max(unit, max_abs_diff(dual_dot(f.e_dual(), f.e_dual()), {1.0, 0.0}));
    }
    suite.check(tag + "dual_unit_director", unit, "dual_unit");
    suite.check(tag + "striction_derivative", striction_residual(a).max_interior, "striction_eq");
    suite.check(tag + "dual_arc_length_rate", arc_length_residual(a).max_interior, "arc_length");
    const FrameOdeResidual ode = frame_ode_residual(a);
    suite.check(tag + "frame_ode_real_analytic", ode.real.max_interior, "frame_ode_analytic");
    suite.check(tag + "frame_ode_dual_analytic", ode.dual.max_interior, "frame_ode_analytic");
    suite.check(tag + "frame_orthonormality", ode.orthonormality.max_interior, "frame_ode_analytic");

    const SurfaceAnalysis sampled = darboux_frame(sampled_copy(spec));
    const FrameOdeResidual ode_s = frame_ode_residual(sampled);
    suite.check(tag + "frame_ode_real_sampled", ode_s.real.max_interior, "frame_ode_sampled");
    suite.check(tag + "frame_ode_dual_sampled", ode_s.dual.max_interior, "frame_ode_sampled");

    double identities = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const DualInvariants& inv = a.invariants[i];
      const DualScalar rho = inv.rho.as_dual();
      identities = std::max({identities, max_abs_diff(dual_sin(rho), inv.R),
                             max_abs_diff(dual_cos(rho) / dual_sin(rho), a.samples[i].gamma_bar())});
    }
    suite.check(tag + "sin_rho_and_cot_rho", identities, "curvature_identities");

    AnalysisOptions serial;
    serial.execution = Execution::serial;
    const SurfaceAnalysis s = darboux_frame(spec, serial);
    double mismatch = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const FrameSample &p = a.samples[i], &q = s.samples[i];
      mismatch = std::max({mismatch, (p.c - q.c).norm(), (p.t - q.t).norm(), (p.g - q.g).norm(),
                           std::abs(p.Delta - q.Delta), std::abs(p.delta - q.delta),
                           std::abs(p.gamma - q.gamma), std::abs(p.s_star - q.s_star)});
    }
    suite.exact(tag + "parallel_equals_serial", mismatch);
  }

  // Sliding the base curve along the rulings, p + μ e with
  // μ(u) = 0.3 sin 2u + 0.1 u², must not change c, Δ, δ, γ.
  for (const SurfaceSpec* spec : {&surfaces[0], &surfaces[2]}) {
    const CurveField e = spec->director(), p = spec->base();
    auto mu = [](double u) { return 0.3 * std::sin(2.0 * u) + 0.1 * u * u; };
    auto mu1 = [](double u) { return 0.6 * std::cos(2.0 * u) + 0.2 * u; };
    auto mu2 = [](double u) { return -1.2 * std::sin(2.0 * u) + 0.2; };
    CurveField slid_base;
    slid_base.value = [=](double u) { return Vec3(p.value(u) + mu(u) * e.value(u)); };
    slid_base.d1 = [=](double u) {
      return Vec3(p.d1(u) + mu1(u) * e.value(u) + mu(u) * e.d1(u));
    };
    slid_base.d2 = [=](double u) {
      return Vec3(p.d2(u) + mu2(u) * e.value(u) + 2.0 * mu1(u) * e.d1(u) + mu(u) * e.d2(u));
    };
    const SurfaceSpec slid = SurfaceSpec::analytic(spec->name() + "/slid", e, slid_base,
                                                   spec->range(), spec->sample_count());
    const SurfaceAnalysis a = darboux_frame(*spec);
    const SurfaceAnalysis b = darboux_frame(slid);
    const double dev = max_over_interior(a, [&](const FrameSample& f, std::size_t i) {
      const FrameSample& h = b.samples[i];
      return std::max({(f.c - h.c).norm(), std::abs(f.Delta - h.Delta), std::abs(f.delta - h.delta),
                       std::abs(f.gamma - h.gamma)});
    });
    suite.check(spec->name() + ".striction_invariance", dev, "striction_invariance");
  }
}

void paraboloid_suite(const Settings& settings, Report& report) {
  Suite suite("paraboloid", settings, report);
  const SurfaceSpec spec = catalog::hyperbolic_paraboloid(catalog::kDefaultRange, settings.sample_count);
  const SurfaceAnalysis a = darboux_frame(spec);

  const Vec3 g_expected(-kSqrt2 / 2.0, -kSqrt2 / 2.0, 0.0);
  double g_dev = 0.0, delta_dev = 0.0, Delta_dev = 0.0, gamma_dev = 0.0, curve_dev = 0.0;
  for (const FrameSample& f : a.samples) {
    const double u = f.u;
    g_dev = std::max(g_dev, (f.g - g_expected).norm());
    delta_dev = std::max(delta_dev, std::abs(f.delta));
    Delta_dev = std::max(Delta_dev, std::abs(f.Delta + (1.0 + 2.0 * u * u) / 2.0));
    gamma_dev = std::max(gamma_dev, std::abs(f.gamma));
    const double scale = kSqrt2 / std::sqrt(1.0 + 2.0 * u * u);
    const DualVector expected{scale * Vec3(0.5, -0.5, u), scale * Vec3(0.5 * u * u, -0.5 * u * u, -0.5 * u)};
    const PartNorms d = part_norms(f.e_dual() - expected);
    curve_dev = std::max({curve_dev, d.real, d.dual});
  }
  suite.check("binormal_constant", g_dev, "paraboloid_frame");
  suite.check("gamma_zero", gamma_dev, "paraboloid_gamma");
  suite.check("delta_zero", delta_dev, "paraboloid_frame");
  suite.check("Delta_closed_form", Delta_dev, "paraboloid_frame");
  suite.check("dual_curve_closed_form", curve_dev, "paraboloid_dual_curve");

  const std::size_t mid = a.size() / 2;
  const PartNorms at0 = part_norms(a.samples[mid].e_dual() - DualVector{Vec3(kSqrt2 / 2.0, -kSqrt2 / 2.0, 0.0), Vec3::Zero()});
  suite.check("dual_curve_at_origin", std::max(at0.real, at0.dual), "paraboloid_dual_curve");

  // θ*(u) = (√2/2) u + c* from the cumulative integral of Δ.
  const OffsetAngles angles = offset_angle(a, 0.3, 1.25);
  double profile = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    profile = std::max(profile, std::abs(angles.theta_star[i] - (kSqrt2 / 2.0 * a.samples[i].u + 1.25)));
  }
  suite.check("offset_distance_profile", profile, "paraboloid_angle_profile");

  struct Case {
    const char* label;
    double theta, theta_star, shift;
  };
  const Case cases[] = {{"offset(0,4sqrt2)", 0.0, 4.0 * kSqrt2, -4.0},
                        {"offset(pi/4,2sqrt2)", M_PI / 4.0, 2.0 * kSqrt2, -2.0}};
  for (const Case& c : cases) {
    const OffsetSpec os = OffsetSpec::constant_angle(c.theta, c.theta_star);
    const OffsetConstruction built = construct_offset(a, os);
    double constructed = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double u = a.samples[i].u;
      constructed = std::max(constructed, (built.striction[i] - Vec3(u / 2 + c.shift, u / 2 + c.shift, 0.0)).norm());
    }
    suite.check(std::string(c.label) + ".striction_line", constructed, "paraboloid_offset_striction");

    try {
      const OffsetReport r = verify_offset(a, os, built, offset_options(settings));
      double recomputed = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double u = a.samples[i].u;
        recomputed = std::max(recomputed, (r.offset.samples[i].c - Vec3(u / 2 + c.shift, u / 2 + c.shift, 0.0)).norm());
      }
      suite.check(std::string(c.label) + ".recomputed_striction_line", recomputed, "paraboloid_offset_striction");
      suite.note(std::string(c.label) + " Mannheim residual (informational) real=" + fmt(r.mannheim_real) +
                 " dual=" + fmt(r.mannheim_dual));
    } catch (const DegenerateOffset& e) {
      suite.note(std::string(c.label) + " not re-analyzed: " + e.what());
    }
  }
}

void mannheim_offset_suite(const Settings& settings, Report& report) {
  Suite suite("mannheim-offset", settings, report);
  const std::size_t n = settings.sample_count;

  for (const OffsetCase& oc : theorem_cases(n)) {
    const SurfaceAnalysis a = darboux_frame(oc.surface);
    const OffsetReport r = verify_offset(a, oc.offset, offset_options(settings));
    std::ostringstream label;
    label.precision(4);
    label << oc.surface.name() << "[c=" << oc.offset.angle << "]";
    const std::string name = label.str();
    const std::string tag = name + ".";

    double theta_lo = 1e300, theta_hi = -1e300;
    for (double t : r.construction.angles.theta) {
      theta_lo = std::min(theta_lo, t);
      theta_hi = std::max(theta_hi, t);
    }
    suite.note(name + " theta range [" + fmt(theta_lo) + ", " + fmt(theta_hi) + "]");

    // The fixed rotation taking {ẽ, t̃, g̃} to {ẽ₁, t̃₁, g̃₁} is a proper
    // dual orthogonal matrix.
    double rotation = 0.0;
    for (const OffsetRow& row : r.rows) {
      const PredictedInvariants& p = row.predicted;
      const DualVector f[3] = {p.e1, p.t1, p.g1};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          rotation = std::max(rotation, max_abs_diff(dual_dot(f[i], f[j]), {i == j ? 1.0 : 0.0, 0.0}));
        }
      }
      rotation = std::max(rotation, max_abs_diff(dual_dot(dual_cross(p.e1, p.t1), p.g1), {1.0, 0.0}));
    }
    suite.check(tag + "frame_rotation_orthogonal", rotation, "frame_rotation");
    suite.check(tag + "moment_consistency", r.construction.moment_consistency, "moment_consistency");
    suite.check(tag + "mannheim_residual.real", r.mannheim_real, "mannheim_real");
    suite.check(tag + "mannheim_residual.dual", r.mannheim_dual, "mannheim_dual");

    // Independently recomputed offset frame against the rotated base frame.
    double frame = 0.0;
    for (std::size_t i = kDefaultMargin; i + kDefaultMargin < a.size(); ++i) {
      const PredictedInvariants& p = r.rows[i].predicted;
      const FrameSample& f1 = r.offset.samples[i];
      for (const DualVector& d : {p.e1 - f1.e_dual(), p.t1 - f1.t_dual(), p.g1 - f1.g_dual()}) {
        const PartNorms pn = part_norms(d);
        frame = std::max({frame, pn.real, pn.dual});
      }
    }
    suite.check(tag + "recomputed_frame", frame, "offset_frame");

    for (const Comparison& c : r.table) {
      suite.check(tag + c.quantity, c.compared ? c.max_deviation : INFINITY, "offset_invariants");
      if (c.guarded) suite.note(tag + c.quantity + " guarded at " + std::to_string(c.guarded) + " samples");
    }

    // dθ̄/ds̄ = −1 + ε0 from differences on the grid.
    std::vector<double> th = r.construction.angles.theta, ths = r.construction.angles.theta_star, s, ss;
    for (const FrameSample& f : a.samples) {
      s.push_back(f.s);
      ss.push_back(f.s_star);
    }
    const auto dth = numerics::first_derivative_5pt<double>(th, a.h);
    const auto dths = numerics::first_derivative_5pt<double>(ths, a.h);
    const auto ds = numerics::first_derivative_5pt<double>(s, a.h);
    const auto dss = numerics::first_derivative_5pt<double>(ss, a.h);
    double law = 0.0;
    for (std::size_t i = kDefaultMargin; i + kDefaultMargin < a.size(); ++i) {
      law = std::max(law, max_abs_diff(dual_div({dth[i], dths[i]}, {ds[i], dss[i]}), {-1.0, 0.0}));
    }
    suite.check(tag + "angle_law", law, "angle_law");
  }

  // Developability of the cone: Δ ≡ 0 and θ* constant along a
  // theorem-consistent offset.
  const SurfaceAnalysis cone = darboux_frame(catalog::cone(M_PI / 4.0, catalog::kDefaultRange, n));
  const DevelopabilityEvidence ev =
      developability_conditions(cone, offset_angle(cone, M_PI / 2.0, 0.5), settings.guards);
  suite.check("cone.base_max_abs_Delta", ev.max_abs_Delta, "developable_base");
  suite.check("cone.theta_star_variation", ev.theta_star_variation, "developable_base");

  auto developable_offset = [&](const SurfaceAnalysis& base, double c, const std::string& tag) {
    const OffsetAngles angles = developable_offset_angles(base, c, settings.guards);
    const OffsetConstruction built = construct_offset(base, angles, base.name + "/developable");
    const SurfaceAnalysis off = darboux_frame(built.spec);
    const double worst = max_over_interior(off, [](const FrameSample& f, std::size_t) { return std::abs(f.Delta); });
    suite.check(tag + ".developable_offset_max_abs_Delta", worst, "developable_offset");
  };
  developable_offset(cone, M_PI / 2.0, "cone");
  // A non-developable base whose developable offset distance varies along s.
  const SurfaceAnalysis hyper = darboux_frame(catalog::small_circle(M_PI / 6.0, {-0.5, 0.5}, n));
  developable_offset(hyper, 0.8, hyper.name);

  // Closed-form predictions.
  FrameSample unit;
  unit.e = Vec3::UnitX();
  unit.t = Vec3::UnitY();
  unit.g = Vec3::UnitZ();
  unit.gamma = 1.0;
  const PredictedInvariants right = predict_at(unit, {M_PI / 2.0, 0.0}, settings.guards);
  const PredictedInvariants quarter = predict_at(unit, {M_PI / 4.0, 2.0 * kSqrt2}, settings.guards);
  suite.check("right_offset_prediction",
              std::max(std::abs(right.gamma.value()), std::abs(right.R.real - 1.0)), "algebra");
  suite.check("quarter_offset_dual_sine", max_abs_diff(quarter.R, {kSqrt2 / 2.0, 2.0}), "algebra");
}

void cli_suite(const Settings& settings, Report& report) {
  Suite suite("cli", settings, report);
  const std::size_t n = settings.sample_count;
  for (const SurfaceSpec& spec : {catalog::hyperbolic_paraboloid(catalog::kDefaultRange, n),
                                  catalog::small_circle(M_PI / 6.0, catalog::kDefaultRange, n)}) {
    const SurfaceAnalysis a = darboux_frame(spec);
    std::stringstream csv;
    io::write_analysis_csv(csv, a);
    const SurfaceAnalysis b = darboux_frame(io::read_sampled_surface(csv, spec.name() + "/csv").with_arc_origin(a.arc_origin));
    const double dev = max_over_interior(a, [&](const FrameSample& f, std::size_t i) {
      const FrameSample& g = b.samples[i];
      return std::max({std::abs(f.Delta - g.Delta), std::abs(f.delta - g.delta), std::abs(f.gamma - g.gamma)});
    });
    suite.check(spec.name() + ".csv_roundtrip", dev, "csv_roundtrip");
  }
}

Report run_all(const Settings& settings) {
  Report report;
  dual_algebra_suite(settings, report);
  line_geometry_suite(settings, report);
  ruled_surface_suite(settings, report);
  paraboloid_suite(settings, report);
  mannheim_offset_suite(settings, report);
  cli_suite(settings, report);
  return report;
}

}  // namespace mannheim::verify
