#include "mannheim/ruled_surface.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "mannheim/numerics.hpp"

namespace mannheim {

namespace {

std::vector<Vec3> eval_all(const std::function<Vec3(double)>& f, const std::vector<double>& u) {
  std::vector<Vec3> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f(u[i]);
  return out;
}

void check_unit_director(const GridSamples& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double dev = std::abs(g.e[i].norm() - 1.0);
    if (!(dev <= kDirectorUnitTolerance)) {
      std::ostringstream msg;
      msg << "director is not unit at u = " << g.u[i] << " (| |e| - 1 | = " << dev << ")";
      throw InvalidSurface(msg.str());
    }
  }
}

// e′ with the component along e removed; exact data is already tangent.
Vec3 tangent_part(const Vec3& e, const Vec3& e_u) { return e_u - e.dot(e_u) * e; }

std::vector<double> indicatrix_speeds(const GridSamples& g) {
  std::vector<double> speed(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec3 e = g.e[i].normalized();
    speed[i] = tangent_part(e, g.e_u[i]).norm();
    if (!(speed[i] >= kIndicatrixSpeedMin)) {
      std::ostringstream msg;
      msg << "indicatrix is singular at u = " << g.u[i] << " (|e'| = " << speed[i]
          << "); cylindrical patches are not supported";
      throw DegenerateIndicatrix(msg.str());
    }
  }
  return speed;
}

// Per-sample frame kernel. Everything except s and s* is local to node i.
FrameSample frame_kernel(const GridSamples& g, std::size_t i) {
  FrameSample out;
  out.u = g.u[i];
  const Vec3 e = g.e[i].normalized();
  const Vec3 e_u = tangent_part(e, g.e_u[i]);
  const Vec3& e_uu = g.e_uu[i];
  const Vec3& p = g.p[i];
  const Vec3& p_u = g.p_u[i];
  const Vec3& p_uu = g.p_uu[i];

  const double sigma2 = e_u.squaredNorm();
  const double sigma = std::sqrt(sigma2);
  const Vec3 t = e_u / sigma;
  const Vec3 gvec = e.cross(t);

  // Striction: c = p + λ₀e with λ₀ = −⟨p′, e′⟩ measured in arc length.
  const double pe = p_u.dot(e_u);
  const double lambda = -pe / sigma2;
  const double lambda_u =
      -(p_uu.dot(e_u) + p_u.dot(e_uu)) / sigma2 + 2.0 * pe * e_u.dot(e_uu) / (sigma2 * sigma2);
  const Vec3 c_u = p_u + lambda_u * e + lambda * e_u;
  const Vec3 c_s = c_u / sigma;

  out.speed = sigma;
  out.c = p + lambda * e;
  out.e = e;
  out.t = t;
  out.g = gvec;
  out.Delta = c_s.dot(e.cross(t));
  out.delta = c_s.dot(e);
  out.gamma = e_uu.dot(gvec) / sigma2;
  out.gamma_dual = out.delta - out.gamma * out.Delta;
  return out;
}

std::vector<double> anchored_integral(const std::vector<double>& integrand_u,
                                      const std::vector<double>& u, double h, double origin) {
  std::vector<double> acc = numerics::cumulative_simpson(integrand_u, h);
  const double at_origin = numerics::hermite(u, acc, integrand_u, origin);
  for (double& a : acc) a -= at_origin;
  return acc;
}

ResidualProfile summarize(std::vector<double> values, std::size_t margin) {
  ResidualProfile out;
  out.per_sample = std::move(values);
  const std::size_t n = out.per_sample.size();
  bool first = true;
  for (std::size_t i = margin; i + margin < n; ++i) {
    if (first || out.per_sample[i] > out.max_interior) {
      out.max_interior = out.per_sample[i];
      out.argmax = i;
      first = false;
    }
  }
  return out;
}

template <class T, class F>
std::vector<T> collect(const SurfaceAnalysis& a, F&& f) {
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a.samples[i]);
  return out;
}

// d/ds of a sampled field via the five-point stencil in u and the chain rule.
template <class T>
std::vector<T> d_ds(const SurfaceAnalysis& a, const std::vector<T>& f) {
  std::vector<T> d = numerics::first_derivative_5pt<T>(f, a.h);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = d[i] / a.samples[i].speed;
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// SurfaceSpec

SurfaceSpec SurfaceSpec::analytic(std::string name, CurveField director, CurveField base,
                                  Interval range, std::size_t sample_count) {
  if (!director.value || !base.value) throw InvalidSurface("surface needs director and base curves");
  SurfaceSpec s;
  s.name_ = std::move(name);
  s.director_ = std::move(director);
  s.base_ = std::move(base);
  s.range_ = range;
  s.sample_count_ = sample_count;
  s.validate_grid();
  return s;
}

SurfaceSpec SurfaceSpec::sampled(std::string name, std::vector<double> u, std::vector<Vec3> director,
                                 std::vector<Vec3> base) {
  if (u.size() != director.size() || u.size() != base.size()) {
    throw InvalidSurface("sampled surface: column lengths differ");
  }
  if (u.size() < 5) throw InvalidSurface("sampled surface: need at least five samples");
  SurfaceSpec s;
  s.name_ = std::move(name);
  s.range_ = {u.front(), u.back()};
  s.sample_count_ = u.size();
  s.sampled_u_ = std::move(u);
  s.sampled_e_ = std::move(director);
  s.sampled_p_ = std::move(base);
  s.validate_grid();
  return s;
}

void SurfaceSpec::validate_grid() const {
  if (!(range_.hi > range_.lo)) throw InvalidSurface("parameter range must have lo < hi");
  if (sample_count_ < 5 || sample_count_ % 2 == 0) {
    throw InvalidSurface("sample count must be odd and at least 5 (Simpson quadrature), got " +
                         std::to_string(sample_count_));
  }
  if (!sampled_u_.empty()) {
    const double h = (range_.hi - range_.lo) / static_cast<double>(sample_count_ - 1);
    for (std::size_t i = 1; i < sampled_u_.size(); ++i) {
      const double step = sampled_u_[i] - sampled_u_[i - 1];
      if (std::abs(step - h) > 1e-8 * std::abs(h)) {
        throw InvalidSurface("sampled surface: u grid must be uniform and ascending");
      }
    }
  }
}

bool SurfaceSpec::has_analytic_derivatives() const {
  return !is_sampled() && director_.has_derivatives() && base_.has_derivatives();
}

double SurfaceSpec::arc_origin() const {
  if (origin_set_) return origin_;
  return std::clamp(0.0, range_.lo, range_.hi);
}

SurfaceSpec SurfaceSpec::with_arc_origin(double u) const {
  if (!range_.contains(u)) throw OutOfRange("arc origin outside the parameter range");
  SurfaceSpec s = *this;
  s.origin_set_ = true;
  s.origin_ = u;
  return s;
}

SurfaceSpec SurfaceSpec::with_sample_count(std::size_t n) const {
  if (is_sampled()) throw InvalidSurface("cannot resample a sampled surface");
  SurfaceSpec s = *this;
  s.sample_count_ = n;
  s.validate_grid();
  return s;
}

SurfaceSpec SurfaceSpec::with_range(Interval range) const {
  if (is_sampled()) throw InvalidSurface("cannot change the range of a sampled surface");
  SurfaceSpec s = *this;
  s.range_ = range;
  s.validate_grid();
  return s;
}

Vec3 SurfaceSpec::director_at(double u) const {
  if (is_sampled()) throw InvalidSurface("sampled surfaces have no continuous director");
  return director_.value(u);
}

Vec3 SurfaceSpec::base_at(double u) const {
  if (is_sampled()) throw InvalidSurface("sampled surfaces have no continuous base curve");
  return base_.value(u);
}

GridSamples SurfaceSpec::sample() const {
  GridSamples g;
  if (is_sampled()) {
    g.u = sampled_u_;
    g.e = sampled_e_;
    g.p = sampled_p_;
  } else {
    g.u = numerics::uniform_grid(range_.lo, range_.hi, sample_count_);
    g.e = eval_all(director_.value, g.u);
    g.p = eval_all(base_.value, g.u);
  }
  g.h = (range_.hi - range_.lo) / static_cast<double>(sample_count_ - 1);
  check_unit_director(g);

  if (has_analytic_derivatives()) {
    g.analytic = true;
    g.e_u = eval_all(director_.d1, g.u);
    g.e_uu = eval_all(director_.d2, g.u);
    g.p_u = eval_all(base_.d1, g.u);
    g.p_uu = eval_all(base_.d2, g.u);
  } else {
    g.e_u = numerics::first_derivative<Vec3>(g.e, g.h);
    g.e_uu = numerics::second_derivative<Vec3>(g.e, g.h);
    g.p_u = numerics::first_derivative<Vec3>(g.p, g.h);
    g.p_uu = numerics::second_derivative<Vec3>(g.p, g.h);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Reparametrization

Reparametrization::Reparametrization(std::vector<double> u, std::vector<double> speed,
                                     double origin)
    : u_(std::move(u)), speed_(std::move(speed)) {
  if (u_.size() != speed_.size() || u_.size() < 3) {
    throw std::invalid_argument("Reparametrization: mismatched or too few nodes");
  }
  const double h = (u_.back() - u_.front()) / static_cast<double>(u_.size() - 1);
  s_ = anchored_integral(speed_, u_, h, origin);
  inv_speed_.resize(speed_.size());
  for (std::size_t i = 0; i < speed_.size(); ++i) inv_speed_[i] = 1.0 / speed_[i];
  speed_slope_ = numerics::first_derivative<double>(speed_, h);
}

double Reparametrization::s_of_u(double u) const { return numerics::hermite(u_, s_, speed_, u); }

double Reparametrization::u_of_s(double s) const { return numerics::hermite(s_, u_, inv_speed_, s); }

double Reparametrization::speed_at(double u) const {
  return numerics::hermite(u_, speed_, speed_slope_, u);
}

Reparametrization reparametrize(const GridSamples& grid, double origin) {
  return Reparametrization(grid.u, indicatrix_speeds(grid), origin);
}

Reparametrization reparametrize(const SurfaceSpec& spec) {
  return reparametrize(spec.sample(), spec.arc_origin());
}

Reparametrization SurfaceAnalysis::reparametrization() const {
  std::vector<double> u(size()), speed(size());
  for (std::size_t i = 0; i < size(); ++i) {
    u[i] = samples[i].u;
    speed[i] = samples[i].speed;
  }
  return Reparametrization(std::move(u), std::move(speed), arc_origin);
}

// ---------------------------------------------------------------------------
// Analysis

DualInvariants dual_invariants(const FrameSample& sample) {
  const DualScalar gamma = sample.gamma_bar();
  const DualScalar R = dual_div(1.0, dual_sqrt(1.0 + gamma * gamma));
  const DualScalar cos_rho = gamma * R;
  DualInvariants out;
  out.R = R;
  out.rho = dual_atan2(R, cos_rho);
  out.darboux = cos_rho * sample.e_dual() + R * sample.g_dual();
  return out;
}

SurfaceAnalysis darboux_frame(const GridSamples& grid, double arc_origin, const std::string& name,
                              const AnalysisOptions& options) {
  const std::vector<double> speed = indicatrix_speeds(grid);
  const std::size_t n = grid.size();

  SurfaceAnalysis out;
  out.name = name;
  out.h = grid.h;
  out.arc_origin = arc_origin;
  out.analytic = grid.analytic;
  out.samples.resize(n);
  out.invariants.resize(n);

  const long count = static_cast<long>(n);
  if (options.execution == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
      out.samples[i] = frame_kernel(grid, static_cast<std::size_t>(i));
      out.invariants[i] = dual_invariants(out.samples[i]);
    }
  } else {
    for (long i = 0; i < count; ++i) {
      out.samples[i] = frame_kernel(grid, static_cast<std::size_t>(i));
      out.invariants[i] = dual_invariants(out.samples[i]);
    }
  }

  // Arc lengths are prefix sums and stay sequential.
  std::vector<double> delta_speed(n);
  for (std::size_t i = 0; i < n; ++i) delta_speed[i] = out.samples[i].Delta * speed[i];
  const std::vector<double> s = anchored_integral(speed, grid.u, grid.h, arc_origin);
  const std::vector<double> s_star = anchored_integral(delta_speed, grid.u, grid.h, arc_origin);
  for (std::size_t i = 0; i < n; ++i) {
    out.samples[i].s = s[i];
    out.samples[i].s_star = s_star[i];
  }
  return out;
}

SurfaceAnalysis darboux_frame(const SurfaceSpec& spec, const AnalysisOptions& options) {
  return darboux_frame(spec.sample(), spec.arc_origin(), spec.name(), options);
}

StrictionCurve striction_curve(const SurfaceSpec& spec) {
  const SurfaceAnalysis a = darboux_frame(spec);
  StrictionCurve out;
  for (const FrameSample& f : a.samples) {
    out.u.push_back(f.u);
    out.s.push_back(f.s);
    out.point.push_back(f.c);
  }
  return out;
}

DualCurve dual_curve(const SurfaceSpec& spec) {
  const SurfaceAnalysis a = darboux_frame(spec);
  DualCurve out;
  for (const FrameSample& f : a.samples) {
    out.u.push_back(f.u);
    out.s.push_back(f.s);
    out.e.push_back(f.e_dual());
  }
  return out;
}

Vec3 evaluate_surface_at(const SurfaceAnalysis& analysis, std::size_t sample, double v) {
  if (sample >= analysis.size()) throw OutOfRange("sample index outside the analysis");
  const FrameSample& f = analysis.samples[sample];
  return f.c + v * f.e;
}

Vec3 evaluate_surface(const SurfaceAnalysis& analysis, double s, double v) {
  const auto& samples = analysis.samples;
  if (samples.size() < 2 || s < samples.front().s || s > samples.back().s) {
    throw OutOfRange("arc length " + std::to_string(s) + " outside the analyzed range");
  }
  std::size_t i = 0;
  {
    std::size_t lo = 0, hi = samples.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (samples[mid].s <= s ? lo : hi) = mid;
    }
    i = lo;
  }
  const FrameSample& a = samples[i];
  const FrameSample& b = samples[i + 1];
  const double h = b.s - a.s;
  const double t = (s - a.s) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;

  const Vec3 dc_a = a.delta * a.e + a.Delta * a.g;
  const Vec3 dc_b = b.delta * b.e + b.Delta * b.g;
  const Vec3 c = h00 * a.c + h10 * h * dc_a + h01 * b.c + h11 * h * dc_b;
  const Vec3 e = (h00 * a.e + h10 * h * a.t + h01 * b.e + h11 * h * b.t).normalized();
  return c + v * e;
}

Developability is_developable(const SurfaceAnalysis& analysis, double tol) {
  Developability out;
  for (const FrameSample& f : analysis.samples) {
    out.max_abs_delta = std::max(out.max_abs_delta, std::abs(f.Delta));
  }
  out.developable = out.max_abs_delta < tol;
  return out;
}

// ---------------------------------------------------------------------------
// Diagnostics

FrameOdeResidual frame_ode_residual(const SurfaceAnalysis& a, std::size_t margin) {
  const auto e = collect<DualVector>(a, [](const FrameSample& f) { return f.e_dual(); });
  const auto t = collect<DualVector>(a, [](const FrameSample& f) { return f.t_dual(); });
  const auto g = collect<DualVector>(a, [](const FrameSample& f) { return f.g_dual(); });

  auto split = [](const std::vector<DualVector>& v, bool dual) {
    std::vector<Vec3> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = dual ? v[i].dual : v[i].real;
    return out;
  };
  const auto de_r = d_ds(a, split(e, false)), de_d = d_ds(a, split(e, true));
  const auto dt_r = d_ds(a, split(t, false)), dt_d = d_ds(a, split(t, true));
  const auto dg_r = d_ds(a, split(g, false)), dg_d = d_ds(a, split(g, true));

  const std::size_t n = a.size();
  std::vector<double> real(n), dual(n), ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FrameSample& f = a.samples[i];
    const DualScalar speed{1.0, f.Delta};  // ds̄/ds
    const DualScalar gamma = f.gamma_bar();
    const DualVector rhs_e = speed * t[i];
    const DualVector rhs_t = speed * (gamma * g[i] - e[i]);
    const DualVector rhs_g = speed * (-(gamma * t[i]));

    real[i] = std::max({(de_r[i] - rhs_e.real).norm(), (dt_r[i] - rhs_t.real).norm(),
                        (dg_r[i] - rhs_g.real).norm()});
    dual[i] = std::max({(de_d[i] - rhs_e.dual).norm(), (dt_d[i] - rhs_t.dual).norm(),
                        (dg_d[i] - rhs_g.dual).norm()});

    Eigen::Matrix3d frame;
    frame << f.e, f.t, f.g;
    ortho[i] = std::max({std::abs(f.e.dot(f.t)), std::abs(f.t.dot(f.g)), std::abs(f.e.dot(f.g)),
                         std::abs(f.e.norm() - 1.0), std::abs(f.t.norm() - 1.0),
                         std::abs(f.g.norm() - 1.0), std::abs(frame.determinant() - 1.0)});
  }
  return {summarize(std::move(real), margin), summarize(std::move(dual), margin),
          summarize(std::move(ortho), margin)};
}

ResidualProfile striction_residual(const SurfaceAnalysis& a, std::size_t margin) {
  const auto c = collect<Vec3>(a, [](const FrameSample& f) { return f.c; });
  const auto dc = d_ds(a, c);
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const FrameSample& f = a.samples[i];
    r[i] = (dc[i] - f.delta * f.e - f.Delta * f.g).norm();
  }
  return summarize(std::move(r), margin);
}

ResidualProfile striction_orthogonality(const SurfaceAnalysis& a, std::size_t margin) {
  const auto c = collect<Vec3>(a, [](const FrameSample& f) { return f.c; });
  const auto dc = d_ds(a, c);
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::abs(dc[i].dot(a.samples[i].t));
  return summarize(std::move(r), margin);
}

ResidualProfile arc_length_residual(const SurfaceAnalysis& a, std::size_t margin) {
  const auto s = collect<double>(a, [](const FrameSample& f) { return f.s; });
  const auto s_star = collect<double>(a, [](const FrameSample& f) { return f.s_star; });
  const auto ds = d_ds(a, s);
  const auto ds_star = d_ds(a, s_star);
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = std::max(std::abs(ds[i] - 1.0), std::abs(ds_star[i] - a.samples[i].Delta));
  }
  return summarize(std::move(r), margin);
}

}  // namespace mannheim
