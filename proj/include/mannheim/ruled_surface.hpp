#pragma once

/**
 * Ruled-surface analysis: a surface x(u, v) = p(u) + v e(u) is turned into its
 * dual spherical curve ẽ = e + ε c × e, with c the striction curve, and the
 * dual Darboux frame {ẽ, t̃, g̃} with invariants Δ, δ, γ is computed on a
 * uniform u-grid. All quantities are reported against the arc length s of
 * the real indicatrix e(u).
 */

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mannheim/dual.hpp"

namespace mannheim {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// u ↦ R³, optionally with analytic first and second derivatives.
struct CurveField {
  std::function<Vec3(double)> value;
  std::function<Vec3(double)> d1;
  std::function<Vec3(double)> d2;

  bool has_derivatives() const { return static_cast<bool>(d1) && static_cast<bool>(d2); }
};

/// Director and base values with their u-derivatives on the analysis grid.
struct GridSamples {
  std::vector<double> u;
  double h = 0.0;
  bool analytic = false;
  std::vector<Vec3> e, e_u, e_uu;
  std::vector<Vec3> p, p_u, p_uu;

  std::size_t size() const { return u.size(); }
};

inline constexpr std::size_t kDefaultSampleCount = 2001;
/// Indicatrix speeds ‖e′(u)‖ below this are degenerate.
inline constexpr double kIndicatrixSpeedMin = 1e-9;
/// Accepted deviation of ‖e(u)‖ from one.
inline constexpr double kDirectorUnitTolerance = 1e-9;

/// Parametric ruled surface: director e(u) (unit), base curve p(u), parameter
/// range and grid size. Analytic surfaces may supply derivative oracles;
/// sampled surfaces are always differentiated on the grid.
class SurfaceSpec {
 public:
  static SurfaceSpec analytic(std::string name, CurveField director, CurveField base,
                              Interval range, std::size_t sample_count = kDefaultSampleCount);
  static SurfaceSpec sampled(std::string name, std::vector<double> u,
                             std::vector<Vec3> director, std::vector<Vec3> base);

  const std::string& name() const { return name_; }
  Interval range() const { return range_; }
  std::size_t sample_count() const { return sample_count_; }
  bool has_analytic_derivatives() const;
  bool is_sampled() const { return !sampled_u_.empty(); }

  /// Parameter value where s and s* are zero: u = 0 clamped into the range
  /// unless set explicitly.
  double arc_origin() const;
  SurfaceSpec with_arc_origin(double u) const;
  /// Analytic surfaces only; sampled grids are fixed.
  SurfaceSpec with_sample_count(std::size_t n) const;
  SurfaceSpec with_range(Interval range) const;

  Vec3 director_at(double u) const;
  Vec3 base_at(double u) const;
  /// Empty for sampled surfaces.
  const CurveField& director() const { return director_; }
  const CurveField& base() const { return base_; }

  /// Evaluates (or differentiates) the director and base on the grid.
  /// Throws InvalidSurface on a non-unit director or a malformed grid.
  GridSamples sample() const;

 private:
  SurfaceSpec() = default;
  void validate_grid() const;

  std::string name_;
  CurveField director_;
  CurveField base_;
  Interval range_;
  std::size_t sample_count_ = 0;
  bool origin_set_ = false;
  double origin_ = 0.0;

  std::vector<double> sampled_u_;
  std::vector<Vec3> sampled_e_;
  std::vector<Vec3> sampled_p_;
};

/// Monotone map between the grid parameter u and indicatrix arc length s.
class Reparametrization {
 public:
  Reparametrization(std::vector<double> u, std::vector<double> speed, double origin);

  double s_of_u(double u) const;
  double u_of_s(double s) const;
  /// ds/du, Hermite-interpolated between nodes.
  double speed_at(double u) const;

  const std::vector<double>& u_nodes() const { return u_; }
  const std::vector<double>& s_nodes() const { return s_; }
  const std::vector<double>& speeds() const { return speed_; }

 private:
  std::vector<double> u_, s_, speed_, inv_speed_, speed_slope_;
};

/// Arc length s(u) = ∫‖e′‖ du by composite Simpson.
/// Throws DegenerateIndicatrix when ‖e′‖ < kIndicatrixSpeedMin anywhere.
Reparametrization reparametrize(const SurfaceSpec& spec);
Reparametrization reparametrize(const GridSamples& grid, double origin);

/// One station of the analyzed surface.
struct FrameSample {
  double u = 0.0;
  double s = 0.0;
  double s_star = 0.0;  ///< ∫Δ ds from the arc origin
  double speed = 0.0;   ///< ds/du
  Vec3 c = Vec3::Zero();
  Vec3 e = Vec3::Zero();
  Vec3 t = Vec3::Zero();
  Vec3 g = Vec3::Zero();
  double Delta = 0.0;       ///< distribution parameter det(c′, e, t)
  double delta = 0.0;       ///< ⟨c′, e⟩
  double gamma = 0.0;       ///< conical curvature
  double gamma_dual = 0.0;  ///< δ − γΔ

  DualScalar gamma_bar() const { return {gamma, gamma_dual}; }
  DualVector e_dual() const { return {e, c.cross(e)}; }
  DualVector t_dual() const { return {t, c.cross(t)}; }
  DualVector g_dual() const { return {g, c.cross(g)}; }
};

/// R̄ = 1/√(1+γ̄²), ρ̄ with sin ρ̄ = R̄ and cos ρ̄ = γ̄R̄, d̃₀ = γ̄R̄ ẽ + R̄ g̃.
struct DualInvariants {
  DualScalar R;
  DualAngle rho;
  DualVector darboux;
};

DualInvariants dual_invariants(const FrameSample& sample);

struct SurfaceAnalysis {
  std::string name;
  double h = 0.0;
  double arc_origin = 0.0;
  bool analytic = false;
  std::vector<FrameSample> samples;
  std::vector<DualInvariants> invariants;

  std::size_t size() const { return samples.size(); }
  Reparametrization reparametrization() const;
};

enum class Execution { serial, parallel };

struct AnalysisOptions {
  Execution execution = Execution::parallel;
};

/// Full pipeline: grid sampling, reparametrization, striction curve, frame, invariants.
SurfaceAnalysis darboux_frame(const SurfaceSpec& spec, const AnalysisOptions& options = {});
SurfaceAnalysis darboux_frame(const GridSamples& grid, double arc_origin,
                              const std::string& name = {}, const AnalysisOptions& options = {});

struct StrictionCurve {
  std::vector<double> u, s;
  std::vector<Vec3> point;
};
StrictionCurve striction_curve(const SurfaceSpec& spec);

struct DualCurve {
  std::vector<double> u, s;
  std::vector<DualVector> e;
};
DualCurve dual_curve(const SurfaceSpec& spec);

/// c(s) + v e(s); s is interpolated with cubic Hermite using c′ = δe + Δg and e′ = t.
/// Throws OutOfRange when s lies outside the analyzed range.
Vec3 evaluate_surface(const SurfaceAnalysis& analysis, double s, double v);
Vec3 evaluate_surface_at(const SurfaceAnalysis& analysis, std::size_t sample, double v);

struct Developability {
  bool developable = false;
  double max_abs_delta = 0.0;
};
Developability is_developable(const SurfaceAnalysis& analysis, double tol);

// Diagnostics. Derivatives along s come from a five-point stencil on the
// u-grid; `margin` samples at each end are left out of the maxima.

struct ResidualProfile {
  std::vector<double> per_sample;
  double max_interior = 0.0;
  std::size_t argmax = 0;
};

struct FrameOdeResidual {
  ResidualProfile real;             ///< e′ = t, t′ = γg − e, g′ = −γt
  ResidualProfile dual;             ///< dual parts of ẽ′ = s̄′ t̃ etc.
  ResidualProfile orthonormality;   ///< ⟨e,t⟩, ⟨t,g⟩, ⟨e,g⟩, norms, det − 1
};

inline constexpr std::size_t kDefaultMargin = 2;

FrameOdeResidual frame_ode_residual(const SurfaceAnalysis& analysis,
                                    std::size_t margin = kDefaultMargin);
/// ‖c′ − δe − Δg‖.
ResidualProfile striction_residual(const SurfaceAnalysis& analysis,
                                   std::size_t margin = kDefaultMargin);
/// |⟨c′, t⟩|, the defining property of the striction curve.
ResidualProfile striction_orthogonality(const SurfaceAnalysis& analysis,
                                        std::size_t margin = kDefaultMargin);
/// max(|ds/ds − 1|, |ds*/ds − Δ|) from differences of (s, s*).
ResidualProfile arc_length_residual(const SurfaceAnalysis& analysis,
                                    std::size_t margin = kDefaultMargin);

}  // namespace mannheim
