#pragma once

/**
 * Mannheim offsets of ruled surfaces.
 *
 * An offset is built from the base surface's dual Darboux frame with a dual
 * offset angle θ̄(s) = θ + εθ*: director ẽ₁ = cos θ̄ ẽ + sin θ̄ t̃, striction
 * curve c₁ = c + θ* g. The offset is then analyzed from scratch by the
 * ruled-surface pipeline, and its recomputed invariants are compared against
 * the closed-form Mannheim relations (ds₁/ds = γ sin θ, Δ₁, δ₁, γ₁ = cot θ,
 * R̄₁ = sin θ̄, ρ̄₁ = θ̄, d̃₀₁ = cos θ̄ ẽ₁ + sin θ̄ g̃₁).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mannheim/dual.hpp"
#include "mannheim/ruled_surface.hpp"

namespace mannheim {

enum class OffsetMode {
  /// θ = −s + c, θ* = −∫Δ ds + c*: the only angle law a Mannheim pair admits.
  theorem_consistent,
  /// Fixed θ̄; reproduces constant-angle example surfaces.
  constant_angle,
};

const char* mode_name(OffsetMode mode);

struct OffsetSpec {
  OffsetMode mode = OffsetMode::theorem_consistent;
  double angle = 0.0;     ///< c (theorem_consistent) or θ (constant_angle), radians
  double distance = 0.0;  ///< c* or θ*, length

  static OffsetSpec theorem_consistent(double c, double c_star) {
    return {OffsetMode::theorem_consistent, c, c_star};
  }
  static OffsetSpec constant_angle(double theta, double theta_star) {
    return {OffsetMode::constant_angle, theta, theta_star};
  }
};

/// Per-sample dual offset angle.
struct OffsetAngles {
  std::vector<double> theta;
  std::vector<double> theta_star;

  DualAngle at(std::size_t i) const { return {theta[i], theta_star[i]}; }
  std::size_t size() const { return theta.size(); }
};

/// θ(s) = −s + c, θ*(s) = −s*(s) + c*.
OffsetAngles offset_angle(const SurfaceAnalysis& analysis, double c, double c_star);
OffsetAngles offset_angles(const SurfaceAnalysis& analysis, const OffsetSpec& spec);

struct OffsetConstruction {
  SurfaceSpec spec;                   ///< sampled on the base grid
  OffsetAngles angles;
  std::vector<DualVector> director;   ///< cos θ̄ ẽ + sin θ̄ t̃
  std::vector<Vec3> striction;        ///< c + θ* g
  /// max ‖dual(ẽ₁) − c₁ × e₁‖: the moment of the rotated ruling agrees with
  /// the transported striction point.
  double moment_consistency = 0.0;
};

/// Throws DegenerateOffset when the offset director does not move at all.
OffsetConstruction construct_offset(const SurfaceAnalysis& analysis, const OffsetSpec& spec);
OffsetConstruction construct_offset(const SurfaceAnalysis& analysis, const OffsetAngles& angles,
                                    const std::string& name);

struct OffsetGuards {
  double gamma_min = 1e-6;
  double sin_min = 1e-6;
  /// θ must stay inside (margin, π − margin) for cot θ checks.
  double theta_margin = 1e-3;
};

/// A value, or the guard that made its formula undefined.
class Guarded {
 public:
  static Guarded of(double v) { return Guarded(v, std::nullopt); }
  static Guarded blocked(Guard g) { return Guarded(0.0, g); }

  bool has_value() const { return !guard_.has_value(); }
  /// Throws SingularFormula when blocked.
  double value() const {
    if (guard_) throw SingularFormula(*guard_);
    return value_;
  }
  std::optional<Guard> guard() const { return guard_; }

 private:
  Guarded(double v, std::optional<Guard> g) : value_(v), guard_(g) {}
  double value_;
  std::optional<Guard> guard_;
};

struct PredictedInvariants {
  DualAngle theta;
  double speed_ratio = 0.0;   ///< ds₁/ds = γ sin θ
  DualScalar dual_speed_ratio;  ///< ds̄₁/ds̄ = γ̄ sin θ̄
  Guarded Delta = Guarded::of(0.0);  ///< θ* cot θ + δ/γ
  Guarded delta = Guarded::of(0.0);  ///< (δ/γ) cot θ − θ*
  Guarded gamma = Guarded::of(0.0);  ///< cot θ
  DualScalar R;               ///< sin θ̄
  DualAngle rho;              ///< θ̄
  DualVector e1, t1, g1;      ///< offset frame from the fixed rotation of {ẽ, t̃, g̃}
  DualVector darboux;         ///< cos θ̄ ẽ₁ + sin θ̄ g̃₁
};

PredictedInvariants predict_at(const FrameSample& base, DualAngle theta,
                               const OffsetGuards& guards = {});
std::vector<PredictedInvariants> predicted_invariants(const SurfaceAnalysis& analysis,
                                                      const OffsetAngles& angles,
                                                      const OffsetGuards& guards = {});

struct DevelopabilityEvidence {
  double max_abs_Delta = 0.0;         ///< base surface
  double theta_star_variation = 0.0;  ///< max θ* − min θ*
  /// θ* = −(δ/γ) tan θ per sample: the distance profile making the offset developable.
  std::vector<Guarded> developable_theta_star;
};

DevelopabilityEvidence developability_conditions(const SurfaceAnalysis& analysis,
                                                 const OffsetAngles& angles,
                                                 const OffsetGuards& guards = {});

/// θ = −s + c with θ* taken from the developability profile.
/// Throws SingularFormula when any sample is guarded.
OffsetAngles developable_offset_angles(const SurfaceAnalysis& analysis, double c,
                                       const OffsetGuards& guards = {});

struct RecomputedInvariants {
  double speed_ratio = 0.0;     ///< ds₁/ds from the two pipelines' speeds
  DualScalar dual_speed_ratio;  ///< ds̄₁/ds̄ from differences of (s₁, s₁*) and (s, s*)
  double Delta = 0.0, delta = 0.0, gamma = 0.0;
  DualScalar R;
  DualAngle rho;
  DualVector darboux;
};

struct OffsetRow {
  double u = 0.0;
  DualAngle theta;
  PredictedInvariants predicted;
  RecomputedInvariants recomputed;
  PartNorms mannheim;   ///< ‖g̃ − t̃₁‖, real and dual parts
  bool in_margin = false;
};

struct Comparison {
  std::string quantity;
  double max_deviation = 0.0;
  std::size_t compared = 0;
  std::size_t guarded = 0;
  std::optional<Guard> first_guard;
};

struct OffsetReport {
  OffsetSpec spec;
  OffsetConstruction construction;
  SurfaceAnalysis offset;
  double mannheim_real = 0.0;
  double mannheim_dual = 0.0;
  /// constant_angle offsets generally violate the Mannheim condition; the
  /// residual is reported, not asserted.
  bool mannheim_informational = false;
  std::vector<Comparison> table;
  std::vector<OffsetRow> rows;
  Developability base_class;
  Developability offset_class;

  const Comparison& comparison(const std::string& quantity) const;
};

struct VerifyOptions {
  OffsetGuards guards;
  double developable_tol = 1e-6;
  std::size_t margin = kDefaultMargin;
  AnalysisOptions analysis;
};

/// Constructs the offset, re-analyzes it independently and compares.
/// Throws DegenerateOffset when the offset indicatrix is singular, including
/// theorem-consistent offsets whose predicted speed γ sin θ vanishes.
OffsetReport verify_offset(const SurfaceAnalysis& analysis, const OffsetSpec& spec,
                           const VerifyOptions& options = {});
OffsetReport verify_offset(const SurfaceAnalysis& analysis, const OffsetSpec& spec,
                           OffsetConstruction construction, const VerifyOptions& options = {});

/// Names of the comparison rows, in table order.
const std::vector<std::string>& comparison_quantities();

}  // namespace mannheim
