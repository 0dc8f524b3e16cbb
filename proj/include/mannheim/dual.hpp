#pragma once

/**
 * Dual numbers a + εa* (ε² = 0) and dual 3-vectors.
 *
 * A dual unit vector (real part unit, real part orthogonal to dual part)
 * is the image of an oriented line: real part is the direction, dual part
 * the moment about the origin.
 */

#include <cmath>
#include <type_traits>
#include <utility>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "mannheim/errors.hpp"

namespace mannheim {

using Vec3 = Eigen::Vector3d;

/// Real parts below this magnitude are treated as zero when inverting.
inline constexpr double kPureDualThreshold = 2.220446049250313e-16;

struct DualScalar {
  double real = 0.0;
  double dual = 0.0;

  constexpr DualScalar() = default;
  constexpr DualScalar(double r) : real(r) {}  // NOLINT: implicit lift of reals
  constexpr DualScalar(double r, double d) : real(r), dual(d) {}

  constexpr bool operator==(const DualScalar&) const = default;

  constexpr DualScalar operator-() const { return {-real, -dual}; }
  constexpr DualScalar& operator+=(DualScalar o) {
    real += o.real;
    dual += o.dual;
    return *this;
  }
  constexpr DualScalar& operator-=(DualScalar o) {
    real -= o.real;
    dual -= o.dual;
    return *this;
  }
};

constexpr DualScalar operator+(DualScalar a, DualScalar b) { return {a.real + b.real, a.dual + b.dual}; }
constexpr DualScalar operator-(DualScalar a, DualScalar b) { return {a.real - b.real, a.dual - b.dual}; }

/// (a + εa*)(b + εb*) = ab + ε(ab* + a*b)
constexpr DualScalar dual_mul(DualScalar a, DualScalar b) {
  return {a.real * b.real, a.real * b.dual + a.dual * b.real};
}

/// Inverse of dual_mul; throws PureDualDivisor when b has no real part.
DualScalar dual_div(DualScalar a, DualScalar b);

constexpr DualScalar operator*(DualScalar a, DualScalar b) { return dual_mul(a, b); }
inline DualScalar operator/(DualScalar a, DualScalar b) { return dual_div(a, b); }

/// Extends a differentiable real function to dual arguments:
/// f(x + εx*) = f(x) + εx* f'(x).
/// Throws DomainError when f or f' is not finite at x.real.
template <class F, class DF>
DualScalar lift(F&& f, DF&& df, DualScalar x) {
  const double value = std::forward<F>(f)(x.real);
  const double slope = std::forward<DF>(df)(x.real);
  if (!std::isfinite(value) || !std::isfinite(slope)) {
    throw DomainError("lift: function undefined at real part " + std::to_string(x.real));
  }
  return {value, x.dual * slope};
}

DualScalar dual_sin(DualScalar x);
DualScalar dual_cos(DualScalar x);
DualScalar dual_tan(DualScalar x);
/// Requires x.real > 0; DomainError otherwise.
DualScalar dual_sqrt(DualScalar x);

/// Dual angle θ + εθ*: θ is the real angle, θ* the signed distance.
struct DualAngle {
  double theta = 0.0;
  double theta_star = 0.0;

  constexpr bool operator==(const DualAngle&) const = default;
  constexpr DualScalar as_dual() const { return {theta, theta_star}; }
};

/// Two-argument arctangent over dual sine/cosine parts.
/// Real part in (-π, π]; dual part (x y* − y x*) / (x² + y²).
DualAngle dual_atan2(DualScalar y, DualScalar x);

struct DualVector {
  Vec3 real = Vec3::Zero();
  Vec3 dual = Vec3::Zero();

  DualVector() = default;
  DualVector(Vec3 r, Vec3 d) : real(std::move(r)), dual(std::move(d)) {}

  static DualVector zero() { return {}; }

  DualVector operator-() const { return {-real, -dual}; }
  DualVector& operator+=(const DualVector& o) {
    real += o.real;
    dual += o.dual;
    return *this;
  }
};

inline DualVector operator+(const DualVector& a, const DualVector& b) {
  return {a.real + b.real, a.dual + b.dual};
}
inline DualVector operator-(const DualVector& a, const DualVector& b) {
  return {a.real - b.real, a.dual - b.dual};
}
inline DualVector operator*(DualScalar s, const DualVector& v) {
  return {s.real * v.real, s.real * v.dual + s.dual * v.real};
}
inline DualVector operator*(const DualVector& v, DualScalar s) { return s * v; }

DualScalar dual_dot(const DualVector& a, const DualVector& b);
DualVector dual_cross(const DualVector& a, const DualVector& b);

/// ‖ã‖ = ‖a‖ + ε⟨a, a*⟩/‖a‖; PureDualVector when ‖a‖ vanishes.
DualScalar dual_norm(const DualVector& a);
DualVector dual_normalize(const DualVector& a);

/// Dual angle between two dual unit vectors (oriented lines).
/// θ ∈ [0, π]; θ* is the distance between the lines, signed along a × b
/// for skew lines and non-negative for parallel ones.
DualAngle dual_angle(const DualVector& a, const DualVector& b);

/// Componentwise norms of a dual vector's parts, used for residual reporting.
struct PartNorms {
  double real = 0.0;
  double dual = 0.0;
};
inline PartNorms part_norms(const DualVector& v) { return {v.real.norm(), v.dual.norm()}; }

bool is_dual_unit(const DualVector& v, double tol);

}  // namespace mannheim
