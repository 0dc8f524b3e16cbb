#include "mannheim/dual.hpp"

#include <cmath>

namespace mannheim {

namespace {

// Below this |sin θ| the line pair is treated as parallel.
constexpr double kParallelSine = 1e-9;

}  // namespace

DualScalar dual_div(DualScalar a, DualScalar b) {
  if (std::abs(b.real) < kPureDualThreshold) throw PureDualDivisor();
  const double q = a.real / b.real;
  return {q, (a.dual - q * b.dual) / b.real};
}

DualScalar dual_sin(DualScalar x) {
  return lift([](double v) { return std::sin(v); }, [](double v) { return std::cos(v); }, x);
}

DualScalar dual_cos(DualScalar x) {
  return lift([](double v) { return std::cos(v); }, [](double v) { return -std::sin(v); }, x);
}

DualScalar dual_tan(DualScalar x) {
  const double c = std::cos(x.real);
  if (std::abs(c) < kPureDualThreshold) throw DomainError("dual_tan: cos of real part vanishes");
  return {std::tan(x.real), x.dual / (c * c)};
}

DualScalar dual_sqrt(DualScalar x) {
  if (!(x.real > 0.0)) {
    throw DomainError("dual_sqrt: real part must be positive, got " + std::to_string(x.real));
  }
  return lift([](double v) { return std::sqrt(v); },
              [](double v) { return 0.5 / std::sqrt(v); }, x);
}

DualAngle dual_atan2(DualScalar y, DualScalar x) {
  const double r2 = x.real * x.real + y.real * y.real;
  if (r2 < kPureDualThreshold * kPureDualThreshold) throw PureDualDivisor();
  return {std::atan2(y.real, x.real), (x.real * y.dual - y.real * x.dual) / r2};
}

DualScalar dual_dot(const DualVector& a, const DualVector& b) {
  return {a.real.dot(b.real), a.real.dot(b.dual) + a.dual.dot(b.real)};
}

DualVector dual_cross(const DualVector& a, const DualVector& b) {
  return {a.real.cross(b.real), a.real.cross(b.dual) + a.dual.cross(b.real)};
}

DualScalar dual_norm(const DualVector& a) {
  const double n = a.real.norm();
  if (n < kPureDualThreshold) throw PureDualVector();
  return {n, a.real.dot(a.dual) / n};
}

DualVector dual_normalize(const DualVector& a) {
  const DualScalar n = dual_norm(a);
  // Componentwise dual division by n.
  const double inv = 1.0 / n.real;
  return {a.real * inv, (a.dual - a.real * (n.dual * inv)) * inv};
}

DualAngle dual_angle(const DualVector& a, const DualVector& b) {
  const DualScalar cosine = dual_dot(a, b);
  const DualVector cross = dual_cross(a, b);
  if (cross.real.norm() >= kParallelSine) {
    // sin θ̄ = ‖ã × b̃‖ keeps θ in [0, π].
    return dual_atan2(dual_norm(cross), cosine);
  }
  // Parallel or antiparallel: the dual cosine carries no distance information.
  const Vec3 foot_a = a.real.cross(a.dual);
  const Vec3 foot_b = b.real.cross(b.dual);
  const Vec3 d = foot_b - foot_a;
  const double distance = (d - d.dot(a.real) * a.real).norm();
  return {cosine.real > 0.0 ? 0.0 : M_PI, distance};
}

bool is_dual_unit(const DualVector& v, double tol) {
  const DualScalar n2 = dual_dot(v, v);
  return std::abs(n2.real - 1.0) <= tol && std::abs(n2.dual) <= tol;
}

}  // namespace mannheim
