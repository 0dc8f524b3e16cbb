#include "mannheim/line.hpp"

#include <cmath>
#include <sstream>

namespace mannheim {

Line Line::through(const Vec3& point, const Vec3& direction) {
  const double n = direction.norm();
  if (!(n > 0.0)) throw DomainError("Line::through: zero direction");
  return {point, direction / n};
}

DualVector line_to_dual(const Line& l) { return {l.direction, l.point.cross(l.direction)}; }

Line dual_to_line(const DualVector& v) {
  const double unit = std::abs(v.real.squaredNorm() - 1.0);
  const double ortho = std::abs(v.real.dot(v.dual));
  if (unit > kPlueckerTolerance || ortho > kPlueckerTolerance) {
    std::ostringstream msg;
    msg << "dual_to_line: Pluecker constraints violated (|<a,a>-1| = " << unit
        << ", |<a,a*>| = " << ortho << ")";
    throw NotALine(msg.str());
  }
  return {v.real.cross(v.dual), v.real};
}

CommonPerpendicular common_perpendicular(const Line& l1, const Line& l2) {
  const Vec3& d1 = l1.direction;
  const Vec3& d2 = l2.direction;
  const Vec3 w = l2.point - l1.point;
  const Vec3 n = d1.cross(d2);
  const double n2 = n.squaredNorm();

  CommonPerpendicular out;
  if (n2 < 1e-18) {
    // Parallel: project l2's point onto l1.
    out.foot2 = l2.point;
    out.foot1 = l1.point + w.dot(d1) * d1;
    out.distance = (out.foot2 - out.foot1).norm();
    out.signed_distance = out.distance;
    return out;
  }
  // Minimize |l1.point + a d1 - l2.point - b d2|.
  const double b11 = d1.dot(d1), b12 = d1.dot(d2), b22 = d2.dot(d2);
  const double r1 = d1.dot(w), r2 = d2.dot(w);
  const double det = b11 * b22 - b12 * b12;
  const double a = (r1 * b22 - r2 * b12) / det;
  const double b = (r1 * b12 - r2 * b11) / det;
  out.foot1 = l1.point + a * d1;
  out.foot2 = l2.point + b * d2;
  out.signed_distance = w.dot(n) / std::sqrt(n2);
  out.distance = std::abs(out.signed_distance);
  return out;
}

}  // namespace mannheim
