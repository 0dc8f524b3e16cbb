#pragma once

// E. Study mapping between oriented lines of 3-space and dual unit vectors.

#include <utility>

#include "mannheim/dual.hpp"

namespace mannheim {

/// Oriented line through `point` with unit `direction`.
struct Line {
  Vec3 point = Vec3::Zero();
  Vec3 direction = Vec3::UnitX();

  /// Normalizes the direction; throws DomainError for a zero direction.
  static Line through(const Vec3& point, const Vec3& direction);
};

/// Tolerance on the Plücker constraints accepted by dual_to_line.
inline constexpr double kPlueckerTolerance = 1e-9;

/// (direction, point × direction). The moment does not depend on which point is used.
DualVector line_to_dual(const Line& l);

/// Inverse mapping; the returned point is the foot a × a* nearest the origin.
/// Throws NotALine when ⟨a,a⟩ = 1, ⟨a,a*⟩ = 0 fail beyond kPlueckerTolerance.
Line dual_to_line(const DualVector& v);

struct CommonPerpendicular {
  double distance = 0.0;
  /// Distance measured along d1 × d2; equals `distance` for parallel lines.
  double signed_distance = 0.0;
  Vec3 foot1 = Vec3::Zero();
  Vec3 foot2 = Vec3::Zero();
};

/// Closed-form shortest distance between two lines with the pair of feet.
/// Parallel lines get the point-to-line distance and one valid foot pair.
CommonPerpendicular common_perpendicular(const Line& l1, const Line& l2);

}  // namespace mannheim
