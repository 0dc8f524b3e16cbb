#pragma once

#include <stdexcept>
#include <string>

namespace mannheim {

/// Base of every geometry error raised by the kernel.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by a dual number whose real part vanishes (0 + εa* has no inverse).
class PureDualDivisor : public GeometryError {
 public:
  PureDualDivisor() : GeometryError("division by a pure dual number (real part is zero)") {}
};

/// Dual vector with a vanishing real part; its norm is not defined.
class PureDualVector : public GeometryError {
 public:
  PureDualVector() : GeometryError("dual vector has a zero real part; norm is singular") {}
};

class DomainError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Dual vector that does not satisfy the Plücker constraints of an oriented line.
class NotALine : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The real indicatrix of the director stalls (cylindrical patch or constant director).
class DegenerateIndicatrix : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateOffset : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class OutOfRange : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class InvalidSurface : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Which guard of the offset invariant formulas tripped.
enum class Guard {
  conical_curvature,  // |γ| too small: formulas divide by γ
  offset_angle,       // |sin θ| too small: formulas use cot θ or tan θ
  angle_range,        // θ outside the trimmed (0, π) window
};

inline const char* guard_name(Guard g) {
  switch (g) {
    case Guard::conical_curvature: return "conical_curvature";
    case Guard::offset_angle: return "offset_angle";
    case Guard::angle_range: return "angle_range";
  }
  return "unknown";
}

/// An offset invariant formula is undefined at this sample.
class SingularFormula : public GeometryError {
 public:
  explicit SingularFormula(Guard g)
      : GeometryError(std::string("formula undefined: guard '") + guard_name(g) + "' failed"),
        guard_(g) {}
  Guard guard() const { return guard_; }

 private:
  Guard guard_;
};

}  // namespace mannheim
