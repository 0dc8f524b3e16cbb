#pragma once

// Built-in analytic surfaces with exact first and second derivatives.

#include <optional>
#include <string>
#include <string_view>

#include "mannheim/ruled_surface.hpp"

namespace mannheim::catalog {

enum class Kind { hyperbolic_paraboloid, cone, small_circle, helicoid };

inline constexpr Interval kDefaultRange{-1.0, 1.0};

struct Builtin {
  Kind kind = Kind::hyperbolic_paraboloid;
  /// cone: half-angle α; small_circle: latitude β of the director circle;
  /// helicoid: pitch per radian. Unused for the hyperbolic paraboloid.
  double parameter = 0.0;

  std::string name() const;
};

std::optional<Kind> parse_kind(std::string_view name);
const char* kind_name(Kind kind);
double default_parameter(Kind kind);
/// Name of the kind-specific parameter in configs ("alpha", "beta", "pitch"), or empty.
const char* parameter_name(Kind kind);

SurfaceSpec make(const Builtin& b, Interval range = kDefaultRange,
                 std::size_t sample_count = kDefaultSampleCount);

/// x(u, v) = (u/2, u/2, 0) + v (1/2, −1/2, u), director normalized.
SurfaceSpec hyperbolic_paraboloid(Interval range = kDefaultRange,
                                  std::size_t sample_count = kDefaultSampleCount);
/// Right circular cone with apex at the origin and half-angle α about z.
SurfaceSpec cone(double alpha, Interval range = kDefaultRange,
                 std::size_t sample_count = kDefaultSampleCount);
/// Hyperboloid of one sheet: base is the unit waist circle, the director runs
/// along the small circle of latitude β, tilted from the circle's tangent.
SurfaceSpec small_circle(double beta, Interval range = kDefaultRange,
                         std::size_t sample_count = kDefaultSampleCount);
/// Right helicoid about z with the given pitch.
SurfaceSpec helicoid(double pitch, Interval range = kDefaultRange,
                     std::size_t sample_count = kDefaultSampleCount);

}  // namespace mannheim::catalog
