#include "mannheim/catalog.hpp"

#include <cmath>
#include <sstream>

namespace mannheim::catalog {

std::string Builtin::name() const {
  std::ostringstream out;
  out << kind_name(kind);
  if (kind != Kind::hyperbolic_paraboloid) {
    out.precision(6);
    out << "(" << parameter_name(kind) << "=" << parameter << ")";
  }
  return out.str();
}

std::optional<Kind> parse_kind(std::string_view name) {
  if (name == "hyperbolic_paraboloid") return Kind::hyperbolic_paraboloid;
  if (name == "cone") return Kind::cone;
  if (name == "small_circle") return Kind::small_circle;
  if (name == "helicoid") return Kind::helicoid;
  return std::nullopt;
}

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::hyperbolic_paraboloid: return "hyperbolic_paraboloid";
    case Kind::cone: return "cone";
    case Kind::small_circle: return "small_circle";
    case Kind::helicoid: return "helicoid";
  }
  return "?";
}

double default_parameter(Kind kind) {
  switch (kind) {
    case Kind::hyperbolic_paraboloid: return 0.0;
    case Kind::cone: return M_PI / 4.0;
    case Kind::small_circle: return M_PI / 6.0;
    case Kind::helicoid: return 1.0;
  }
  return 0.0;
}

const char* parameter_name(Kind kind) {
  switch (kind) {
    case Kind::hyperbolic_paraboloid: return "";
    case Kind::cone: return "alpha";
    case Kind::small_circle: return "beta";
    case Kind::helicoid: return "pitch";
  }
  return "";
}

SurfaceSpec make(const Builtin& b, Interval range, std::size_t sample_count) {
  switch (b.kind) {
    case Kind::hyperbolic_paraboloid: return hyperbolic_paraboloid(range, sample_count);
    case Kind::cone: return cone(b.parameter, range, sample_count);
    case Kind::small_circle: return small_circle(b.parameter, range, sample_count);
    case Kind::helicoid: return helicoid(b.parameter, range, sample_count);
  }
  throw InvalidSurface("unknown builtin surface");
}

SurfaceSpec hyperbolic_paraboloid(Interval range, std::size_t sample_count) {
  // a(u) = (1/2, -1/2, u), r = |a| = sqrt(1/2 + u^2), e = a / r.
  CurveField director;
  director.value = [](double u) {
    const double r = std::sqrt(0.5 + u * u);
    return Vec3(0.5 / r, -0.5 / r, u / r);
  };
  director.d1 = [](double u) {
    const double r = std::sqrt(0.5 + u * u);
    const double r3 = r * r * r;
    return Vec3(-0.5 * u / r3, 0.5 * u / r3, 0.5 / r3);
  };
  director.d2 = [](double u) {
    const double r2 = 0.5 + u * u;
    const double r = std::sqrt(r2);
    const double r3 = r2 * r, r5 = r3 * r2;
    const Vec3 b(-0.5 * u, 0.5 * u, 0.5);
    const Vec3 db(-0.5, 0.5, 0.0);
    return Vec3(db / r3 - 3.0 * u * b / r5);
  };
  CurveField base;
  base.value = [](double u) { return Vec3(0.5 * u, 0.5 * u, 0.0); };
  base.d1 = [](double) { return Vec3(0.5, 0.5, 0.0); };
  base.d2 = [](double) { return Vec3(0.0, 0.0, 0.0); };
  return SurfaceSpec::analytic("hyperbolic_paraboloid", std::move(director), std::move(base), range,
                               sample_count);
}

SurfaceSpec cone(double alpha, Interval range, std::size_t sample_count) {
  const double sa = std::sin(alpha), ca = std::cos(alpha);
  CurveField director;
  director.value = [=](double u) { return Vec3(sa * std::cos(u), sa * std::sin(u), ca); };
  director.d1 = [=](double u) { return Vec3(-sa * std::sin(u), sa * std::cos(u), 0.0); };
  director.d2 = [=](double u) { return Vec3(-sa * std::cos(u), -sa * std::sin(u), 0.0); };
  CurveField base;
  base.value = [](double) { return Vec3(0.0, 0.0, 0.0); };
  base.d1 = base.value;
  base.d2 = base.value;
  return SurfaceSpec::analytic(Builtin{Kind::cone, alpha}.name(), std::move(director),
                               std::move(base), range, sample_count);
}

SurfaceSpec small_circle(double beta, Interval range, std::size_t sample_count) {
  const double sb = std::sin(beta), cb = std::cos(beta);
  CurveField director;
  director.value = [=](double u) { return Vec3(-cb * std::sin(u), cb * std::cos(u), sb); };
  director.d1 = [=](double u) { return Vec3(-cb * std::cos(u), -cb * std::sin(u), 0.0); };
  director.d2 = [=](double u) { return Vec3(cb * std::sin(u), -cb * std::cos(u), 0.0); };
  CurveField base;
  base.value = [](double u) { return Vec3(std::cos(u), std::sin(u), 0.0); };
  base.d1 = [](double u) { return Vec3(-std::sin(u), std::cos(u), 0.0); };
  base.d2 = [](double u) { return Vec3(-std::cos(u), -std::sin(u), 0.0); };
  return SurfaceSpec::analytic(Builtin{Kind::small_circle, beta}.name(), std::move(director),
                               std::move(base), range, sample_count);
}

SurfaceSpec helicoid(double pitch, Interval range, std::size_t sample_count) {
  CurveField director;
  director.value = [](double u) { return Vec3(std::cos(u), std::sin(u), 0.0); };
  director.d1 = [](double u) { return Vec3(-std::sin(u), std::cos(u), 0.0); };
  director.d2 = [](double u) { return Vec3(-std::cos(u), -std::sin(u), 0.0); };
  CurveField base;
  base.value = [=](double u) { return Vec3(0.0, 0.0, pitch * u); };
  base.d1 = [=](double) { return Vec3(0.0, 0.0, pitch); };
  base.d2 = [](double) { return Vec3(0.0, 0.0, 0.0); };
  return SurfaceSpec::analytic(Builtin{Kind::helicoid, pitch}.name(), std::move(director),
                               std::move(base), range, sample_count);
}

}  // namespace mannheim::catalog
