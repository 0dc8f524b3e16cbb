#pragma once

// CSV and OBJ emission, sampled-curve CSV ingestion.

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mannheim/ruled_surface.hpp"

namespace mannheim::io {

/// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest-round-trip-safe text: 17 significant digits, '.' decimal point.
std::string format_double(double x);

const std::vector<std::string>& analysis_columns();

/// One row per sample; LF line endings.
void write_analysis_csv(std::ostream& out, const SurfaceAnalysis& analysis);

/// Header `u,ex,ey,ez,px,py,pz`. The analysis columns `e_x,e_y,e_z` and
/// `c_x,c_y,c_z` are accepted in their place so analyze output can be re-read
/// (the striction curve is a valid base curve). Extra columns are ignored.
SurfaceSpec read_sampled_surface(std::istream& in, const std::string& name);
SurfaceSpec read_sampled_surface_file(const std::string& path);

struct Mesh {
  std::vector<Vec3> vertices;
  /// Zero-based vertex indices, counter-clockwise seen from the normal
  /// ∂x/∂u × ∂x/∂v.
  std::vector<std::array<std::size_t, 4>> faces;
};

/// Grid over rulings point[i] + v director[i], v uniform in [v_lo, v_hi].
/// Vertex (i, j) has index i * v_count + j.
Mesh ruled_mesh(const std::vector<Vec3>& point, const std::vector<Vec3>& director, double v_lo,
                double v_hi, std::size_t v_count);

/// `v x y z` lines then `f i j k l` lines with 1-based indices.
void write_obj(std::ostream& out, const Mesh& mesh, const std::string& comment = {});

}  // namespace mannheim::io
