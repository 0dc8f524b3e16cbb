#include "mannheim/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace mannheim::io {

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("cannot format number");
  return std::string(buf, ptr);
}

const std::vector<std::string>& analysis_columns() {
  static const std::vector<std::string> columns{
      "u",     "s",     "s_star", "c_x",   "c_y",   "c_z",    "e_x",        "e_y",
      "e_z",   "t_x",   "t_y",    "t_z",   "g_x",   "g_y",    "g_z",        "Delta",
      "delta", "gamma", "gamma_dual", "R_real", "R_dual", "rho_real", "rho_dual"};
  return columns;
}

namespace {

void put_row(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out << ',';
    out << format_double(values[k]);
  }
  out << '\n';
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw FormatError("line " + std::to_string(line_no) + ": '" + text + "' is not a number");
  }
  return value;
}

std::optional<std::size_t> find_column(const std::map<std::string, std::size_t>& index,
                                       const std::string& primary, const std::string& alias) {
  if (auto it = index.find(primary); it != index.end()) return it->second;
  if (auto it = index.find(alias); it != index.end()) return it->second;
  return std::nullopt;
}

}  // namespace

void write_analysis_csv(std::ostream& out, const SurfaceAnalysis& analysis) {
  const auto& cols = analysis_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
  out << '\n';
  std::vector<double> row;
  row.reserve(cols.size());
  for (std::size_t i = 0; i < analysis.size(); ++i) {
    const FrameSample& f = analysis.samples[i];
    const DualInvariants& inv = analysis.invariants[i];
    row.assign({f.u, f.s, f.s_star, f.c.x(), f.c.y(), f.c.z(), f.e.x(), f.e.y(), f.e.z(), f.t.x(),
                f.t.y(), f.t.z(), f.g.x(), f.g.y(), f.g.z(), f.Delta, f.delta, f.gamma,
                f.gamma_dual, inv.R.real, inv.R.dual, inv.rho.theta, inv.rho.theta_star});
    put_row(out, row);
  }
}

SurfaceSpec read_sampled_surface(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  if (in.fail() && line.empty()) throw FormatError("empty sampled-curve file");

  const auto header = split(line);
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < header.size(); ++k) index.emplace(header[k], k);

  const std::array<std::pair<const char*, const char*>, 7> wanted{{{"u", "u"},
                                                                   {"ex", "e_x"},
                                                                   {"ey", "e_y"},
                                                                   {"ez", "e_z"},
                                                                   {"px", "c_x"},
                                                                   {"py", "c_y"},
                                                                   {"pz", "c_z"}}};
  std::array<std::size_t, 7> col{};
  for (std::size_t k = 0; k < wanted.size(); ++k) {
    const auto found = find_column(index, wanted[k].first, wanted[k].second);
    if (!found) {
      throw FormatError(std::string("missing column '") + wanted[k].first +
                        "' (header must contain u,ex,ey,ez,px,py,pz)");
    }
    col[k] = *found;
  }

  std::vector<double> u;
  std::vector<Vec3> e, p;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    double v[7];
    for (std::size_t k = 0; k < 7; ++k) v[k] = parse_number(fields[col[k]], line_no);
    u.push_back(v[0]);
    e.emplace_back(v[1], v[2], v[3]);
    p.emplace_back(v[4], v[5], v[6]);
  }
  return SurfaceSpec::sampled(name, std::move(u), std::move(e), std::move(p));
}

SurfaceSpec read_sampled_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open sampled-curve file '" + path + "'");
  return read_sampled_surface(in, path);
}

Mesh ruled_mesh(const std::vector<Vec3>& point, const std::vector<Vec3>& director, double v_lo,
                double v_hi, std::size_t v_count) {
  if (point.size() != director.size()) throw std::invalid_argument("mesh: size mismatch");
  if (point.size() < 2 || v_count < 2) {
    throw std::invalid_argument("mesh needs at least two rulings and v_count >= 2");
  }
  Mesh mesh;
  mesh.vertices.reserve(point.size() * v_count);
  for (std::size_t i = 0; i < point.size(); ++i) {
    for (std::size_t j = 0; j < v_count; ++j) {
      const double v = v_lo + (v_hi - v_lo) * static_cast<double>(j) / static_cast<double>(v_count - 1);
      mesh.vertices.push_back(point[i] + v * director[i]);
    }
  }
  // (i,j) → (i+1,j) → (i+1,j+1) → (i,j+1) circulates counter-clockwise
  // about ∂x/∂u × ∂x/∂v.
  mesh.faces.reserve((point.size() - 1) * (v_count - 1));
  for (std::size_t i = 0; i + 1 < point.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v_count; ++j) {
      const std::size_t a = i * v_count + j;
      const std::size_t b = (i + 1) * v_count + j;
      mesh.faces.push_back({a, b, b + 1, a + 1});
    }
  }
  return mesh;
}

void write_obj(std::ostream& out, const Mesh& mesh, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const Vec3& v : mesh.vertices) {
    out << "v " << format_double(v.x()) << ' ' << format_double(v.y()) << ' '
        << format_double(v.z()) << '\n';
  }
  for (const auto& f : mesh.faces) {
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
  }
}

}  // namespace mannheim::io
