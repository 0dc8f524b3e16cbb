#include "mannheim/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mannheim::numerics {

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count < 2) throw std::invalid_argument("uniform_grid: need at least two nodes");
  std::vector<double> u(count);
  const double h = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) u[i] = lo + h * static_cast<double>(i);
  u.back() = hi;
  return u;
}

template <class T>
std::vector<T> first_derivative(std::span<const T> f, double h) {
  const std::size_t n = f.size();
  if (n < 3) throw std::invalid_argument("first_derivative: need at least three nodes");
  std::vector<T> d(n);
  const double inv = 1.0 / (2.0 * h);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) * inv;
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv;
  return d;
}

template <class T>
std::vector<T> second_derivative(std::span<const T> f, double h) {
  const std::size_t n = f.size();
  if (n < 4) throw std::invalid_argument("second_derivative: need at least four nodes");
  std::vector<T> d(n);
  const double inv = 1.0 / (h * h);
  d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * inv;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * inv;
  d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * inv;
  return d;
}

template <class T>
std::vector<T> first_derivative_5pt(std::span<const T> f, double h) {
  std::vector<T> d = first_derivative(f, h);
  const std::size_t n = f.size();
  const double inv = 1.0 / (12.0 * h);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * inv;
  }
  return d;
}

template std::vector<double> first_derivative(std::span<const double>, double);
template std::vector<Vec3> first_derivative(std::span<const Vec3>, double);
template std::vector<double> second_derivative(std::span<const double>, double);
template std::vector<Vec3> second_derivative(std::span<const Vec3>, double);
template std::vector<double> first_derivative_5pt(std::span<const double>, double);
template std::vector<Vec3> first_derivative_5pt(std::span<const Vec3>, double);

std::vector<double> cumulative_simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("cumulative_simpson: node count must be odd and >= 3");
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i + 2 < n; i += 2) {
    const double f0 = f[i], f1 = f[i + 1], f2 = f[i + 2];
    out[i + 1] = out[i] + h * (5.0 * f0 + 8.0 * f1 - f2) / 12.0;
    out[i + 2] = out[i] + h * (f0 + 4.0 * f1 + f2) / 3.0;
  }
  return out;
}

std::size_t bracket(std::span<const double> x, double at) {
  const auto it = std::upper_bound(x.begin(), x.end(), at);
  std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
  return std::min(i, x.size() - 2);
}

double hermite(std::span<const double> x, std::span<const double> y,
               std::span<const double> dy, double at) {
  const std::size_t i = bracket(x, at);
  const double h = x[i + 1] - x[i];
  const double t = (at - x[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y[i] + h10 * h * dy[i] + h01 * y[i + 1] + h11 * h * dy[i + 1];
}

}  // namespace mannheim::numerics
