// support.hpp - test-only oracles: fixed-step RK4 for 2x2 linear systems,
// finite differences, a least-squares slope fit, and closed-form symmetric
// eigenvalues. Kept independent of the library's solution paths.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace testsupport {

using Mat2d = std::array<std::array<double, 2>, 2>;

inline Mat2d matmul(const Mat2d& a, const Mat2d& b) {
  Mat2d r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

inline Mat2d axpy(const Mat2d& a, const Mat2d& b, double s) {
  Mat2d r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + s * b[i][j];
  return r;
}

/// Fundamental matrix of dY/dt = A Y, Y(0) = I, by classical RK4 with a
/// fixed step (adjusted so an integer number of steps lands exactly on t).
inline Mat2d rk4_fundamental(const Mat2d& a, double t, double step) {
  Mat2d y{{{1.0, 0.0}, {0.0, 1.0}}};
  if (t == 0.0) return y;
  const long n = std::max(1L, std::lround(std::ceil(std::abs(t) / step)));
  const double h = t / static_cast<double>(n);
  for (long i = 0; i < n; ++i) {
    const Mat2d k1 = matmul(a, y);
    const Mat2d k2 = matmul(a, axpy(y, k1, 0.5 * h));
    const Mat2d k3 = matmul(a, axpy(y, k2, 0.5 * h));
    const Mat2d k4 = matmul(a, axpy(y, k3, h));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        y[r][c] += h / 6.0 * (k1[r][c] + 2.0 * k2[r][c] + 2.0 * k3[r][c] + k4[r][c]);
  }
  return y;
}

/// First-order system matrix of the oscillator in the undamped-envelope
/// frame: [[0, mu - omega], [mu + omega, 0]].
inline Mat2d oscillator_system_matrix(double omega, double mu) {
  return {{{0.0, mu - omega}, {mu + omega, 0.0}}};
}

/// Companion matrix of y'' + 2 mu y' + omega^2 y = 0 acting on (y, y').
inline Mat2d displacement_system_matrix(double omega, double mu) {
  return {{{0.0, 1.0}, {-omega * omega, -2.0 * mu}}};
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

/// Eigenvalues of a Hermitian 2x2 [[p, w], [conj(w), q]], larger first.
inline std::array<double, 2> hermitian_eigenvalues(double p, double q,
                                                   double abs_w) {
  const double mean = 0.5 * (p + q);
  const double r = std::hypot(0.5 * (p - q), abs_w);
  return {mean + r, mean - r};
}

}  // namespace testsupport
