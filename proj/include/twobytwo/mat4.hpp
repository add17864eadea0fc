// mat4.hpp - small fixed-size 4x4 matrices (real transforms, complex generators).
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace twobytwo {

template <typename T>
struct Mat4t {
  std::array<std::array<T, 4>, 4> m{};

  static Mat4t identity() {
    Mat4t r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = T(1);
    return r;
  }

  T& operator()(int i, int j) { return m[i][j]; }
  const T& operator()(int i, int j) const { return m[i][j]; }

  Mat4t transpose() const {
    Mat4t r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  double max_abs() const {
    double v = 0.0;
    for (const auto& row : m)
      for (const T& e : row) v = std::max(v, std::abs(e));
    return v;
  }

  friend Mat4t operator+(const Mat4t& l, const Mat4t& r) {
    Mat4t out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.m[i][j] = l.m[i][j] + r.m[i][j];
    return out;
  }

  friend Mat4t operator-(const Mat4t& l, const Mat4t& r) {
    Mat4t out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.m[i][j] = l.m[i][j] - r.m[i][j];
    return out;
  }

  friend Mat4t operator*(const Mat4t& l, const Mat4t& r) {
    Mat4t out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        T acc{};
        for (int k = 0; k < 4; ++k) acc += l.m[i][k] * r.m[k][j];
        out.m[i][j] = acc;
      }
    return out;
  }

  friend Mat4t operator*(T s, const Mat4t& r) {
    Mat4t out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.m[i][j] = s * r.m[i][j];
    return out;
  }
};

using Mat4 = Mat4t<double>;
using Mat4c = Mat4t<std::complex<double>>;

template <typename T>
inline double max_abs_diff(const Mat4t<T>& l, const Mat4t<T>& r) {
  return (l - r).max_abs();
}

template <typename T>
inline Mat4t<T> commutator(const Mat4t<T>& l, const Mat4t<T>& r) {
  return l * r - r * l;
}

inline std::array<double, 4> operator*(const Mat4& m,
                                       const std::array<double, 4>& v) {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += m.m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace twobytwo
