// mat2.hpp - complex 2x2 matrices, the elementary SL(2,c) group elements,
// and the Hermitian transformation X' = G X G^dagger.
#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace twobytwo {

using cplx = std::complex<double>;

namespace tol {
// Absolute tolerance for single algebraic identities.
inline constexpr double algebraic = 1e-12;
// Tolerance for quantities assembled from several group elements; a product
// of ~6 matrices loses about two digits.
inline constexpr double composed = 1e-10;
// Acceptance band on |det - 1| for group elements.
inline constexpr double unimodular = 1e-9;
// Band around |trace| = 2 treated as parabolic. Mirrors the oscillator
// transition-mode band so the two classifications correspond.
inline constexpr double parabolic_band = 1e-9;
}  // namespace tol

inline void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

/// Complex 2x2 matrix, row-major [[a, b], [c, d]].
///
/// This is the universal carrier of the library: group elements, Wigner
/// matrices, propagators, momentum matrices and coherency matrices are all
/// instances of it.
struct Mat2 {
  cplx a{0.0}, b{0.0}, c{0.0}, d{0.0};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diag(cplx p, cplx q) { return {p, 0.0, 0.0, q}; }

  cplx det() const { return a * d - b * c; }
  cplx trace() const { return a + d; }

  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 conj() const {
    return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)};
  }
  Mat2 dagger() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }

  Mat2 inverse() const {
    const cplx dt = det();
    if (std::abs(dt) < 1e-300) {
      throw std::invalid_argument("Mat2::inverse: matrix is singular");
    }
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)),
                    std::max(std::abs(c), std::abs(d)));
  }

  bool is_finite() const {
    const auto ok = [](cplx z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    };
    return ok(a) && ok(b) && ok(c) && ok(d);
  }

  bool is_hermitian(double tolerance = tol::algebraic) const {
    return std::abs(a - std::conj(a)) <= 2 * tolerance &&
           std::abs(d - std::conj(d)) <= 2 * tolerance &&
           std::abs(b - std::conj(c)) <= tolerance;
  }

  bool is_real(double tolerance = tol::algebraic) const {
    return std::abs(a.imag()) <= tolerance && std::abs(b.imag()) <= tolerance &&
           std::abs(c.imag()) <= tolerance && std::abs(d.imag()) <= tolerance;
  }

  bool is_unimodular(double tolerance = tol::unimodular) const {
    return std::abs(det() - 1.0) <= tolerance;
  }

  /// Divides by the principal square root of the determinant. Use after long
  /// products when the determinant has drifted; never applied implicitly.
  Mat2 renormalized() const {
    const cplx dt = det();
    if (std::abs(dt) < 1e-30) {
      throw std::invalid_argument("Mat2::renormalized: determinant is ~0");
    }
    const cplx s = std::sqrt(dt);
    return {a / s, b / s, c / s, d / s};
  }
};

inline Mat2 operator+(const Mat2& l, const Mat2& r) {
  return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
}

inline Mat2 operator-(const Mat2& l, const Mat2& r) {
  return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
}

inline Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

inline Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

inline Mat2 operator*(cplx s, const Mat2& m) {
  return {s * m.a, s * m.b, s * m.c, s * m.d};
}

inline Mat2 operator*(const Mat2& m, cplx s) { return s * m; }

inline double max_abs_diff(const Mat2& l, const Mat2& r) {
  return (l - r).max_abs();
}

inline Mat2 commutator(const Mat2& l, const Mat2& r) {
  return l * r - r * l;
}

/// Column spinor (two complex components).
struct Vec2 {
  cplx u{0.0}, v{0.0};
};

inline Vec2 operator*(const Mat2& m, const Vec2& s) {
  return {m.a * s.u + m.b * s.v, m.c * s.u + m.d * s.v};
}

inline double max_abs_diff(const Vec2& l, const Vec2& r) {
  return std::max(std::abs(l.u - r.u), std::abs(l.v - r.v));
}

// ----------------------------------------------------------------------
// Elementary group elements.  Angles enter with half-angle arguments, so a
// full turn of rotation_z gives -identity (spinor double cover).

/// Rotation about the y axis: [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
inline Mat2 rotation_y(double theta) {
  require_finite(theta, "theta");
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  return {ch, -sh, sh, ch};
}

/// Boost along z: diag(exp(eta/2), exp(-eta/2)).
inline Mat2 boost_z(double eta) {
  require_finite(eta, "eta");
  const double e = std::exp(0.5 * eta);
  return Mat2::diag(e, 1.0 / e);
}

/// Boost along x (squeeze): [[cosh(l/2), sinh(l/2)], [sinh(l/2), cosh(l/2)]].
inline Mat2 squeeze_x(double lambda) {
  require_finite(lambda, "lambda");
  const double ch = std::cosh(0.5 * lambda);
  const double sh = std::sinh(0.5 * lambda);
  return {ch, sh, sh, ch};
}

/// Rotation about the z axis: diag(exp(-i phi/2), exp(i phi/2)).
inline Mat2 rotation_z(double phi) {
  require_finite(phi, "phi");
  return Mat2::diag(std::polar(1.0, -0.5 * phi), std::polar(1.0, 0.5 * phi));
}

namespace detail {
// G X G^dagger without precondition checks, for internal reuse.
inline Mat2 hermitian_sandwich(const Mat2& g, const Mat2& x) {
  const Mat2 y = g * x * g.dagger();
  // Exact arithmetic gives a Hermitian result; fold away rounding asymmetry.
  const cplx off = 0.5 * (y.b + std::conj(y.c));
  return {y.a.real(), off, std::conj(off), y.d.real()};
}
}  // namespace detail

/// Hermitian transformation X' = G X G^dagger.
///
/// G must be unimodular and X Hermitian; the result is Hermitian with the
/// same determinant.
inline Mat2 hermitian_transform(const Mat2& g, const Mat2& x) {
  if (!g.is_unimodular()) {
    std::ostringstream os;
    os << "hermitian_transform: determinant deviates from 1 by "
       << std::abs(g.det() - 1.0) << "; renormalize the group element first";
    throw std::invalid_argument(os.str());
  }
  if (!x.is_hermitian(tol::algebraic * std::max(1.0, x.max_abs()))) {
    throw std::invalid_argument("hermitian_transform: operand is not Hermitian");
  }
  return detail::hermitian_sandwich(g, x);
}

}  // namespace twobytwo
