// fourvector.hpp - Minkowski four-vectors in the (t, z, x, y) ordering, their
// Hermitian 2x2 images, and the exact 2x2 -> 4x4 homomorphism.
//
// Component ordering is (t, z, x, y) throughout: the z axis carries the
// momentum, so boosts along z and rotations about z act on adjacent blocks.
// Most libraries order (t, x, y, z); convert at the boundary.
#pragma once

#include <cmath>
#include <stdexcept>

#include "twobytwo/mat2.hpp"
#include "twobytwo/mat4.hpp"

namespace twobytwo {

struct FourVector {
  double t{0.0}, z{0.0}, x{0.0}, y{0.0};

  /// Hermitian image [[t+z, x-iy], [x+iy, t-z]]; det equals the interval.
  Mat2 to_hermitian() const {
    return {cplx{t + z, 0.0}, cplx{x, -y}, cplx{x, y}, cplx{t - z, 0.0}};
  }

  double interval() const { return t * t - z * z - x * x - y * y; }

  static FourVector from_hermitian(const Mat2& m,
                                   double tolerance = tol::algebraic) {
    if (!m.is_hermitian(tolerance * std::max(1.0, m.max_abs()))) {
      throw std::invalid_argument("FourVector::from_hermitian: not Hermitian");
    }
    return {0.5 * (m.a.real() + m.d.real()), 0.5 * (m.a.real() - m.d.real()),
            m.c.real(), m.c.imag()};
  }
};

inline double max_abs_diff(const FourVector& l, const FourVector& r) {
  return std::max(std::max(std::abs(l.t - r.t), std::abs(l.z - r.z)),
                  std::max(std::abs(l.x - r.x), std::abs(l.y - r.y)));
}

enum class MassSign { Positive, Zero, Negative };

struct FourMomentum {
  double p0{0.0}, pz{0.0}, px{0.0}, py{0.0};

  Mat2 to_hermitian() const {
    return FourVector{p0, pz, px, py}.to_hermitian();
  }

  /// det of the Hermitian image: p0^2 - pz^2 - px^2 - py^2.
  double mass_sq() const { return p0 * p0 - pz * pz - px * px - py * py; }

  MassSign classify(double tolerance = tol::algebraic) const {
    const double scale =
        std::max(1.0, p0 * p0 + pz * pz + px * px + py * py);
    const double m2 = mass_sq();
    if (std::abs(m2) <= tolerance * scale) return MassSign::Zero;
    return m2 > 0.0 ? MassSign::Positive : MassSign::Negative;
  }

  static FourMomentum from_hermitian(const Mat2& m,
                                     double tolerance = tol::algebraic) {
    const FourVector v = FourVector::from_hermitian(m, tolerance);
    return {v.t, v.z, v.x, v.y};
  }
};

/// Applies G through the Hermitian transformation and maps back.
inline FourVector transform(const Mat2& g, const FourVector& v) {
  return FourVector::from_hermitian(hermitian_transform(g, v.to_hermitian()),
                                    tol::composed);
}

inline FourMomentum transform(const Mat2& g, const FourMomentum& p) {
  const FourVector v = transform(g, FourVector{p.p0, p.pz, p.px, p.py});
  return {v.t, v.z, v.x, v.y};
}

/// The 4x4 Lorentz matrix corresponding to a unimodular G, acting on
/// (t, z, x, y) columns. Columns are obtained by conjugating the Hermitian
/// basis images, so arbitrary group elements are supported.
inline Mat4 to_four_by_four(const Mat2& g) {
  if (!g.is_unimodular()) {
    throw std::invalid_argument(
        "to_four_by_four: input is not unimodular; renormalize first");
  }
  Mat4 out;
  constexpr FourVector basis[4] = {
      {1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};
  for (int j = 0; j < 4; ++j) {
    const Mat2 image = detail::hermitian_sandwich(g, basis[j].to_hermitian());
    const FourVector column = FourVector::from_hermitian(image, tol::composed);
    out(0, j) = column.t;
    out(1, j) = column.z;
    out(2, j) = column.x;
    out(3, j) = column.y;
  }
  return out;
}

inline FourVector apply(const Mat4& lambda, const FourVector& v) {
  const std::array<double, 4> r = lambda * std::array<double, 4>{v.t, v.z, v.x, v.y};
  return {r[0], r[1], r[2], r[3]};
}

}  // namespace twobytwo
