// poincare.hpp - polarization layer: Jones parameters, the coherency matrix
// with its decoherence angle, Stokes parameters as a four-vector, the
// Poincare-sphere radius, and the mass interpolation the decoherence angle
// makes possible.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twobytwo/fourvector.hpp"
#include "twobytwo/mat2.hpp"

namespace twobytwo {

/// Parameters of a plane-wave pair: common amplitude a, relative phase
/// phi between the two components, overall attenuation mu (tracked for
/// display only, excluded from every invariant) and relative attenuation
/// eta (the squeeze parameter; component amplitudes are a e^{+-eta/2}).
/// The optical phase k z - w t drops out of every time average.
struct JonesVector {
  double amplitude{1.0};
  double phase_diff{0.0};
  double attenuation_mu{0.0};
  double relative_eta{0.0};

  JonesVector() = default;
  JonesVector(double amplitude_, double phase_diff_, double attenuation_mu_ = 0.0,
              double relative_eta_ = 0.0)
      : amplitude(amplitude_),
        phase_diff(phase_diff_),
        attenuation_mu(attenuation_mu_),
        relative_eta(relative_eta_) {
    require_finite(amplitude, "amplitude");
    require_finite(phase_diff, "phase_diff");
    require_finite(attenuation_mu, "attenuation_mu");
    require_finite(relative_eta, "relative_eta");
    if (amplitude <= 0.0) {
      throw std::invalid_argument("JonesVector: amplitude must be > 0");
    }
  }
};

/// Hermitian matrix of time-averaged field correlations. Stored as the two
/// real diagonal entries and the upper off-diagonal; the lower one is its
/// conjugate by construction.
struct CoherencyMatrix {
  double s11{1.0};
  double s22{1.0};
  cplx s12{0.0};

  CoherencyMatrix() = default;
  CoherencyMatrix(double s11_, double s22_, cplx s12_)
      : s11(s11_), s22(s22_), s12(s12_) {
    if (!(std::isfinite(s11) && std::isfinite(s22)) || s11 < 0.0 || s22 < 0.0) {
      throw std::invalid_argument(
          "CoherencyMatrix: diagonal entries must be finite and >= 0");
    }
    const double scale = std::max(1.0, std::max(s11, s22));
    if (det() < -tol::composed * scale * scale) {
      throw std::invalid_argument(
          "CoherencyMatrix: off-diagonal exceeds the diagonal bound");
    }
  }

  cplx s21() const { return std::conj(s12); }
  double det() const { return s11 * s22 - std::norm(s12); }

  Mat2 to_mat2() const { return {s11, s12, s21(), s22}; }

  static CoherencyMatrix from_mat2(const Mat2& m,
                                   double tolerance = tol::composed) {
    if (!m.is_hermitian(tolerance * std::max(1.0, m.max_abs()))) {
      throw std::invalid_argument("CoherencyMatrix::from_mat2: not Hermitian");
    }
    return {m.a.real(), m.d.real(), 0.5 * (m.b + std::conj(m.c))};
  }
};

/// Coherency matrix of a Jones pair with decoherence angle xi in [0, pi/2]:
/// diagonals a^2 e^{+-eta}, off-diagonal a^2 cos(xi) e^{-i phi}. Fully
/// coherent at xi = 0 (rank one), totally incoherent at xi = pi/2; the
/// determinant is a^4 sin^2(xi) regardless of eta and phi.
inline CoherencyMatrix coherency_from_jones(const JonesVector& j, double xi) {
  require_finite(xi, "xi");
  if (xi < 0.0 || xi > 0.5 * std::numbers::pi) {
    throw std::invalid_argument(
        "coherency_from_jones: xi must lie in [0, pi/2]");
  }
  const double a2 = j.amplitude * j.amplitude;
  return {a2 * std::exp(j.relative_eta), a2 * std::exp(-j.relative_eta),
          a2 * std::cos(xi) * std::polar(1.0, -j.phase_diff)};
}

/// C' = G C G^dagger for unimodular G; the determinant, and with it the
/// decoherence angle, is invariant.
inline CoherencyMatrix transform_coherency(const Mat2& g,
                                           const CoherencyMatrix& c) {
  return CoherencyMatrix::from_mat2(hermitian_transform(g, c.to_mat2()));
}

/// Recovers xi from the invariant determinant (det = a^4 sin^2 xi), given
/// the amplitude scale.
inline double decoherence_angle(const CoherencyMatrix& c, double amplitude) {
  require_finite(amplitude, "amplitude");
  if (amplitude <= 0.0) {
    throw std::invalid_argument("decoherence_angle: amplitude must be > 0");
  }
  const double a2 = amplitude * amplitude;
  const double sin_xi = std::sqrt(std::max(0.0, c.det())) / a2;
  return std::asin(std::clamp(sin_xi, 0.0, 1.0));
}

struct StokesVector {
  double s0{0.0}, s3{0.0}, s1{0.0}, s2{0.0};
};

/// Stokes parameters: s0 = (S11 + S22)/2, s3 = (S11 - S22)/2,
/// s1 = (S12 + S21)/2, s2 = (S12 - S21)/(2i).
inline StokesVector stokes(const CoherencyMatrix& c) {
  return {0.5 * (c.s11 + c.s22), 0.5 * (c.s11 - c.s22), c.s12.real(),
          c.s12.imag()};
}

inline CoherencyMatrix unstokes(const StokesVector& s) {
  return {s.s0 + s.s3, s.s0 - s.s3, cplx{s.s1, s.s2}};
}

/// Four-vector image of the Stokes parameters under the Hermitian-matrix
/// convention used here: (t, z, x, y) = (s0, s3, s1, -s2). The sign on s2
/// comes from reading the off-diagonal as x - i y while s2 is defined with
/// the opposite orientation.
inline FourVector stokes_to_fourvector(const StokesVector& s) {
  return {s.s0, s.s3, s.s1, -s.s2};
}

inline StokesVector fourvector_to_stokes(const FourVector& v) {
  return {v.t, v.z, v.x, -v.y};
}

/// Radius of the polarization circle, sqrt(s1^2 + s2^2) = a^2 cos(xi) in the
/// symmetric case; maximal (= s0) at xi = 0 and zero at xi = pi/2.
inline double poincare_radius(const CoherencyMatrix& c) {
  const StokesVector s = stokes(c);
  return std::hypot(s.s1, s.s2);
}

/// Four-momentum interpolating between the light cone and the rest frame at
/// fixed energy: (p0, p0 cos(xi), 0, 0) with mass^2 = (p0 sin(xi))^2, so
/// energy^2 = mass^2 + momentum^2 along the whole sweep. xi runs over
/// [0, pi]; only mass^2 is exposed, so the sign of the mass never enters.
inline FourMomentum mass_interpolate(double p0, double xi) {
  require_finite(p0, "p0");
  require_finite(xi, "xi");
  if (p0 <= 0.0) throw std::invalid_argument("mass_interpolate: p0 must be > 0");
  if (xi < 0.0 || xi > std::numbers::pi) {
    throw std::invalid_argument("mass_interpolate: xi must lie in [0, pi]");
  }
  return {p0, p0 * std::cos(xi), 0.0, 0.0};
}

struct CoherencyDiagonalization {
  Mat2 rotation;            // real rotation
  double phase;             // z-rotation angle removing the off-diagonal phase
  CoherencyMatrix diagonal; // eigenvalues on the diagonal, larger first
};

/// Diagonalizes a coherency matrix as U C U^dagger with U = R Z(phase); the
/// phase factor is zero whenever C is real, leaving a plain rotation. For
/// the symmetric matrix the eigenvalues are a^2 (1 +- cos(xi)).
inline CoherencyDiagonalization diagonalize_coherency(const CoherencyMatrix& c) {
  const double scale = std::max(1.0, std::max(c.s11, c.s22));
  double phase = 0.0;
  double off = std::abs(c.s12);
  if (std::abs(c.s12.imag()) <= tol::algebraic * scale) {
    off = c.s12.real();  // already real; keep its sign, no phase factor
  } else {
    // Z(phase) C Z(phase)^dagger multiplies s12 by e^{-i phase}; choosing
    // phase = arg(s12) makes the off-diagonal real and nonnegative.
    phase = std::arg(c.s12);
  }
  double theta = 0.0;
  if (std::abs(off) > tol::algebraic * scale) {
    theta = std::atan2(-2.0 * off, c.s11 - c.s22);
  }
  Mat2 rotation = rotation_y(theta);
  Mat2 u = (phase == 0.0) ? rotation : rotation * rotation_z(phase);
  Mat2 d = detail::hermitian_sandwich(u, c.to_mat2());
  if (d.a.real() < d.d.real()) {
    theta += std::numbers::pi;
    rotation = rotation_y(theta);
    u = (phase == 0.0) ? rotation : rotation * rotation_z(phase);
    d = detail::hermitian_sandwich(u, c.to_mat2());
  }
  return {rotation, phase,
          CoherencyMatrix{d.a.real(), d.d.real(), 0.5 * (d.b + std::conj(d.c))}};
}

}  // namespace twobytwo
