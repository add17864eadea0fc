// decomp.hpp - trace classes of Sp(2) matrices, the Bargmann and Wigner
// decompositions, nth-power closed forms, and the conjugate quadruple
// D, D-dot, D-dagger, D-dot-dagger.
#pragma once

#include <cmath>
#include <stdexcept>

#include "twobytwo/mat2.hpp"

namespace twobytwo {

enum class TraceClass { Elliptic, Parabolic, Hyperbolic };

namespace detail {
inline void require_sp2(const Mat2& m, const char* who) {
  const double scale = std::max(1.0, m.max_abs());
  if (!m.is_real(tol::algebraic * scale)) {
    throw std::invalid_argument(std::string(who) + ": matrix must be real");
  }
  if (!m.is_unimodular()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be unimodular");
  }
}
}  // namespace detail

/// Classifies a real unimodular matrix by |trace| against 2, with a band of
/// width tol::parabolic_band for the parabolic case. Negative-trace matrices
/// classify through |trace| (they are -1 times a positive-trace element).
inline TraceClass classify(const Mat2& m, double band = tol::parabolic_band) {
  detail::require_sp2(m, "classify");
  const double t = std::abs(m.trace().real());
  if (std::abs(t - 2.0) <= band) return TraceClass::Parabolic;
  return t < 2.0 ? TraceClass::Elliptic : TraceClass::Hyperbolic;
}

/// Rotation angles and squeeze parameter of the three-factor form
/// R(alpha1) Squeeze(chi) R(alpha2). The squeeze factor carries the full
/// angle: [[cosh chi, sinh chi], [sinh chi, cosh chi]].
struct BargmannParams {
  double alpha1{0.0};
  double alpha2{0.0};
  double chi{0.0};

  double alpha() const { return 0.5 * (alpha1 + alpha2); }
  double delta() const { return 0.5 * (alpha1 - alpha2); }
};

/// Sign convention for sinh(chi). The boost-loop variant of the same family
/// flips it; the two differ only in the sign of chi.
enum class SqueezeSign { Positive, Negative };

/// The equidiagonal core in closed form:
/// [[cosh(chi) cos(alpha), sinh(chi) - cosh(chi) sin(alpha)],
///  [sinh(chi) + cosh(chi) sin(alpha), cosh(chi) cos(alpha)]].
inline Mat2 equidiagonal_core(double alpha, double chi,
                              SqueezeSign sign = SqueezeSign::Positive) {
  require_finite(alpha, "alpha");
  require_finite(chi, "chi");
  const double s = (sign == SqueezeSign::Positive) ? std::sinh(chi) : -std::sinh(chi);
  const double c = std::cosh(chi);
  const double diag = c * std::cos(alpha);
  const double off = c * std::sin(alpha);
  return {diag, s - off, s + off, diag};
}

inline Mat2 bargmann_compose(const BargmannParams& p,
                             SqueezeSign sign = SqueezeSign::Positive) {
  const double chi = (sign == SqueezeSign::Positive) ? p.chi : -p.chi;
  return rotation_y(p.alpha1) * squeeze_x(2.0 * chi) * rotation_y(p.alpha2);
}

struct BargmannDecomposition {
  double delta{0.0};        // similarity rotation angle, in (-pi/2, pi/2]
  BargmannParams params;    // alpha1 = alpha + delta, alpha2 = alpha - delta
  bool negated{false};      // source = -reconstruction when set
};

/// Every real unimodular matrix equals R(delta) E R(-delta) with E
/// equidiagonal; delta solves one trig equation and is reported with the
/// smallest magnitude. Matrices with negative trace factor out -identity
/// first (negated flag).
inline BargmannDecomposition bargmann_decompose(const Mat2& m) {
  detail::require_sp2(m, "bargmann_decompose");
  BargmannDecomposition out;
  Mat2 w = m;
  if (w.trace().real() < 0.0) {
    out.negated = true;
    w = -w;
  }
  const double a = w.a.real(), b = w.b.real(), c = w.c.real(), d = w.d.real();
  // Diagonal difference of R(-delta) W R(delta) is
  // (a - d) cos(delta) + (b + c) sin(delta); zero it with the smallest root.
  double delta = 0.0;
  if (std::abs(b + c) > 0.0 || std::abs(a - d) > 0.0) {
    delta = (std::abs(b + c) > 0.0) ? std::atan((d - a) / (b + c))
                                    : 0.5 * std::acos(-1.0);
  }
  const Mat2 e = rotation_y(-delta) * w * rotation_y(delta);
  if (std::abs(e.a.real() - e.d.real()) >
      tol::composed * std::max(1.0, e.max_abs())) {
    throw std::runtime_error(
        "bargmann_decompose: no rotation equalizes the diagonal");
  }
  const double sinh_chi = 0.5 * (e.b.real() + e.c.real());
  const double cos_part = e.a.real();                       // cosh(chi) cos(alpha)
  const double sin_part = 0.5 * (e.c.real() - e.b.real());  // cosh(chi) sin(alpha)
  const double chi = std::asinh(sinh_chi);
  const double alpha = std::atan2(sin_part, cos_part);
  out.delta = delta;
  out.params = {alpha + delta, alpha - delta, chi};
  return out;
}

inline Mat2 bargmann_reconstruct(const BargmannDecomposition& d) {
  const Mat2 m = bargmann_compose(d.params);
  return d.negated ? -m : m;
}

enum class WignerKind { MassiveLike, ImaginaryLike, MasslessLike };

/// Parameters of the similarity sandwich B(-eta) core B(eta) whose core is a
/// rotation (MassiveLike, angle = theta), a squeeze (ImaginaryLike, angle =
/// lambda) or a triangular matrix (MasslessLike, angle = gamma, no eta).
///
/// Branches: theta in (-pi, pi], lambda real, both signed by the lower-left
/// entry; matrices with negative trace set the negated flag. For
/// MasslessLike, upper marks an upper-triangular source.
struct WignerParams {
  WignerKind kind{WignerKind::MassiveLike};
  double angle{0.0};
  double eta{0.0};
  bool negated{false};
  bool upper{false};
};

inline Mat2 wigner_reconstruct(const WignerParams& p) {
  Mat2 m;
  switch (p.kind) {
    case WignerKind::MassiveLike: {
      const double c = std::cos(0.5 * p.angle), s = std::sin(0.5 * p.angle);
      m = {c, -std::exp(-p.eta) * s, std::exp(p.eta) * s, c};
      break;
    }
    case WignerKind::ImaginaryLike: {
      const double c = std::cosh(0.5 * p.angle), s = std::sinh(0.5 * p.angle);
      m = {c, std::exp(-p.eta) * s, std::exp(p.eta) * s, c};
      break;
    }
    case WignerKind::MasslessLike:
    default:
      m = p.upper ? Mat2{1.0, p.angle, 0.0, 1.0} : Mat2{1.0, 0.0, p.angle, 1.0};
      break;
  }
  return p.negated ? -m : m;
}

/// Decomposes an equidiagonal real unimodular matrix. Callers with a general
/// Sp(2) matrix must bargmann_decompose first and feed the core.
inline WignerParams wigner_decompose(const Mat2& m) {
  detail::require_sp2(m, "wigner_decompose");
  const double scale = std::max(1.0, m.max_abs());
  if (std::abs(m.a.real() - m.d.real()) > tol::composed * scale) {
    throw std::invalid_argument(
        "wigner_decompose: matrix is not equidiagonal; apply the Bargmann "
        "similarity rotation first");
  }
  WignerParams out;
  Mat2 w = m;
  if (w.trace().real() < 0.0) {
    out.negated = true;
    w = -w;
  }
  const double a = 0.5 * (w.a.real() + w.d.real());
  const double b = w.b.real();
  const double c = w.c.real();
  const double zero_band = 1e-12 * scale;
  if (std::min(std::abs(b), std::abs(c)) <= zero_band) {
    out.kind = WignerKind::MasslessLike;
    out.upper = std::abs(b) > std::abs(c);
    out.angle = out.upper ? b : c;
    return out;
  }
  if (b * c < 0.0) {
    out.kind = WignerKind::MassiveLike;
    const double s = (c > 0.0 ? 1.0 : -1.0) * std::sqrt(-b * c);
    out.angle = 2.0 * std::atan2(s, a);
    // c = exp(eta) sin(theta/2) and -b = exp(-eta) sin(theta/2); averaging
    // the two logarithms keeps the round trip symmetric.
    out.eta = 0.5 * (std::log(c / s) - std::log(-b / s));
    return out;
  }
  out.kind = WignerKind::ImaginaryLike;
  const double s = (c > 0.0 ? 1.0 : -1.0) * std::sqrt(b * c);
  out.angle = 2.0 * std::asinh(s);
  out.eta = 0.5 * (std::log(c / s) - std::log(b / s));
  return out;
}

/// nth power in closed form: the sandwich scales the core angle by n, so
/// only theta (or lambda, or gamma) picks up the factor n.
inline Mat2 wigner_power(const WignerParams& p, long n) {
  if (n < 0) throw std::invalid_argument("wigner_power: n must be >= 0");
  WignerParams q = p;
  q.angle = static_cast<double>(n) * p.angle;
  q.negated = p.negated && (n % 2 == 1);
  return wigner_reconstruct(q);
}

/// The four conjugate transformations built on the equidiagonal core with
/// rotation angle alpha and squeeze chi. Dot conjugation reverses the boost
/// (chi -> -chi, space inversion); dagger reverses the rotation.
/// They satisfy D-dagger = inverse of D-dot and D-dot-dagger = inverse of D.
struct ConjugateQuadruple {
  Mat2 d;
  Mat2 d_dot;
  Mat2 d_dagger;
  Mat2 d_dot_dagger;
};

inline ConjugateQuadruple conjugates(const BargmannParams& p) {
  const double ch = std::cosh(p.chi), sh = std::sinh(p.chi);
  const double diag = ch * std::cos(p.alpha());
  const double rot = ch * std::sin(p.alpha());
  return {
      Mat2{diag, sh - rot, sh + rot, diag},
      Mat2{diag, -sh - rot, -sh + rot, diag},
      Mat2{diag, sh + rot, sh - rot, diag},
      Mat2{diag, -sh + rot, -sh - rot, diag},
  };
}

}  // namespace twobytwo
