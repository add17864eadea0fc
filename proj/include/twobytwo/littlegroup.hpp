// littlegroup.hpp - Wigner's little groups in the 2x2 representation: the
// invariance condition P = W P W^dagger, the canonical element families for
// the three particle classes, boosted little groups, the E(2)-like gauge
// transformations on photon potentials and massless spinors, and the
// small-mass gauge-violation bound.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twobytwo/fourvector.hpp"
#include "twobytwo/generators.hpp"
#include "twobytwo/mat2.hpp"
#include "twobytwo/mat4.hpp"

namespace twobytwo {

enum class ParticleClass { Massive, Massless, ImaginaryMass };

/// Canonical momentum matrix at unit scale: diag(1, 1) for a massive
/// particle at rest, diag(1, 0) on the light cone, diag(1, -1) for an
/// imaginary-mass particle with vanishing energy. Constant factors carry no
/// physics here.
inline Mat2 canonical_momentum(ParticleClass cls) {
  switch (cls) {
    case ParticleClass::Massive: return Mat2::diag(1.0, 1.0);
    case ParticleClass::Massless: return Mat2::diag(1.0, 0.0);
    case ParticleClass::ImaginaryMass:
    default: return Mat2::diag(1.0, -1.0);
  }
}

/// The canonical momentum boosted along z: diag(e^eta, e^-eta),
/// diag(e^eta, 0), diag(e^eta, -e^-eta).
inline Mat2 boosted_momentum(ParticleClass cls, double eta) {
  require_finite(eta, "eta");
  const Mat2 b = boost_z(eta);
  return detail::hermitian_sandwich(b, canonical_momentum(cls));
}

struct WignerConditionResult {
  bool holds;
  double residual;  // max-norm of W P W^dagger - P
};

/// Checks the invariance condition P = W P W^dagger.
inline WignerConditionResult wigner_condition(const Mat2& w, const Mat2& p,
                                              double tolerance = tol::algebraic) {
  const Mat2 transformed = hermitian_transform(w, p);
  const double residual = max_abs_diff(transformed, p);
  return {residual <= tolerance * std::max(1.0, p.max_abs()), residual};
}

/// Canonical little-group element: a rotation R(param) for Massive, the
/// triangular matrix [[1, param], [0, 1]] for Massless, a squeeze S(param)
/// for ImaginaryMass, composed on the right with the z rotation Z(phi).
/// Every such element satisfies the Wigner condition against the class's
/// canonical momentum.
inline Mat2 little_group_element(ParticleClass cls, double param,
                                 double phi = 0.0) {
  require_finite(param, "param");
  Mat2 core;
  switch (cls) {
    case ParticleClass::Massive: core = rotation_y(param); break;
    case ParticleClass::Massless: core = {1.0, param, 0.0, 1.0}; break;
    case ParticleClass::ImaginaryMass: core = squeeze_x(param); break;
  }
  return (phi == 0.0) ? core : core * rotation_z(phi);
}

/// Little-group element for a particle moving along z with rapidity eta:
/// B(eta) core B(-eta). The right factor brings the momentum to the
/// canonical frame, the core transforms there, the left factor restores the
/// momentum, so boosted_momentum(cls, eta) stays invariant.
///
/// The massless case is rejected: its frame parameter diverges, and the
/// triangular gauge_element already covers every boosted massless momentum.
inline Mat2 boosted_little_group(ParticleClass cls, double core_param,
                                 double eta) {
  if (cls == ParticleClass::Massless) {
    throw std::invalid_argument(
        "boosted_little_group: the massless family degenerates under boosts; "
        "use gauge_element, which fixes every diag(s, 0) momentum");
  }
  require_finite(eta, "eta");
  return boost_z(eta) * little_group_element(cls, core_param) * boost_z(-eta);
}

struct GaugeParams {
  double gamma{0.0};
  double phi{0.0};
};

/// E(2)-like gauge element exp(-i gamma (N1 cos phi + N2 sin phi)) =
/// [[1, gamma e^{-i phi}], [0, 1]]; unimodular with trace 2.
inline Mat2 gauge_element(const GaugeParams& g) {
  require_finite(g.gamma, "gamma");
  require_finite(g.phi, "phi");
  return {1.0, g.gamma * std::polar(1.0, -g.phi), 0.0, 1.0};
}

/// The dotted companion, generated by the boost-reversed pair N1-dot,
/// N2-dot: [[1, 0], [-gamma e^{i phi}, 1]]. Acts on dotted spinors.
inline Mat2 gauge_element_dotted(const GaugeParams& g) {
  require_finite(g.gamma, "gamma");
  require_finite(g.phi, "phi");
  return {1.0, 0.0, -g.gamma * std::polar(1.0, g.phi), 1.0};
}

/// Closed-form 4x4 gauge transformation on (t, z, x, y). Equals
/// to_four_by_four(gauge_element(g)) and leaves (1, 1, 0, 0) invariant.
inline Mat4 gauge_element_4x4(const GaugeParams& g) {
  require_finite(g.gamma, "gamma");
  require_finite(g.phi, "phi");
  const double c = g.gamma * std::cos(g.phi);
  const double s = g.gamma * std::sin(g.phi);
  // Snapping gamma^2/2 onto the representable grid of 1 + q keeps the
  // light-cone cancellation (1 + q) - q = 1 exact in floating point.
  const double q = (1.0 + 0.5 * g.gamma * g.gamma) - 1.0;
  Mat4 out;
  out.m = {{{1.0 + q, -q, c, s},
            {q, 1.0 - q, c, s},
            {c, -c, 1.0, 0.0},
            {s, -s, 0.0, 1.0}}};
  return out;
}

/// Photon four-potential (A0, A3, A1, A2) subject to the Lorentz condition
/// A3 = A0 in the massless case.
struct PhotonPotential {
  double a0{0.0}, a3{0.0}, a1{0.0}, a2{0.0};

  bool lorentz_condition_holds(double tolerance = tol::algebraic) const {
    const double scale = std::max({1.0, std::abs(a0), std::abs(a3)});
    return std::abs(a3 - a0) <= tolerance * scale;
  }
};

/// Hermitian image of a Lorentz-condition potential: [[2 A0, A1 - i A2],
/// [A1 + i A2, 0]].
inline Mat2 potential_matrix(const PhotonPotential& a) {
  return FourVector{a.a0, a.a3, a.a1, a.a2}.to_hermitian();
}

inline PhotonPotential potential_from_matrix(const Mat2& m) {
  const FourVector v = FourVector::from_hermitian(m, tol::composed);
  return {v.t, v.z, v.x, v.y};
}

/// Gauge transformation of the potential: adds
/// gamma (A1 cos phi + A2 sin phi) to both A0 and A3 and leaves the
/// transverse components alone, so the Lorentz condition survives.
inline PhotonPotential gauge_transform_potential(const GaugeParams& g,
                                                 const PhotonPotential& a) {
  if (!a.lorentz_condition_holds()) {
    throw std::invalid_argument(
        "gauge_transform_potential: potential violates the Lorentz condition "
        "A3 = A0");
  }
  const double shift = g.gamma * (a.a1 * std::cos(g.phi) + a.a2 * std::sin(g.phi));
  return {a.a0 + shift, a.a3 + shift, a.a1, a.a2};
}

/// Same transformation through the 2x2 route: sandwich the potential matrix
/// between the gauge element and its adjoint.
inline PhotonPotential gauge_transform_potential_2x2(const GaugeParams& g,
                                                     const PhotonPotential& a) {
  if (!a.lorentz_condition_holds()) {
    throw std::invalid_argument(
        "gauge_transform_potential_2x2: potential violates the Lorentz "
        "condition A3 = A0");
  }
  return potential_from_matrix(
      hermitian_transform(gauge_element(g), potential_matrix(a)));
}

enum class SpinorLabel { U, V, UDot, VDot };

/// Basis spinors: u = (1, 0) and v = (0, 1), with numerically identical
/// dotted counterparts (they differ only in which representation acts).
inline Vec2 spinor(SpinorLabel which) {
  switch (which) {
    case SpinorLabel::U:
    case SpinorLabel::UDot: return {1.0, 0.0};
    case SpinorLabel::V:
    case SpinorLabel::VDot:
    default: return {0.0, 1.0};
  }
}

struct GaugeSpinorResult {
  Vec2 transformed;
  bool invariant;  // computed by direct matrix action, not assumed
};

/// Applies the gauge element to a spinor; undotted spinors see
/// gauge_element, dotted ones the dotted companion. u and v-dot come back
/// unchanged; v and u-dot pick up a gamma term.
inline GaugeSpinorResult gauge_transform_spinor(const GaugeParams& g,
                                                SpinorLabel which) {
  const bool dotted =
      (which == SpinorLabel::UDot) || (which == SpinorLabel::VDot);
  const Mat2 action = dotted ? gauge_element_dotted(g) : gauge_element(g);
  const Vec2 original = spinor(which);
  const Vec2 out = action * original;
  return {out, max_abs_diff(out, original) == 0.0};
}

// ----------------------------------------------------------------------
// Small-mass spin-1/2 particles. The massless limits of the Wigner-form
// D and D-dot matrices are triangular gauge elements; a small mass restores
// an off-diagonal entry of size eps^2 = gamma (m / 2p)^2.

inline Mat2 massless_neutrino_matrix(double gamma) {
  require_finite(gamma, "gamma");
  return {1.0, 0.0, gamma, 1.0};
}

inline Mat2 massless_antineutrino_matrix(double gamma) {
  require_finite(gamma, "gamma");
  return {1.0, -gamma, 0.0, 1.0};
}

namespace detail {
inline double small_mass_eps_sq(double gamma, double m, double p) {
  require_finite(gamma, "gamma");
  require_finite(m, "m");
  require_finite(p, "p");
  if (p <= 0.0) throw std::invalid_argument("small mass matrices: p must be > 0");
  if (m < 0.0) throw std::invalid_argument("small mass matrices: m must be >= 0");
  const double r = m / (2.0 * p);
  return gamma * r * r;
}
}  // namespace detail

inline Mat2 small_mass_neutrino_matrix(double gamma, double m, double p) {
  const double e2 = detail::small_mass_eps_sq(gamma, m, p);
  const double diag = 1.0 - 0.5 * gamma * e2;
  return {diag, -e2, gamma, diag};
}

inline Mat2 small_mass_antineutrino_matrix(double gamma, double m, double p) {
  const double e2 = detail::small_mass_eps_sq(gamma, m, p);
  const double diag = 1.0 - 0.5 * gamma * e2;
  return {diag, -gamma, e2, diag};
}

enum class NeutrinoKind { Neutrino, AntiNeutrino };

struct GaugeViolation {
  Vec2 state;            // small-mass matrix applied to the protected spinor
  double violation_norm; // max-norm of the departure, equals eps^2 max(1, |gamma|/2)
  double epsilon_sq;     // gamma (m / 2p)^2
};

/// Measures how far the gauge-protected spinor (v for neutrinos, u-dot for
/// anti-neutrinos) moves under the small-mass matrix. The departure is
/// -eps^2 (1, gamma/2) for neutrinos and eps^2 (-gamma/2, 1) for
/// anti-neutrinos, so the norm vanishes quadratically with the mass.
inline GaugeViolation gauge_violation(double gamma, double m, double p,
                                      NeutrinoKind kind) {
  const bool neutrino = (kind == NeutrinoKind::Neutrino);
  const Mat2 action = neutrino ? small_mass_neutrino_matrix(gamma, m, p)
                               : small_mass_antineutrino_matrix(gamma, m, p);
  const Vec2 protected_spinor = neutrino ? Vec2{0.0, 1.0} : Vec2{1.0, 0.0};
  const Vec2 state = action * protected_spinor;
  return {state, max_abs_diff(state, protected_spinor),
          detail::small_mass_eps_sq(gamma, m, p)};
}

}  // namespace twobytwo
