// oscillator.hpp - damped harmonic oscillator in 2x2 matrix form.
//
// The equation y'' + 2 mu y' + omega^2 y = 0 maps to the first-order system
// d/dt (psi1, psi2) = [[0, mu - omega], [mu + omega, 0]] (psi1, psi2) with
// psi = exp(mu t) y. The propagator has a closed form in each damping regime;
// the three forms meet continuously at omega = mu.
#pragma once

#include <cmath>
#include <stdexcept>

#include "twobytwo/mat2.hpp"

namespace twobytwo {

enum class OscillatorMode { Oscillation, Transition, Damping };

/// Mode with its decay/oscillation rate: omega' = sqrt(omega^2 - mu^2) in the
/// oscillation regime, mu' = sqrt(mu^2 - omega^2) in the damping regime, and
/// zero at the transition.
struct Mode {
  OscillatorMode kind;
  double rate;
};

// Relative half-width of the band |omega - mu| treated as the transition
// mode. The exact closed forms are 0/0-singular at omega = mu even though
// their product form is not, so the band routes to the triangular form.
inline constexpr double mode_tol = 1e-9;

struct OscillatorSystem {
  double omega;  // natural frequency sqrt(K/m), > 0
  double mu;     // damping b/(2m), >= 0

  OscillatorSystem(double omega_, double mu_) : omega(omega_), mu(mu_) {
    require_finite(omega, "omega");
    require_finite(mu, "mu");
    if (omega <= 0.0) throw std::invalid_argument("OscillatorSystem: omega must be > 0");
    if (mu < 0.0) throw std::invalid_argument("OscillatorSystem: mu must be >= 0");
  }

  Mode mode() const {
    const double scale = std::max(omega, mu);
    if (std::abs(omega - mu) <= mode_tol * scale) {
      return {OscillatorMode::Transition, 0.0};
    }
    if (omega > mu) {
      return {OscillatorMode::Oscillation, std::sqrt((omega - mu) * (omega + mu))};
    }
    return {OscillatorMode::Damping, std::sqrt((mu - omega) * (mu + omega))};
  }
};

/// State in the undamped-envelope frame: psi1(t), psi2(t). The initial values
/// psi1(0), psi2(0) are the integration constants of the first-order system;
/// the constants of the closed-form y(t) live in DisplacementConstants.
struct StateVector {
  double psi1{1.0};
  double psi2{0.0};
};

/// Closed-form propagator of the first-order system.
///
/// Oscillation (omega > mu):
///   [[cos(w't), -sqrt((omega-mu)/(omega+mu)) sin(w't)],
///    [ sqrt((omega+mu)/(omega-mu)) sin(w't), cos(w't)]]
/// Damping (mu > omega): same pattern with cosh/sinh and ratio flipped.
/// Transition: [[1, 0], [(omega+mu) t, 1]] exactly.
/// The determinant is 1 in every regime.
inline Mat2 propagator(const OscillatorSystem& sys, double t) {
  require_finite(t, "t");
  const Mode m = sys.mode();
  switch (m.kind) {
    case OscillatorMode::Transition:
      return {1.0, 0.0, (sys.omega + sys.mu) * t, 1.0};
    case OscillatorMode::Oscillation: {
      const double ratio = std::sqrt((sys.omega - sys.mu) / (sys.omega + sys.mu));
      const double c = std::cos(m.rate * t);
      const double s = std::sin(m.rate * t);
      return {c, -ratio * s, s / ratio, c};
    }
    case OscillatorMode::Damping:
    default: {
      const double ratio = std::sqrt((sys.mu - sys.omega) / (sys.mu + sys.omega));
      const double c = std::cosh(m.rate * t);
      const double s = std::sinh(m.rate * t);
      return {c, ratio * s, s / ratio, c};
    }
  }
}

inline StateVector evolve(const OscillatorSystem& sys, const StateVector& initial,
                          double t) {
  const Mat2 p = propagator(sys, t);
  return {(p.a * initial.psi1 + p.b * initial.psi2).real(),
          (p.c * initial.psi1 + p.d * initial.psi2).real()};
}

/// Constants of the closed-form displacement y(t). c0 multiplies the even
/// part (cos, cosh, or the constant term at transition) and c1 the odd part
/// (sin, sinh, or the linear term).
struct DisplacementConstants {
  double c0{1.0};
  double c1{0.0};
};

/// Physical displacement y(t) = exp(-mu t) * (mode-appropriate combination).
inline double displacement(const OscillatorSystem& sys,
                           const DisplacementConstants& k, double t) {
  require_finite(t, "t");
  if (t < 0.0) throw std::invalid_argument("displacement: t must be >= 0");
  const Mode m = sys.mode();
  const double envelope = std::exp(-sys.mu * t);
  switch (m.kind) {
    case OscillatorMode::Oscillation:
      return envelope * (k.c0 * std::cos(m.rate * t) + k.c1 * std::sin(m.rate * t));
    case OscillatorMode::Damping:
      return envelope * (k.c0 * std::cosh(m.rate * t) + k.c1 * std::sinh(m.rate * t));
    case OscillatorMode::Transition:
    default:
      return envelope * (k.c0 + k.c1 * t);
  }
}

enum class TransitionSide { Oscillation, Damping };

/// Near-critical propagator family. gamma is the fixed lower-left element
/// (2 omega t at the critical point) and epsilon >= 0 the mode-proximity
/// parameter |mu - omega| / (mu + omega); documented validity epsilon <= 0.1.
/// Both sides reduce to [[1, 0], [gamma, 1]] exactly at epsilon = 0.
inline Mat2 transition_family(double gamma, double epsilon, TransitionSide side) {
  require_finite(gamma, "gamma");
  require_finite(epsilon, "epsilon");
  const double e = (side == TransitionSide::Damping) ? std::abs(epsilon)
                                                     : -std::abs(epsilon);
  const double diag = 1.0 + 0.5 * e * gamma * gamma;
  return {diag, e * gamma, gamma, diag};
}

/// The same family factored as B(-eta) core B(eta) with the squeeze-frame
/// parameter eps = sqrt(gamma) exp(-eta); the core is a near-identity
/// rotation (oscillation side) or squeeze (damping side).
inline Mat2 transition_family_squeezed(double gamma, double eta,
                                       TransitionSide side) {
  require_finite(gamma, "gamma");
  require_finite(eta, "eta");
  if (gamma < 0.0) {
    throw std::invalid_argument("transition_family_squeezed: gamma must be >= 0");
  }
  const double eps = std::sqrt(gamma) * std::exp(-eta);
  const double diag = 1.0 + ((side == TransitionSide::Damping) ? 0.5 : -0.5) *
                                gamma * eps * eps;
  const double off = std::sqrt(gamma) * eps;
  const Mat2 core = (side == TransitionSide::Damping)
                        ? Mat2{diag, off, off, diag}
                        : Mat2{diag, -off, off, diag};
  return boost_z(-eta) * core * boost_z(eta);
}

/// Parameter record tying the two near-critical parametrizations together.
/// mode_epsilon = (mu - omega)/(mu + omega); squeeze_epsilon = sqrt(gamma)
/// exp(-eta). The two agree through mode_epsilon = exp(-2 eta).
struct TransitionParams {
  double mode_epsilon{0.0};
  double gamma{0.0};
  double eta{0.0};
  double squeeze_epsilon{0.0};

  static TransitionParams from_system(const OscillatorSystem& sys, double t) {
    TransitionParams p;
    p.mode_epsilon = (sys.mu - sys.omega) / (sys.mu + sys.omega);
    p.gamma = (sys.omega + sys.mu) * t;
    const double mag = std::abs(p.mode_epsilon);
    p.eta = (mag > 0.0) ? -0.5 * std::log(mag) : 0.0;
    p.squeeze_epsilon = std::sqrt(std::abs(p.gamma)) * std::exp(-p.eta);
    return p;
  }

  static TransitionParams from_squeeze(double gamma, double eta) {
    TransitionParams p;
    p.gamma = gamma;
    p.eta = eta;
    p.squeeze_epsilon = std::sqrt(gamma) * std::exp(-eta);
    p.mode_epsilon = std::exp(-2.0 * eta);
    return p;
  }
};

}  // namespace twobytwo
