// spinorbilinear.hpp - the four SL(2,c) spinors u, v, u-dot, v-dot, their
// transformation weights under Q(eta, phi) = B(eta) Z(phi), the sixteen
// basis bilinears, and the scalar / four-vector / second-rank-tensor
// combinations built from them, including the massless electromagnetic
// limit.
//
// Bilinears are kept symbolic (ordered spinor pairs with complex
// coefficients); numbers enter only through the Q weights. Dot conjugation
// reverses the boost direction (space inversion) and is implemented in one
// place: dots toggle and a pair picks up -1 exactly when both factors have
// the same dot state.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "twobytwo/mat2.hpp"
#include "twobytwo/mat4.hpp"

namespace twobytwo {

enum class SpinorBase { U, V };

struct SpinorSymbol {
  SpinorBase base{SpinorBase::U};
  bool dotted{false};

  friend bool operator==(const SpinorSymbol&, const SpinorSymbol&) = default;
};

inline constexpr SpinorSymbol sym_u{SpinorBase::U, false};
inline constexpr SpinorSymbol sym_v{SpinorBase::V, false};
inline constexpr SpinorSymbol sym_u_dot{SpinorBase::U, true};
inline constexpr SpinorSymbol sym_v_dot{SpinorBase::V, true};

inline SpinorSymbol dot(SpinorSymbol s) { return {s.base, !s.dotted}; }

/// Eigen-weight of a spinor under Q(eta, phi) (undotted) or its dotted
/// companion: u picks e^{(eta - i phi)/2}, v the reciprocal, u-dot
/// e^{-(eta + i phi)/2}, v-dot the reciprocal of that.
inline cplx q_weight(SpinorSymbol s, double eta, double phi) {
  require_finite(eta, "eta");
  require_finite(phi, "phi");
  const cplx exponent = s.dotted ? cplx{eta, phi} : cplx{eta, -phi};
  const double sign = (s.base == SpinorBase::U) == !s.dotted ? 1.0 : -1.0;
  // u: +(eta - i phi)/2, v: -(eta - i phi)/2,
  // u-dot: -(eta + i phi)/2, v-dot: +(eta + i phi)/2.
  return std::exp(0.5 * sign * exponent);
}

struct QAction {
  SpinorSymbol symbol;  // unchanged: the four spinors are eigenvectors
  cplx weight;
};

inline QAction q_transform(double eta, double phi, SpinorSymbol s) {
  return {s, q_weight(s, eta, phi)};
}

/// One weighted bilinear term: coeff * (left right).
struct Bilinear {
  SpinorSymbol left;
  SpinorSymbol right;
  cplx coeff{1.0};
};

/// Weight of the bare pair under Q, the product of the constituent weights.
inline cplx bilinear_weight(const Bilinear& b, double eta, double phi) {
  return q_weight(b.left, eta, phi) * q_weight(b.right, eta, phi);
}

inline Bilinear dot_conjugate(const Bilinear& b) {
  const double sign = (b.left.dotted == b.right.dotted) ? -1.0 : 1.0;
  return {dot(b.left), dot(b.right), sign * b.coeff};
}

namespace detail {
inline int symbol_index(SpinorSymbol s) {
  return (s.dotted ? 2 : 0) + (s.base == SpinorBase::V ? 1 : 0);
}
inline int slot_index(SpinorSymbol l, SpinorSymbol r) {
  return 4 * symbol_index(l) + symbol_index(r);
}
inline SpinorSymbol symbol_from_index(int i) {
  return {(i % 2) ? SpinorBase::V : SpinorBase::U, i >= 2};
}
}  // namespace detail

/// Linear combination of the sixteen basis bilinears, stored on the
/// canonical 16-slot grid (left symbol major).
struct BilinearCombo {
  std::array<cplx, 16> coeffs{};

  BilinearCombo& add(SpinorSymbol l, SpinorSymbol r, cplx coeff) {
    coeffs[detail::slot_index(l, r)] += coeff;
    return *this;
  }

  cplx coeff(SpinorSymbol l, SpinorSymbol r) const {
    return coeffs[detail::slot_index(l, r)];
  }

  double max_abs() const {
    double v = 0.0;
    for (const cplx& c : coeffs) v = std::max(v, std::abs(c));
    return v;
  }

  friend BilinearCombo operator+(const BilinearCombo& a, const BilinearCombo& b) {
    BilinearCombo out;
    for (int i = 0; i < 16; ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
  }
  friend BilinearCombo operator-(const BilinearCombo& a, const BilinearCombo& b) {
    BilinearCombo out;
    for (int i = 0; i < 16; ++i) out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return out;
  }
  friend BilinearCombo operator*(cplx s, const BilinearCombo& a) {
    BilinearCombo out;
    for (int i = 0; i < 16; ++i) out.coeffs[i] = s * a.coeffs[i];
    return out;
  }
};

inline double max_abs_diff(const BilinearCombo& a, const BilinearCombo& b) {
  return (a - b).max_abs();
}

inline BilinearCombo dot_conjugate(const BilinearCombo& combo) {
  BilinearCombo out;
  for (int i = 0; i < 16; ++i) {
    const Bilinear term{detail::symbol_from_index(i / 4),
                        detail::symbol_from_index(i % 4), combo.coeffs[i]};
    const Bilinear dotted = dot_conjugate(term);
    out.add(dotted.left, dotted.right, dotted.coeff);
  }
  return out;
}

inline BilinearCombo q_transform(const BilinearCombo& combo, double eta,
                                 double phi) {
  BilinearCombo out;
  for (int i = 0; i < 16; ++i) {
    const Bilinear term{detail::symbol_from_index(i / 4),
                        detail::symbol_from_index(i % 4), 1.0};
    out.coeffs[i] = combo.coeffs[i] * bilinear_weight(term, eta, phi);
  }
  return out;
}

/// The sixteen basis bilinears in canonical slot order.
inline std::array<Bilinear, 16> basis_bilinears() {
  std::array<Bilinear, 16> out;
  for (int i = 0; i < 16; ++i) {
    out[i] = {detail::symbol_from_index(i / 4), detail::symbol_from_index(i % 4),
              1.0};
  }
  return out;
}

// ----------------------------------------------------------------------
// Scalars.

struct ScalarPair {
  BilinearCombo s_plus;   // scalar: invariant under dot conjugation
  BilinearCombo s_minus;  // pseudoscalar: flips sign under dot conjugation
};

/// S = (uv - vu)/sqrt2 and its dot conjugate S-dot = -(u-dot v-dot -
/// v-dot u-dot)/sqrt2 are both invariant under every Q(eta, phi); the
/// combinations (S +- S-dot)/sqrt2 diagonalize parity.
inline ScalarPair scalars() {
  const double r = 1.0 / std::sqrt(2.0);
  BilinearCombo s;
  s.add(sym_u, sym_v, r).add(sym_v, sym_u, -r);
  const BilinearCombo s_dot = dot_conjugate(s);
  return {r * (s + s_dot), r * (s - s_dot)};
}

// ----------------------------------------------------------------------
// Four-vectors.

/// The bilinear matrix [[u v-dot, v v-dot], [u u-dot, v u-dot]] transforms
/// entrywise like the Hermitian image of a four-vector; the returned entries
/// carry their Q(eta, phi) weights as coefficients:
/// [[e^eta, e^{i phi}], [e^{-i phi}, e^{-eta}]].
///
/// The weight grid equals the slot pattern of the Hermitian transformation
/// with B(eta) Z(-phi), i.e. the pairing reads the transverse plane with the
/// opposite orientation (y -> -y), exactly like the Stokes-parameter
/// embedding. The off-diagonal pairing is therefore v v-dot ~ (x + i y) and
/// u u-dot ~ (x - i y).
inline std::array<std::array<Bilinear, 2>, 2> fourvector_from_bilinears(
    double eta, double phi) {
  std::array<std::array<Bilinear, 2>, 2> u = {{
      {{{sym_u, sym_v_dot, 1.0}, {sym_v, sym_v_dot, 1.0}}},
      {{{sym_u, sym_u_dot, 1.0}, {sym_v, sym_u_dot, 1.0}}},
  }};
  for (auto& row : u) {
    for (Bilinear& entry : row) entry.coeff = bilinear_weight(entry, eta, phi);
  }
  return u;
}

/// Dot conjugate of the four-vector matrix, [[u-dot v, v-dot v],
/// [u-dot u, v-dot u]]; entrywise it pairs with the space-inverted
/// four-vector (t, -z, -x, -y).
inline std::array<std::array<Bilinear, 2>, 2> fourvector_matrix_dotted() {
  std::array<std::array<Bilinear, 2>, 2> base = {{
      {{{sym_u, sym_v_dot, 1.0}, {sym_v, sym_v_dot, 1.0}}},
      {{{sym_u, sym_u_dot, 1.0}, {sym_v, sym_u_dot, 1.0}}},
  }};
  for (auto& row : base) {
    for (Bilinear& entry : row) entry = dot_conjugate(entry);
  }
  return base;
}

// ----------------------------------------------------------------------
// Spin decomposition: each of the four dotness blocks splits into a
// symmetric spin-1 triplet and an antisymmetric spin-0 singlet.

struct SpinBlock {
  std::array<BilinearCombo, 3> triplet;
  BilinearCombo singlet;
};

inline std::array<SpinBlock, 4> spin_blocks() {
  const double r = 1.0 / std::sqrt(2.0);
  std::array<SpinBlock, 4> out;
  const bool dots[4][2] = {{false, false}, {true, true}, {false, true}, {true, false}};
  for (int k = 0; k < 4; ++k) {
    const SpinorSymbol a{SpinorBase::U, dots[k][0]};
    const SpinorSymbol b{SpinorBase::V, dots[k][1]};
    const SpinorSymbol c{SpinorBase::U, dots[k][1]};
    const SpinorSymbol d{SpinorBase::V, dots[k][0]};
    SpinBlock block;
    block.triplet[0].add(a, c, 1.0);                      // uu-type
    block.triplet[1].add(a, b, r).add(d, c, r);           // (uv + vu)/sqrt2
    block.triplet[2].add(d, b, 1.0);                      // vv-type
    block.singlet.add(a, b, r).add(d, c, -r);             // (uv - vu)/sqrt2
    out[k] = block;
  }
  return out;
}

// ----------------------------------------------------------------------
// Second-rank tensor.

/// Values assigned to the six same-dotness bilinears that feed the tensor:
/// uu, vv, (uv + vu), and their dotted counterparts.
struct TensorAssignments {
  cplx uu{0.0};
  cplx vv{0.0};
  cplx uv_sym{0.0};
  cplx uu_dot{0.0};
  cplx vv_dot{0.0};
  cplx uv_sym_dot{0.0};
};

/// Antisymmetric tensor components, stored in the (z, x, y) component order.
/// The f components are parity-even (magnetic-like), the g components
/// parity-odd (electric-like). Components are complex because bilinear
/// values are; real fields are the restriction to self-conjugate
/// assignments.
struct FieldTensor {
  std::array<cplx, 3> f{};  // f_z, f_x, f_y
  std::array<cplx, 3> g{};  // g_z, g_x, g_y

  /// Assembled antisymmetric matrix on (t, z, x, y):
  /// [[0, -g_z, -g_x, -g_y], [g_z, 0, -f_y, f_x],
  ///  [g_x, f_y, 0, -f_z], [g_y, -f_x, f_z, 0]].
  Mat4c to_matrix() const {
    Mat4c t;
    t.m = {{{0.0, -g[0], -g[1], -g[2]},
            {g[0], 0.0, -f[2], f[1]},
            {g[1], f[2], 0.0, -f[0]},
            {g[2], -f[1], f[0], 0.0}}};
    return t;
  }
};

inline FieldTensor tensor_components(const TensorAssignments& v) {
  const cplx half{0.5, 0.0};
  const cplx half_over_i{0.0, -0.5};  // 1/(2i)
  FieldTensor t;
  t.f[0] = half * (v.uv_sym - v.uv_sym_dot);
  t.g[0] = half_over_i * (v.uv_sym + v.uv_sym_dot);
  t.f[1] = half * ((v.uu - v.uu_dot) + (v.vv - v.vv_dot));
  t.f[2] = half_over_i * ((v.uu - v.uu_dot) - (v.vv - v.vv_dot));
  t.g[1] = half_over_i * ((v.uu + v.uu_dot) + (v.vv + v.vv_dot));
  t.g[2] = -half * ((v.uu + v.uu_dot) - (v.vv + v.vv_dot));
  return t;
}

/// Space inversion: f unchanged, g negated.
inline FieldTensor parity(const FieldTensor& t) {
  return {t.f, {-t.g[0], -t.g[1], -t.g[2]}};
}

/// The tensor components as symbolic combinations, for parity checks.
struct TensorCombos {
  std::array<BilinearCombo, 3> f;  // z, x, y
  std::array<BilinearCombo, 3> g;
};

inline TensorCombos tensor_combos() {
  const cplx half{0.5, 0.0};
  const cplx half_over_i{0.0, -0.5};
  TensorCombos tc;
  tc.f[0].add(sym_u, sym_v, half).add(sym_v, sym_u, half)
      .add(sym_u_dot, sym_v_dot, -half).add(sym_v_dot, sym_u_dot, -half);
  tc.g[0].add(sym_u, sym_v, half_over_i).add(sym_v, sym_u, half_over_i)
      .add(sym_u_dot, sym_v_dot, half_over_i).add(sym_v_dot, sym_u_dot, half_over_i);
  tc.f[1].add(sym_u, sym_u, half).add(sym_u_dot, sym_u_dot, -half)
      .add(sym_v, sym_v, half).add(sym_v_dot, sym_v_dot, -half);
  tc.f[2].add(sym_u, sym_u, half_over_i).add(sym_u_dot, sym_u_dot, -half_over_i)
      .add(sym_v, sym_v, -half_over_i).add(sym_v_dot, sym_v_dot, half_over_i);
  tc.g[1].add(sym_u, sym_u, half_over_i).add(sym_u_dot, sym_u_dot, half_over_i)
      .add(sym_v, sym_v, half_over_i).add(sym_v_dot, sym_v_dot, half_over_i);
  tc.g[2].add(sym_u, sym_u, -half).add(sym_u_dot, sym_u_dot, -half)
      .add(sym_v, sym_v, half).add(sym_v_dot, sym_v_dot, half);
  return tc;
}

// ----------------------------------------------------------------------
// Massless (electromagnetic) limit.

/// Field pattern surviving the large-boost limit, built from uu and
/// v-dot v-dot alone: B_x = (uu - vdvd)/2, B_y = (uu + vdvd)/(2i), with
/// E_x = B_y and E_y = -B_x identically, so E is perpendicular to B and of
/// equal magnitude. The circular combination B_x + i B_y recovers uu.
struct EmFieldLimit {
  cplx ex{0.0}, ey{0.0};
  cplx bx{0.0}, by{0.0};

  cplx e_dot_b() const { return ex * bx + ey * by; }
  cplx e_sq_minus_b_sq() const {
    // Grouped so the pairwise cancellations of the limit are exact.
    return (ex * ex - by * by) + (ey * ey - bx * bx);
  }

  /// [[0, 0, -E_x, -E_y], [0, 0, -B_y, B_x], [E_x, B_y, 0, 0],
  ///  [E_y, -B_x, 0, 0]] on (t, z, x, y).
  Mat4c to_matrix() const {
    Mat4c t;
    t.m = {{{0.0, 0.0, -ex, -ey},
            {0.0, 0.0, -by, bx},
            {ex, by, 0.0, 0.0},
            {ey, -bx, 0.0, 0.0}}};
    return t;
  }
};

inline EmFieldLimit massless_limit_tensor(cplx u_val, cplx vdot_val) {
  const cplx half{0.5, 0.0};
  const cplx half_over_i{0.0, -0.5};
  EmFieldLimit out;
  out.bx = half * (u_val - vdot_val);
  out.by = half_over_i * (u_val + vdot_val);
  out.ex = out.by;
  out.ey = -out.bx;
  return out;
}

// ----------------------------------------------------------------------
// Gauge behaviour of the limit.

struct GaugeLimitReport {
  Vec2 u, v, u_dot, v_dot;
  bool u_invariant{}, v_invariant{}, u_dot_invariant{}, v_dot_invariant{};
};

/// Applies the triangular gauge matrices of the massless limit,
/// [[1, -gamma], [0, 1]] to the undotted spinors and [[1, 0], [-gamma, 1]]
/// to the dotted ones, and reports exact invariance. Only u and v-dot, the
/// pair the electromagnetic limit is built from, survive unchanged.
inline GaugeLimitReport gauge_invariance_of_limit(double gamma) {
  require_finite(gamma, "gamma");
  const Mat2 undotted{1.0, -gamma, 0.0, 1.0};
  const Mat2 dotted{1.0, 0.0, -gamma, 1.0};
  const Vec2 u0{1.0, 0.0}, v0{0.0, 1.0};
  GaugeLimitReport r;
  r.u = undotted * u0;
  r.v = undotted * v0;
  r.u_dot = dotted * u0;
  r.v_dot = dotted * v0;
  r.u_invariant = max_abs_diff(r.u, u0) == 0.0;
  r.v_invariant = max_abs_diff(r.v, v0) == 0.0;
  r.u_dot_invariant = max_abs_diff(r.u_dot, u0) == 0.0;
  r.v_dot_invariant = max_abs_diff(r.v_dot, v0) == 0.0;
  return r;
}

}  // namespace twobytwo
