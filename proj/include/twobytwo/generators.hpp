// generators.hpp - the six SL(2,c) generators in the 2x2 and 4x4
// representations, plus the E(2)-like pair N1, N2 for massless particles.
//
// Conventions: J_i = sigma_i / 2 (Hermitian), K_i = i sigma_i / 2
// (anti-Hermitian). Group elements are exp(-i * parameter * generator).
// The 4x4 forms act on (t, z, x, y).
#pragma once

#include <array>
#include <stdexcept>

#include "twobytwo/mat2.hpp"
#include "twobytwo/mat4.hpp"

namespace twobytwo {

enum class GeneratorLabel { J1, J2, J3, K1, K2, K3 };

struct Generator {
  GeneratorLabel label;
  Mat2 two_by_two;
  Mat4c four_by_four;
};

namespace detail {
inline constexpr cplx I{0.0, 1.0};

inline Mat4c mat4c_from(std::array<std::array<cplx, 4>, 4> entries) {
  Mat4c out;
  out.m = entries;
  return out;
}
}  // namespace detail

inline Mat2 j1_2x2() { return {0.0, 0.5, 0.5, 0.0}; }
inline Mat2 j2_2x2() {
  return {0.0, cplx{0.0, -0.5}, cplx{0.0, 0.5}, 0.0};
}
inline Mat2 j3_2x2() { return Mat2::diag(0.5, -0.5); }
inline Mat2 k1_2x2() {
  return {0.0, cplx{0.0, 0.5}, cplx{0.0, 0.5}, 0.0};
}
inline Mat2 k2_2x2() { return {0.0, 0.5, -0.5, 0.0}; }
inline Mat2 k3_2x2() { return Mat2::diag(cplx{0.0, 0.5}, cplx{0.0, -0.5}); }

inline Mat4c j1_4x4() {
  using detail::I;
  return detail::mat4c_from({{{0, 0, 0, 0}, {0, 0, 0, I}, {0, 0, 0, 0}, {0, -I, 0, 0}}});
}
inline Mat4c j2_4x4() {
  using detail::I;
  return detail::mat4c_from({{{0, 0, 0, 0}, {0, 0, -I, 0}, {0, I, 0, 0}, {0, 0, 0, 0}}});
}
inline Mat4c j3_4x4() {
  using detail::I;
  return detail::mat4c_from({{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -I}, {0, 0, I, 0}}});
}
inline Mat4c k1_4x4() {
  using detail::I;
  return detail::mat4c_from({{{0, 0, I, 0}, {0, 0, 0, 0}, {I, 0, 0, 0}, {0, 0, 0, 0}}});
}
inline Mat4c k2_4x4() {
  using detail::I;
  return detail::mat4c_from({{{0, 0, 0, I}, {0, 0, 0, 0}, {0, 0, 0, 0}, {I, 0, 0, 0}}});
}
inline Mat4c k3_4x4() {
  using detail::I;
  return detail::mat4c_from({{{0, I, 0, 0}, {I, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
}

inline const std::array<Generator, 6>& generators() {
  static const std::array<Generator, 6> table = {{
      {GeneratorLabel::J1, j1_2x2(), j1_4x4()},
      {GeneratorLabel::J2, j2_2x2(), j2_4x4()},
      {GeneratorLabel::J3, j3_2x2(), j3_4x4()},
      {GeneratorLabel::K1, k1_2x2(), k1_4x4()},
      {GeneratorLabel::K2, k2_2x2(), k2_4x4()},
      {GeneratorLabel::K3, k3_2x2(), k3_4x4()},
  }};
  return table;
}

inline const Generator& generator(GeneratorLabel label) {
  for (const Generator& g : generators()) {
    if (g.label == label) return g;
  }
  throw std::invalid_argument("generator: unknown label");
}

inline const Generator& rotation_generator(int i) {
  switch (i) {
    case 1: return generator(GeneratorLabel::J1);
    case 2: return generator(GeneratorLabel::J2);
    case 3: return generator(GeneratorLabel::J3);
    default: throw std::invalid_argument("rotation_generator: index must be 1..3");
  }
}

inline const Generator& boost_generator(int i) {
  switch (i) {
    case 1: return generator(GeneratorLabel::K1);
    case 2: return generator(GeneratorLabel::K2);
    case 3: return generator(GeneratorLabel::K3);
    default: throw std::invalid_argument("boost_generator: index must be 1..3");
  }
}

// E(2)-like generators, N1 = K1 - J2 and N2 = K2 + J1. Together with J3 they
// close on the algebra of rotations and translations in a plane and generate
// the gauge transformations of massless particles.
inline Mat2 n1_2x2() { return k1_2x2() - j2_2x2(); }
inline Mat2 n2_2x2() { return k2_2x2() + j1_2x2(); }
inline Mat4c n1_4x4() { return k1_4x4() - j2_4x4(); }
inline Mat4c n2_4x4() { return k2_4x4() + j1_4x4(); }

inline double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  const bool even = (i == 1 && j == 2 && k == 3) ||
                    (i == 2 && j == 3 && k == 1) ||
                    (i == 3 && j == 1 && k == 2);
  return even ? 1.0 : -1.0;
}

}  // namespace twobytwo
