// verify.hpp - seeded, randomized invariant suites. These back the command
// line `verify` subcommand and double as quick library self-diagnostics.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twobytwo/decomp.hpp"
#include "twobytwo/fourvector.hpp"
#include "twobytwo/generators.hpp"
#include "twobytwo/littlegroup.hpp"
#include "twobytwo/mat2.hpp"
#include "twobytwo/poincare.hpp"
#include "twobytwo/spinorbilinear.hpp"

namespace twobytwo::verify {

struct SuiteResult {
  std::string name;
  int passed{0};
  int failed{0};
  double max_residual{0.0};

  bool ok() const { return failed == 0; }
  void record(bool pass, double residual) {
    (pass ? passed : failed) += 1;
    max_residual = std::max(max_residual, residual);
  }
};

using Rng = std::mt19937_64;

/// Random element of the real subgroup: product of `factors` rotation /
/// squeeze / boost matrices with bounded parameters.
inline Mat2 random_sp2(Rng& rng, int factors = 5) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> rapidity(-1.2, 1.2);
  Mat2 m = Mat2::identity();
  for (int i = 0; i < factors; ++i) {
    switch (kind(rng)) {
      case 0: m = m * rotation_y(angle(rng)); break;
      case 1: m = m * squeeze_x(rapidity(rng)); break;
      default: m = m * boost_z(rapidity(rng)); break;
    }
  }
  return m;
}

/// Random element of the full group: adds z rotations to the factor pool.
inline Mat2 random_sl2c(Rng& rng, int factors = 6) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> rapidity(-0.8, 0.8);
  Mat2 m = Mat2::identity();
  for (int i = 0; i < factors; ++i) {
    switch (kind(rng)) {
      case 0: m = m * rotation_y(angle(rng)); break;
      case 1: m = m * squeeze_x(rapidity(rng)); break;
      case 2: m = m * boost_z(rapidity(rng)); break;
      default: m = m * rotation_z(angle(rng)); break;
    }
  }
  return m;
}

/// All 18 commutator identities in both representations: the 15 pairs of the
/// six-generator algebra ([J_i, J_j] = i e_ijk J_k, [J_i, K_j] = i e_ijk K_k
/// including the vanishing diagonal, [K_i, K_j] = -i e_ijk J_k) plus the
/// three E(2)-like relations for N1, N2, J3.
inline SuiteResult lie_algebra(double tol_2x2 = 1e-14, double tol_4x4 = 1e-12) {
  SuiteResult out{"lie_algebra"};
  const cplx i{0.0, 1.0};
  const auto& J = [](int n) -> const Generator& { return rotation_generator(n); };
  const auto& K = [](int n) -> const Generator& { return boost_generator(n); };

  const auto check2 = [&](const Mat2& lhs, const Mat2& rhs, double tolv) {
    const double r = max_abs_diff(lhs, rhs);
    return std::pair<bool, double>{r <= tolv, r};
  };
  const auto check4 = [&](const Mat4c& lhs, const Mat4c& rhs, double tolv) {
    const double r = max_abs_diff(lhs, rhs);
    return std::pair<bool, double>{r <= tolv, r};
  };
  const auto record_pair = [&](const Mat2& l2, const Mat2& r2, const Mat4c& l4,
                               const Mat4c& r4) {
    const auto a = check2(l2, r2, tol_2x2);
    const auto b = check4(l4, r4, tol_4x4);
    out.record(a.first && b.first, std::max(a.second, b.second));
  };

  // [J_i, J_j] = i e_ijk J_k (i < j), 3 checks.
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      Mat2 rhs2 = Mat2::zero();
      Mat4c rhs4;
      for (int k = 1; k <= 3; ++k) {
        const cplx w = i * levi_civita(a, b, k);
        rhs2 = rhs2 + w * J(k).two_by_two;
        rhs4 = rhs4 + w * J(k).four_by_four;
      }
      record_pair(commutator(J(a).two_by_two, J(b).two_by_two), rhs2,
                  commutator(J(a).four_by_four, J(b).four_by_four), rhs4);
    }
  }
  // [J_i, K_j] = i e_ijk K_k, all 9 pairs.
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      Mat2 rhs2 = Mat2::zero();
      Mat4c rhs4;
      for (int k = 1; k <= 3; ++k) {
        const cplx w = i * levi_civita(a, b, k);
        rhs2 = rhs2 + w * K(k).two_by_two;
        rhs4 = rhs4 + w * K(k).four_by_four;
      }
      record_pair(commutator(J(a).two_by_two, K(b).two_by_two), rhs2,
                  commutator(J(a).four_by_four, K(b).four_by_four), rhs4);
    }
  }
  // [K_i, K_j] = -i e_ijk J_k (i < j), 3 checks.
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      Mat2 rhs2 = Mat2::zero();
      Mat4c rhs4;
      for (int k = 1; k <= 3; ++k) {
        const cplx w = -i * levi_civita(a, b, k);
        rhs2 = rhs2 + w * J(k).two_by_two;
        rhs4 = rhs4 + w * J(k).four_by_four;
      }
      record_pair(commutator(K(a).two_by_two, K(b).two_by_two), rhs2,
                  commutator(K(a).four_by_four, K(b).four_by_four), rhs4);
    }
  }
  // E(2)-like set: [N1, N2] = 0, [N1, J3] = -i N2, [N2, J3] = i N1.
  record_pair(commutator(n1_2x2(), n2_2x2()), Mat2::zero(),
              commutator(n1_4x4(), n2_4x4()), Mat4c{});
  record_pair(commutator(n1_2x2(), j3_2x2()), -i * n2_2x2(),
              commutator(n1_4x4(), j3_4x4()), -i * n2_4x4());
  record_pair(commutator(n2_2x2(), j3_2x2()), i * n1_2x2(),
              commutator(n2_4x4(), j3_4x4()), i * n1_4x4());
  return out;
}

/// Group homomorphism of the 4x4 map plus the commuting diagram with the
/// Hermitian transformation.
inline SuiteResult homomorphism(int samples = 1000, std::uint64_t seed = 0,
                                double tolv = 1e-10) {
  SuiteResult out{"homomorphism"};
  Rng rng(seed);
  std::uniform_real_distribution<double> comp(-2.0, 2.0);
  for (int s = 0; s < samples; ++s) {
    const Mat2 g1 = random_sl2c(rng);
    const Mat2 g2 = random_sl2c(rng);
    const double r1 =
        max_abs_diff(to_four_by_four(g1 * g2), to_four_by_four(g1) * to_four_by_four(g2));
    const FourVector v{comp(rng), comp(rng), comp(rng), comp(rng)};
    const FourVector via_2x2 = transform(g1, v);
    const FourVector via_4x4 = apply(to_four_by_four(g1), v);
    const double r2 = max_abs_diff(via_2x2, via_4x4);
    const double r = std::max(r1, r2);
    out.record(r <= tolv, r);
  }
  return out;
}

/// Bargmann round trip, Wigner round trip through the equidiagonal core, and
/// agreement of the trace class with the Wigner kind.
inline SuiteResult decomposition_roundtrip(int samples = 1000,
                                           std::uint64_t seed = 0,
                                           double tolv = 1e-10) {
  SuiteResult out{"decomposition_roundtrip"};
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Mat2 m = random_sp2(rng);
    const BargmannDecomposition bd = bargmann_decompose(m);
    const double r1 = max_abs_diff(bargmann_reconstruct(bd), m);

    Mat2 core = rotation_y(-bd.delta) * m * rotation_y(bd.delta);
    core = Mat2{core.a.real(), core.b.real(), core.c.real(), core.d.real()};
    const WignerParams wp = wigner_decompose(core);
    const Mat2 rebuilt =
        rotation_y(bd.delta) * wigner_reconstruct(wp) * rotation_y(-bd.delta);
    const double r2 = max_abs_diff(rebuilt, m);

    const TraceClass tc = classify(m);
    const bool kinds_agree =
        (tc == TraceClass::Elliptic && wp.kind == WignerKind::MassiveLike) ||
        (tc == TraceClass::Parabolic && wp.kind == WignerKind::MasslessLike) ||
        (tc == TraceClass::Hyperbolic && wp.kind == WignerKind::ImaginaryLike);

    const double scale = std::max(1.0, m.max_abs());
    const double r = std::max(r1, r2) / scale;
    out.record(r <= tolv && kinds_agree, r);
  }
  return out;
}

/// Wigner condition for the three canonical families and their boosted
/// versions.
inline SuiteResult wigner_condition_suite(int samples = 300,
                                          std::uint64_t seed = 0,
                                          double tolv = 1e-12) {
  SuiteResult out{"wigner_condition"};
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> rapidity(-2.0, 2.0);
  std::uniform_real_distribution<double> phi(-3.0, 3.0);
  constexpr ParticleClass classes[3] = {ParticleClass::Massive,
                                        ParticleClass::Massless,
                                        ParticleClass::ImaginaryMass};
  for (int s = 0; s < samples; ++s) {
    const ParticleClass cls = classes[s % 3];
    const double param = angle(rng);
    const Mat2 w = little_group_element(cls, param, phi(rng));
    const auto canonical = wigner_condition(w, canonical_momentum(cls), tolv);
    double residual = canonical.residual;
    bool pass = canonical.holds;
    if (cls != ParticleClass::Massless) {
      const double eta = rapidity(rng);
      const Mat2 wb = boosted_little_group(cls, param, eta);
      const Mat2 pb = boosted_momentum(cls, eta);
      const auto boosted = wigner_condition(wb, pb, tolv);
      const double rel = boosted.residual / std::max(1.0, pb.max_abs());
      residual = std::max(residual, rel);
      pass = pass && rel <= tolv;
    } else {
      const auto gauge = wigner_condition(
          gauge_element({param, phi(rng)}), canonical_momentum(cls), tolv);
      residual = std::max(residual, gauge.residual);
      pass = pass && gauge.holds;
    }
    out.record(pass, residual);
  }
  return out;
}

/// Determinant invariance of the coherency matrix, the radius identity
/// s0^2 - R^2 = a^4 sin^2 xi, and the Stokes commuting diagram.
inline SuiteResult stokes_invariant(int samples = 1000, std::uint64_t seed = 0,
                                    double tolv = 1e-11) {
  SuiteResult out{"stokes_invariant"};
  Rng rng(seed);
  std::uniform_real_distribution<double> amp(0.5, 2.0);
  std::uniform_real_distribution<double> xi_dist(0.05, 1.5);
  std::uniform_real_distribution<double> phase(-3.0, 3.0);
  for (int s = 0; s < samples; ++s) {
    const double a = amp(rng);
    const double xi = xi_dist(rng);
    const JonesVector jones{a, phase(rng)};
    const CoherencyMatrix c = coherency_from_jones(jones, xi);
    const Mat2 g = random_sl2c(rng);
    const CoherencyMatrix ct = transform_coherency(g, c);
    const double det_rel = std::abs(ct.det() - c.det()) / std::abs(c.det());

    const StokesVector sv = stokes(c);
    const double a4sin2 = std::pow(a, 4) * std::pow(std::sin(xi), 2);
    const double radius = poincare_radius(c);
    const double radius_residual =
        std::abs(sv.s0 * sv.s0 - radius * radius - a4sin2);

    const StokesVector direct = stokes(ct);
    const StokesVector via_4x4 = fourvector_to_stokes(
        apply(to_four_by_four(g), stokes_to_fourvector(sv)));
    const double diagram =
        std::max(std::max(std::abs(direct.s0 - via_4x4.s0),
                          std::abs(direct.s3 - via_4x4.s3)),
                 std::max(std::abs(direct.s1 - via_4x4.s1),
                          std::abs(direct.s2 - via_4x4.s2))) /
        std::max(1.0, std::abs(direct.s0));

    // Composed-product checks (the commuting diagram) get the looser
    // composed tolerance; the invariants themselves are held to tolv.
    const bool pass = det_rel <= tolv && radius_residual <= tolv &&
                      diagram <= std::max(tolv, tol::composed);
    out.record(pass, std::max(det_rel, std::max(radius_residual, diagram)));
  }
  return out;
}

/// The sixteen bilinear weights against their frozen (eta, phi) exponents,
/// plus scalar invariance.
inline SuiteResult bilinear_table(double tolv = 1e-14) {
  SuiteResult out{"bilinear_table"};
  // (w_eta, w_phi): weight = exp(w_eta * eta) * exp(i * w_phi * phi), in
  // canonical slot order (uu, uv, u ud, u vd, vu, vv, ...).
  const int expected[16][2] = {
      {1, -1}, {0, 0},  {0, -1}, {1, 0},    // uu, uv, u ud, u vd
      {0, 0},  {-1, 1}, {-1, 0}, {0, 1},    // vu, vv, v ud, v vd
      {0, -1}, {-1, 0}, {-1, -1}, {0, 0},   // ud u, ud v, ud ud, ud vd
      {1, 0},  {0, 1},  {0, 0},  {1, 1},    // vd u, vd v, vd ud, vd vd
  };
  const double eta = 0.7, phi = 1.1;
  const auto basis = basis_bilinears();
  for (int i = 0; i < 16; ++i) {
    const cplx w = bilinear_weight(basis[i], eta, phi);
    const cplx want = std::exp(cplx{expected[i][0] * eta, expected[i][1] * phi});
    const double r = std::abs(w - want) / std::abs(want);
    out.record(r <= tolv * 10.0, r);
  }
  return out;
}

inline std::vector<std::string> suite_names() {
  return {"lie_algebra",       "homomorphism",     "decomposition_roundtrip",
          "wigner_condition",  "stokes_invariant", "bilinear_table"};
}

inline std::optional<SuiteResult> run_suite(const std::string& name,
                                            int samples, std::uint64_t seed,
                                            double tol_override = 0.0) {
  const bool has_tol = tol_override > 0.0;
  if (name == "lie_algebra") {
    return has_tol ? lie_algebra(tol_override, tol_override) : lie_algebra();
  }
  if (name == "homomorphism") {
    return homomorphism(samples, seed, has_tol ? tol_override : 1e-10);
  }
  if (name == "decomposition_roundtrip") {
    return decomposition_roundtrip(samples, seed, has_tol ? tol_override : 1e-10);
  }
  if (name == "wigner_condition") {
    return wigner_condition_suite(samples, seed, has_tol ? tol_override : 1e-12);
  }
  if (name == "stokes_invariant") {
    return stokes_invariant(samples, seed, has_tol ? tol_override : 1e-11);
  }
  if (name == "bilinear_table") {
    return bilinear_table(has_tol ? tol_override : 1e-14);
  }
  return std::nullopt;
}

}  // namespace twobytwo::verify
