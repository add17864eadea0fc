// acceptance_main.cpp - integration acceptance suite. Runs each criterion at
// its pinned tolerance and prints one pass/fail line per criterion; the exit
// code is the number of failed criteria.
//
// Oracles here are kept independent of the library's solution paths: RK4
// integration, repeated multiplication, finite differences, direct matrix
// products, and the child command line binary for the determinism check.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support.hpp"
#include "twobytwo/twobytwo.hpp"

using namespace twobytwo;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int index, bool pass, const std::string& what,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index,
              what.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string residual_str(double r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max residual %.3e", r);
  return buf;
}

using Rng = std::mt19937_64;

Mat2 random_group_element(Rng& rng, bool real_only) {
  std::uniform_int_distribution<int> kind(0, real_only ? 2 : 3);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> rapidity(-0.8, 0.8);
  Mat2 m = Mat2::identity();
  const int factors = real_only ? 5 : 6;
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

// ---------------------------------------------------------------- 1
void criterion_lie_algebra() {
  const cplx i{0.0, 1.0};
  double worst2 = 0.0, worst4 = 0.0;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      Mat2 jj2 = Mat2::zero(), jk2 = Mat2::zero(), kk2 = Mat2::zero();
      Mat4c jj4, jk4, kk4;
      for (int k = 1; k <= 3; ++k) {
        const cplx w = i * levi_civita(a, b, k);
        jj2 = jj2 + w * rotation_generator(k).two_by_two;
        jj4 = jj4 + w * rotation_generator(k).four_by_four;
        jk2 = jk2 + w * boost_generator(k).two_by_two;
        jk4 = jk4 + w * boost_generator(k).four_by_four;
        kk2 = kk2 + (-w) * rotation_generator(k).two_by_two;
        kk4 = kk4 + (-w) * rotation_generator(k).four_by_four;
      }
      const auto& Ja = rotation_generator(a);
      const auto& Jb = rotation_generator(b);
      const auto& Ka = boost_generator(a);
      const auto& Kb = boost_generator(b);
      worst2 = std::max(worst2, max_abs_diff(commutator(Ja.two_by_two, Jb.two_by_two), jj2));
      worst2 = std::max(worst2, max_abs_diff(commutator(Ja.two_by_two, Kb.two_by_two), jk2));
      worst2 = std::max(worst2, max_abs_diff(commutator(Ka.two_by_two, Kb.two_by_two), kk2));
      worst4 = std::max(worst4, max_abs_diff(commutator(Ja.four_by_four, Jb.four_by_four), jj4));
      worst4 = std::max(worst4, max_abs_diff(commutator(Ja.four_by_four, Kb.four_by_four), jk4));
      worst4 = std::max(worst4, max_abs_diff(commutator(Ka.four_by_four, Kb.four_by_four), kk4));
    }
  }
  // E(2)-like set in both representations.
  worst2 = std::max(worst2, max_abs_diff(commutator(n1_2x2(), n2_2x2()), Mat2::zero()));
  worst2 = std::max(worst2, max_abs_diff(commutator(n1_2x2(), j3_2x2()), -i * n2_2x2()));
  worst2 = std::max(worst2, max_abs_diff(commutator(n2_2x2(), j3_2x2()), i * n1_2x2()));
  worst4 = std::max(worst4, max_abs_diff(commutator(n1_4x4(), n2_4x4()), Mat4c{}));
  worst4 = std::max(worst4, max_abs_diff(commutator(n1_4x4(), j3_4x4()), -i * n2_4x4()));
  worst4 = std::max(worst4, max_abs_diff(commutator(n2_4x4(), j3_4x4()), i * n1_4x4()));

  report(1, worst2 <= 1e-14 && worst4 <= 1e-12,
         "Lie algebra commutators in 2x2 and 4x4 representations",
         "2x2 " + residual_str(worst2) + ", 4x4 " + residual_str(worst4));
}

// ---------------------------------------------------------------- 2
void criterion_homomorphism() {
  Rng rng(2024);
  std::uniform_real_distribution<double> comp(-2.0, 2.0);
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const Mat2 g1 = random_group_element(rng, false);
    const Mat2 g2 = random_group_element(rng, false);
    worst = std::max(worst, max_abs_diff(to_four_by_four(g1 * g2),
                                         to_four_by_four(g1) * to_four_by_four(g2)));
    const FourVector v{comp(rng), comp(rng), comp(rng), comp(rng)};
    worst = std::max(worst, max_abs_diff(transform(g1, v),
                                         apply(to_four_by_four(g1), v)));
  }
  report(2, worst <= 1e-10,
         "4x4 map is a homomorphism and commutes with the Hermitian transform",
         residual_str(worst) + " over 1000 draws");
}

// ---------------------------------------------------------------- 3
void criterion_oscillator() {
  // Closed-form propagator against RK4 on a 10x10 grid (relative to the
  // matrix scale, since damping-mode entries grow exponentially).
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const double omega = 0.2 * i;
      const double mu = 0.2 * j;
      const OscillatorSystem sys(omega, mu);
      const auto a = testsupport::oscillator_system_matrix(omega, mu);
      for (double t : {0.5, 1.0, 2.0, 3.5, 5.0}) {
        const auto oracle = testsupport::rk4_fundamental(a, t, 1e-4);
        const Mat2 p = propagator(sys, t);
        const double entries[2][2] = {{p.a.real(), p.b.real()},
                                      {p.c.real(), p.d.real()}};
        double scale = 1.0, diff = 0.0;
        for (int r = 0; r < 2; ++r) {
          for (int c = 0; c < 2; ++c) {
            diff = std::max(diff, std::abs(entries[r][c] - oracle[r][c]));
            scale = std::max(scale, std::abs(oracle[r][c]));
          }
        }
        worst = std::max(worst, diff / scale);
      }
    }
  }
  const bool rk4_ok = worst <= 1e-8;

  // Tangential continuity at omega = mu: values and first omega-derivatives
  // are continuous; along the rate variable the diagonal's one-sided second
  // derivatives are -1 (cos side) and +1 (cosh side), a jump of 2.
  const double mu = 1.0, t = 1.0;
  const auto entry00 = [&](double omega) {
    return propagator(OscillatorSystem(omega, mu), t).a.real();
  };
  const auto entry10 = [&](double omega) {
    return propagator(OscillatorSystem(omega, mu), t).c.real();
  };
  const double h = 1e-5;
  bool continuity_ok = true;
  const std::function<double(double)> entries_fn[2] = {entry00, entry10};
  for (const auto& entry : entries_fn) {
    const double mid = entry(mu);
    continuity_ok = continuity_ok && std::abs(entry(mu + 1e-7) - mid) < 1e-5 &&
                    std::abs(entry(mu - 1e-7) - mid) < 1e-5;
    const double right = (entry(mu + h) - mid) / h;
    const double left = (mid - entry(mu - h)) / h;
    continuity_ok = continuity_ok && std::abs(right - left) < 1e-3;
  }
  const double hb = 1e-3;
  const auto branch = [&](double x) {
    const double r2 = (x / t) * (x / t);
    const double omega =
        (x >= 0.0) ? std::sqrt(mu * mu + r2) : std::sqrt(mu * mu - r2);
    return entry00(omega);
  };
  const double d2_cos = (branch(2 * hb) - 2 * branch(hb) + branch(0.0)) / (hb * hb);
  const double d2_cosh = (branch(-2 * hb) - 2 * branch(-hb) + branch(0.0)) / (hb * hb);
  const bool jump_ok = std::abs(d2_cos + 1.0) < 1e-3 &&
                       std::abs(d2_cosh - 1.0) < 1e-3 &&
                       std::abs((d2_cosh - d2_cos) - 2.0) < 2e-3;

  // The sin/sinh pair meets with matching value and first derivative too.
  const auto branch_sin = [&](double x) {
    const double r2 = (x / t) * (x / t);
    if (x >= 0.0) {
      const double omega = std::sqrt(mu * mu + r2);
      return entry10(omega) * std::sqrt((omega - mu) / (omega + mu));
    }
    const double omega = std::sqrt(mu * mu - r2);
    return -entry10(omega) * std::sqrt((mu - omega) / (mu + omega));
  };
  const double slope_right = (branch_sin(2 * hb) - branch_sin(hb)) / hb;
  const double slope_left = (branch_sin(-hb) - branch_sin(-2 * hb)) / hb;
  const bool sin_ok = std::abs(slope_right - slope_left) < 1e-2 &&
                      std::abs(branch_sin(hb) - branch_sin(-hb)) < 1e-2;

  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "RK4 max rel diff %.3e; one-sided d2: cos side %+.4f, cosh side %+.4f",
                worst, d2_cos, d2_cosh);
  report(3, rk4_ok && continuity_ok && jump_ok && sin_ok,
         "propagator matches RK4 and is tangentially continuous at omega = mu",
         detail);
}

// ---------------------------------------------------------------- 4
void criterion_decompositions() {
  Rng rng(77);
  double worst_rt = 0.0;
  bool kinds_ok = true;
  for (int s = 0; s < 1000; ++s) {
    const Mat2 m = random_group_element(rng, true);
    const BargmannDecomposition bd = bargmann_decompose(m);
    const double scale = std::max(1.0, m.max_abs());
    worst_rt = std::max(worst_rt, max_abs_diff(bargmann_reconstruct(bd), m) / scale);

    Mat2 core = rotation_y(-bd.delta) * m * rotation_y(bd.delta);
    core = Mat2{core.a.real(), core.b.real(), core.c.real(), core.d.real()};
    const WignerParams wp = wigner_decompose(core);
    const Mat2 rebuilt =
        rotation_y(bd.delta) * wigner_reconstruct(wp) * rotation_y(-bd.delta);
    worst_rt = std::max(worst_rt, max_abs_diff(rebuilt, m) / scale);

    const TraceClass tc = classify(m);
    kinds_ok = kinds_ok &&
               ((tc == TraceClass::Elliptic && wp.kind == WignerKind::MassiveLike) ||
                (tc == TraceClass::Parabolic && wp.kind == WignerKind::MasslessLike) ||
                (tc == TraceClass::Hyperbolic && wp.kind == WignerKind::ImaginaryLike));
  }

  // Power closed form against repeated multiplication up to n = 20.
  std::uniform_real_distribution<double> theta_dist(0.05, 3.0);
  std::uniform_real_distribution<double> lambda_dist(0.05, 0.4);
  std::uniform_real_distribution<double> eta_dist(-1.0, 1.0);
  double worst_pow = 0.0;
  for (int s = 0; s < 50; ++s) {
    const WignerParams cases[3] = {
        {WignerKind::MassiveLike, theta_dist(rng), eta_dist(rng), false, false},
        {WignerKind::ImaginaryLike, lambda_dist(rng), eta_dist(rng), false, false},
        {WignerKind::MasslessLike, eta_dist(rng), 0.0, false, false},
    };
    for (const WignerParams& p : cases) {
      const Mat2 m = wigner_reconstruct(p);
      Mat2 acc = Mat2::identity();
      for (int n = 0; n <= 20; ++n) {
        worst_pow = std::max(worst_pow, max_abs_diff(wigner_power(p, n), acc) /
                                            std::max(1.0, acc.max_abs()));
        acc = acc * m;
      }
    }
  }

  report(4, worst_rt <= 1e-10 && worst_pow <= 1e-10 && kinds_ok,
         "Bargmann/Wigner round trips, power closed form, class agreement",
         "round trip " + residual_str(worst_rt) + ", powers " + residual_str(worst_pow) +
             (kinds_ok ? ", kinds 100%" : ", KIND MISMATCH"));
}

// ---------------------------------------------------------------- 5
void criterion_little_groups() {
  Rng rng(5150);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> phi_dist(-3.0, 3.0);
  constexpr ParticleClass classes[3] = {ParticleClass::Massive,
                                        ParticleClass::Massless,
                                        ParticleClass::ImaginaryMass};
  double worst_canonical = 0.0;
  for (const ParticleClass cls : classes) {
    for (int s = 0; s < 100; ++s) {
      const Mat2 w = little_group_element(cls, angle(rng), phi_dist(rng));
      worst_canonical = std::max(
          worst_canonical, wigner_condition(w, canonical_momentum(cls)).residual);
    }
  }
  const bool canonical_ok = worst_canonical <= 1e-12;

  double worst_boosted = 0.0;
  for (double eta = -5.0; eta <= 5.0 + 1e-9; eta += 0.25) {
    for (const ParticleClass cls : {ParticleClass::Massive, ParticleClass::ImaginaryMass}) {
      const Mat2 w = boosted_little_group(cls, 0.9, eta);
      const Mat2 p = boosted_momentum(cls, eta);
      worst_boosted = std::max(
          worst_boosted, wigner_condition(w, p).residual / std::max(1.0, p.max_abs()));
    }
  }
  const bool boosted_ok = worst_boosted <= 1e-12;

  // The 4x4 gauge element fixes the light-cone vector exactly (moderate
  // gamma keeps every cancellation in the product exact).
  bool gauge_exact = true;
  for (double gamma = 0.0; gamma <= 1.4 + 1e-9; gamma += 0.05) {
    for (double phi = 0.0; phi <= 3.1; phi += 0.31) {
      const auto image = gauge_element_4x4({gamma, phi}) *
                         std::array<double, 4>{1.0, 1.0, 0.0, 0.0};
      gauge_exact = gauge_exact && image[0] == 1.0 && image[1] == 1.0 &&
                    image[2] == 0.0 && image[3] == 0.0;
    }
  }

  // Gauge violation scales as m^2: log-log slope of the violation norm over
  // m/2p in [1e-4, 1e-1].
  std::vector<double> log_m, log_v;
  for (int k = 0; k <= 12; ++k) {
    const double ratio = std::pow(10.0, -4.0 + 0.25 * k);  // m / 2p
    const double m = 2.0 * ratio;                          // p = 1
    const auto nu = gauge_violation(1.3, m, 1.0, NeutrinoKind::Neutrino);
    const auto anti = gauge_violation(1.3, m, 1.0, NeutrinoKind::AntiNeutrino);
    log_m.push_back(std::log(m));
    log_v.push_back(std::log(nu.violation_norm));
    (void)anti;
  }
  const double slope = testsupport::fit_slope(log_m, log_v);
  const bool slope_ok = std::abs(slope - 2.0) <= 0.01;

  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "canonical %.3e, boosted %.3e, gauge fix %s, slope %.4f",
                worst_canonical, worst_boosted, gauge_exact ? "exact" : "INEXACT",
                slope);
  report(5, canonical_ok && boosted_ok && gauge_exact && slope_ok,
         "Wigner condition, boosted invariance, gauge fix, m^2 violation law",
         detail);
}

// ---------------------------------------------------------------- 6
void criterion_poincare() {
  Rng rng(606);
  std::uniform_real_distribution<double> amp(0.5, 2.0);
  std::uniform_real_distribution<double> xi_dist(0.05, 1.5);
  std::uniform_real_distribution<double> phase(-3.0, 3.0);
  double worst_det = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const CoherencyMatrix c =
        coherency_from_jones({amp(rng), phase(rng)}, xi_dist(rng));
    const Mat2 g = random_group_element(rng, false);
    const CoherencyMatrix moved = transform_coherency(g, c);
    worst_det = std::max(worst_det, std::abs(moved.det() - c.det()) / c.det());
  }
  const bool det_ok = worst_det <= 1e-11;

  double worst_radius = 0.0;
  const double a = 1.2, a4 = std::pow(a, 4);
  for (int k = 0; k <= 90; ++k) {
    const double xi = 0.5 * pi * k / 90.0;
    const CoherencyMatrix c = coherency_from_jones({a, 0.4}, xi);
    const StokesVector s = stokes(c);
    const double r = poincare_radius(c);
    worst_radius = std::max(
        worst_radius, std::abs(s.s0 * s.s0 - r * r - a4 * std::pow(std::sin(xi), 2)));
  }
  const bool radius_ok = worst_radius <= 1e-12;

  double worst_circle = 0.0;
  for (int k = 0; k <= 180; ++k) {
    const double xi = pi * k / 180.0;
    const FourMomentum p = mass_interpolate(1.0, xi);
    worst_circle =
        std::max(worst_circle, std::abs(p.mass_sq() + p.pz * p.pz - 1.0));
  }
  const bool circle_ok = worst_circle <= 1e-12;

  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "det invariance %.3e, radius identity %.3e, mass circle %.3e",
                worst_det, worst_radius, worst_circle);
  report(6, det_ok && radius_ok && circle_ok,
         "coherency determinant, radius identity, mass-circle identity", detail);
}

// ---------------------------------------------------------------- 7
void criterion_bilinears() {
  // Weights from first principles against the frozen exponent table.
  const int expected[16][2] = {
      {1, -1}, {0, 0},  {0, -1},  {1, 0},
      {0, 0},  {-1, 1}, {-1, 0},  {0, 1},
      {0, -1}, {-1, 0}, {-1, -1}, {0, 0},
      {1, 0},  {0, 1},  {0, 0},   {1, 1},
  };
  const auto basis = basis_bilinears();
  double worst = 0.0;
  for (double eta : {0.0, 0.9, -1.3}) {
    for (double phi : {0.0, 0.7, -2.1}) {
      for (int i = 0; i < 16; ++i) {
        const cplx got = bilinear_weight(basis[i], eta, phi);
        const cplx want = std::exp(cplx{expected[i][0] * eta, expected[i][1] * phi});
        worst = std::max(worst, std::abs(got - want) / std::abs(want));
      }
    }
  }
  const bool table_ok = worst <= 1e-14;

  const ScalarPair sp = scalars();
  const bool parity_ok =
      max_abs_diff(dot_conjugate(sp.s_plus), sp.s_plus) == 0.0 &&
      max_abs_diff(dot_conjugate(sp.s_minus), cplx{-1.0} * sp.s_minus) == 0.0;
  const bool invariant_ok =
      max_abs_diff(q_transform(sp.s_plus, 1.7, 0.9), sp.s_plus) < 1e-15 &&
      max_abs_diff(q_transform(sp.s_minus, 1.7, 0.9), sp.s_minus) < 1e-15;

  bool em_ok = true;
  const cplx samples[] = {cplx{1.0, 0.0}, cplx{0.3, 0.8}, cplx{-0.6, 0.25}};
  for (const cplx& uval : samples) {
    for (const cplx& vval : samples) {
      const EmFieldLimit f = massless_limit_tensor(uval, vval);
      em_ok = em_ok && f.ex == f.by && f.ey == -f.bx &&
              std::abs(f.e_dot_b()) == 0.0 && std::abs(f.e_sq_minus_b_sq()) == 0.0;
    }
  }

  report(7, table_ok && parity_ok && invariant_ok && em_ok,
         "sixteen bilinear weights, scalar parity, electromagnetic limit",
         "weight " + residual_str(worst) +
             (parity_ok ? ", parity exact" : ", PARITY BROKEN") +
             (em_ok ? ", E/B identities exact" : ", E/B BROKEN"));
}

// ---------------------------------------------------------------- 8
void criterion_cli_determinism() {
#ifndef TWOBYTWO_CLI_PATH
  report(8, false, "command line determinism", "binary path not configured");
#else
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "twobytwo_acceptance";
  fs::create_directories(dir);
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  bool ok = true;
  std::string detail = "byte-identical reruns:";
  for (const std::string spec :
       {std::string("sweep --quantity mass_circle --format csv"),
        std::string("sweep --quantity poincare_radius --format json"),
        std::string("sweep --quantity trace_class_map --format csv")}) {
    const fs::path a = dir / "run_a.out";
    const fs::path b = dir / "run_b.out";
    for (const fs::path& target : {a, b}) {
      const std::string cmd = std::string(TWOBYTWO_CLI_PATH) + " " + spec +
                              " --output " + target.string() + " >/dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      ok = ok && WEXITSTATUS(status) == 0;
    }
    const std::string first = slurp(a);
    ok = ok && !first.empty() && first == slurp(b);
  }
  report(8, ok, "identical sweep specs produce byte-identical outputs", detail);
#endif
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_lie_algebra();
  criterion_homomorphism();
  criterion_oscillator();
  criterion_decompositions();
  criterion_little_groups();
  criterion_poincare();
  criterion_bilinears();
  criterion_cli_determinism();
  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures;
}
