// twobytwo_cli.cpp - command line front end: deterministic parameter sweeps
// (CSV/JSON) and randomized verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 output IO failure.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "twobytwo/twobytwo.hpp"
#include "twobytwo/verify.hpp"

namespace {

using twobytwo::Mat2;
using Cell = std::variant<double, std::string>;

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, double>> params;
};

struct SweepOptions {
  std::string quantity;
  std::string output;
  std::string format = "csv";
  std::vector<double> range;  // empty = per-quantity default
  int steps = 0;              // 0 = per-quantity default
  double mu = 1.0;
  double time = 1.0;
  double p0 = 1.0;
  double amplitude = 1.0;
  double chi = 0.8;
  double gauge_gamma = 1.0;
};

// 17 significant digits: doubles round-trip exactly, so identical specs give
// byte-identical files.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trace_class_name(twobytwo::TraceClass c) {
  switch (c) {
    case twobytwo::TraceClass::Elliptic: return "elliptic";
    case twobytwo::TraceClass::Parabolic: return "parabolic";
    default: return "hyperbolic";
  }
}

std::string wigner_kind_name(twobytwo::WignerKind k) {
  switch (k) {
    case twobytwo::WignerKind::MassiveLike: return "massive_like";
    case twobytwo::WignerKind::MasslessLike: return "massless_like";
    default: return "imaginary_like";
  }
}

std::vector<double> grid(double start, double stop, int steps) {
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double h = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = start + i * h;
  out.back() = stop;
  return out;
}

SweepTable sweep_oscillator_transition(const SweepOptions& o, double start,
                                       double stop, int steps) {
  SweepTable t;
  t.columns = {"omega", "m11", "m12", "m21", "m22", "trace"};
  t.params = {{"mu", o.mu}, {"time", o.time}};
  for (double omega : grid(start, stop, steps)) {
    const Mat2 p =
        twobytwo::propagator(twobytwo::OscillatorSystem(omega, o.mu), o.time);
    t.rows.push_back({omega, p.a.real(), p.b.real(), p.c.real(), p.d.real(),
                      p.trace().real()});
  }
  return t;
}

SweepTable sweep_poincare_radius(const SweepOptions& o, double start,
                                 double stop, int steps) {
  SweepTable t;
  t.columns = {"xi", "s0", "radius", "det"};
  t.params = {{"amplitude", o.amplitude}};
  for (double xi : grid(start, stop, steps)) {
    const auto c = twobytwo::coherency_from_jones(
        twobytwo::JonesVector{o.amplitude, 0.0}, xi);
    const auto s = twobytwo::stokes(c);
    t.rows.push_back({xi, s.s0, twobytwo::poincare_radius(c), c.det()});
  }
  return t;
}

SweepTable sweep_mass_circle(const SweepOptions& o, double start, double stop,
                             int steps) {
  SweepTable t;
  t.columns = {"xi", "energy", "momentum", "mass", "mass_sq"};
  t.params = {{"p0", o.p0}};
  for (double xi : grid(start, stop, steps)) {
    const auto p = twobytwo::mass_interpolate(o.p0, xi);
    t.rows.push_back({xi, p.p0, p.pz, o.p0 * std::sin(xi), p.mass_sq()});
  }
  return t;
}

SweepTable sweep_trace_class_map(const SweepOptions& o, double start,
                                 double stop, int steps) {
  SweepTable t;
  t.columns = {"alpha", "trace", "trace_class", "wigner_kind"};
  t.params = {{"chi", o.chi}};
  for (double alpha : grid(start, stop, steps)) {
    const Mat2 m = twobytwo::equidiagonal_core(alpha, o.chi);
    const auto kind = twobytwo::wigner_decompose(m).kind;
    t.rows.push_back({alpha, m.trace().real(),
                      trace_class_name(twobytwo::classify(m)),
                      wigner_kind_name(kind)});
  }
  return t;
}

SweepTable sweep_little_group_check(const SweepOptions& o, double start,
                                    double stop, int steps) {
  using namespace twobytwo;
  SweepTable t;
  t.columns = {"eta", "residual_massive", "residual_imaginary",
               "residual_massless_gauge"};
  t.params = {{"gauge_gamma", o.gauge_gamma}};
  constexpr double theta = 0.6, lambda = 0.8;
  for (double eta : grid(start, stop, steps)) {
    const auto res = [&](ParticleClass cls, const Mat2& w) {
      return wigner_condition(w, boosted_momentum(cls, eta)).residual;
    };
    t.rows.push_back(
        {eta,
         res(ParticleClass::Massive,
             boosted_little_group(ParticleClass::Massive, theta, eta)),
         res(ParticleClass::ImaginaryMass,
             boosted_little_group(ParticleClass::ImaginaryMass, lambda, eta)),
         res(ParticleClass::Massless, gauge_element({o.gauge_gamma, 0.0}))});
  }
  return t;
}

int write_table(const SweepTable& t, const SweepOptions& o) {
  std::ofstream out(o.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << o.output << "'\n";
    return 3;
  }
  if (o.format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << (i ? "," : "") << t.columns[i];
    }
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ",";
        if (const double* d = std::get_if<double>(&row[i])) {
          out << fmt(*d);
        } else {
          out << std::get<std::string>(row[i]);
        }
      }
      out << "\n";
    }
  } else {
    nlohmann::ordered_json doc;
    doc["quantity"] = o.quantity;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : t.params) params[k] = v;
    doc["params"] = params;
    doc["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      auto jrow = nlohmann::ordered_json::array();
      for (const auto& cell : row) {
        if (const double* d = std::get_if<double>(&cell)) {
          jrow.push_back(*d);
        } else {
          jrow.push_back(std::get<std::string>(cell));
        }
      }
      rows.push_back(jrow);
    }
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
  }
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing '" << o.output << "'\n";
    return 3;
  }
  return 0;
}

int run_sweep(const SweepOptions& o) {
  struct Defaults {
    double start, stop;
    int steps;
  };
  const double pi = std::numbers::pi;
  Defaults d;
  if (o.quantity == "oscillator_transition") d = {0.5, 1.5, 101};
  else if (o.quantity == "poincare_radius") d = {0.0, 0.5 * pi, 91};
  else if (o.quantity == "mass_circle") d = {0.0, pi, 181};
  else if (o.quantity == "trace_class_map") d = {-pi, pi, 181};
  else if (o.quantity == "little_group_check") d = {-5.0, 5.0, 101};
  else {
    std::cerr << "error: unknown sweep quantity '" << o.quantity << "'\n";
    return 2;
  }
  const double start = o.range.empty() ? d.start : o.range[0];
  const double stop = o.range.empty() ? d.stop : o.range[1];
  const int steps = (o.steps == 0) ? d.steps : o.steps;
  if (steps < 2) {
    std::cerr << "error: --steps must be >= 2\n";
    return 2;
  }
  if (!(start < stop)) {
    std::cerr << "error: --range start must be < stop\n";
    return 2;
  }

  SweepTable t;
  try {
    if (o.quantity == "oscillator_transition") {
      t = sweep_oscillator_transition(o, start, stop, steps);
    } else if (o.quantity == "poincare_radius") {
      t = sweep_poincare_radius(o, start, stop, steps);
    } else if (o.quantity == "mass_circle") {
      t = sweep_mass_circle(o, start, stop, steps);
    } else if (o.quantity == "trace_class_map") {
      t = sweep_trace_class_map(o, start, stop, steps);
    } else {
      t = sweep_little_group_check(o, start, stop, steps);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: invalid sweep parameters: " << e.what() << "\n";
    return 2;
  }
  return write_table(t, o);
}

int run_verify(const std::string& suite, int samples, std::uint64_t seed,
               double tol_override) {
  const auto result = twobytwo::verify::run_suite(suite, samples, seed, tol_override);
  if (!result) {
    std::cerr << "error: unknown suite '" << suite << "'; available:";
    for (const auto& n : twobytwo::verify::suite_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  std::printf("%s: %d/%d passed (max residual %.3e)\n", result->name.c_str(),
              result->passed, result->passed + result->failed,
              result->max_residual);
  return result->ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "twobytwo: damped oscillators, Sp(2)/SL(2,c) decompositions, Wigner "
      "little groups, and the Poincare sphere in 2x2 matrices"};
  app.require_subcommand(1);

  SweepOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "emit a deterministic parameter sweep as CSV or JSON");
  sweep->add_option("--quantity", sweep_opts.quantity,
                    "one of: oscillator_transition, poincare_radius, "
                    "mass_circle, trace_class_map, little_group_check")
      ->required();
  sweep->add_option("--output", sweep_opts.output, "output file path")->required();
  sweep->add_option("--format", sweep_opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--range", sweep_opts.range, "sweep interval: start stop")
      ->expected(2);
  sweep->add_option("--steps", sweep_opts.steps, "number of grid points (>= 2)");
  sweep->add_option("--mu", sweep_opts.mu, "oscillator damping (oscillator_transition)");
  sweep->add_option("--time", sweep_opts.time, "evolution time (oscillator_transition)");
  sweep->add_option("--p0", sweep_opts.p0, "energy (mass_circle)");
  sweep->add_option("--amplitude", sweep_opts.amplitude, "amplitude (poincare_radius)");
  sweep->add_option("--chi", sweep_opts.chi, "squeeze parameter (trace_class_map)");
  sweep->add_option("--gauge-gamma", sweep_opts.gauge_gamma,
                    "gauge parameter (little_group_check)");

  std::string suite;
  int samples = 1000;
  std::uint64_t seed = 0;
  double tol_override = 0.0;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a randomized invariant suite and report pass/fail counts");
  verify->add_option("suite", suite,
                     "one of: lie_algebra, homomorphism, "
                     "decomposition_roundtrip, wigner_condition, "
                     "stokes_invariant, bilinear_table")
      ->required();
  verify->add_option("--samples", samples, "random draws (default 1000)");
  verify->add_option("--seed", seed, "RNG seed (default 0)");
  verify->add_option("--tol", tol_override, "override the suite tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*sweep) return run_sweep(sweep_opts);
  return run_verify(suite, samples, seed, tol_override);
}
