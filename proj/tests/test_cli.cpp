#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef TWOBYTWO_CLI_PATH
#error "TWOBYTWO_CLI_PATH must point at the built command line binary"
#endif

namespace {

namespace fs = std::filesystem;

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "twobytwo_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string(TWOBYTWO_CLI_PATH) + " " + args +
                          " >" + (work_dir() / "stdout.txt").string() +
                          " 2>" + (work_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sweeps are byte-identical across runs") {
  for (const std::string format : {"csv", "json"}) {
    const fs::path a = work_dir() / ("radius_a." + format);
    const fs::path b = work_dir() / ("radius_b." + format);
    CHECK(run("sweep --quantity poincare_radius --format " + format +
              " --output " + a.string()) == 0);
    CHECK(run("sweep --quantity poincare_radius --format " + format +
              " --output " + b.string()) == 0);
    const std::string first = slurp(a);
    CHECK(!first.empty());
    CHECK(first == slurp(b));
  }
}

TEST_CASE("poincare radius sweep is monotone non-increasing") {
  const fs::path out = work_dir() / "radius.csv";
  REQUIRE(run("sweep --quantity poincare_radius --output " + out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 92);  // header + 91 grid points
  CHECK(rows[0][2] == "radius");
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double r = std::stod(rows[i][2]);
    CHECK(r <= previous + 1e-15);
    previous = r;
  }
}

TEST_CASE("mass circle rows satisfy the energy identity") {
  const fs::path out = work_dir() / "circle.csv";
  REQUIRE(run("sweep --quantity mass_circle --output " + out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 182);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double energy = std::stod(rows[i][1]);
    const double momentum = std::stod(rows[i][2]);
    const double mass_sq = std::stod(rows[i][4]);
    CHECK(std::abs(mass_sq + momentum * momentum - energy * energy) < 1e-12);
  }
}

TEST_CASE("oscillator transition sweep is continuous across the critical point") {
  const fs::path out = work_dir() / "osc.csv";
  REQUIRE(run("sweep --quantity oscillator_transition --steps 401 --output " +
              out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 402);
  // Successive differences of every entry column stay bounded by a uniform
  // Lipschitz estimate; no jump at omega = mu = 1.
  const double h = 1.0 / 400.0;
  for (std::size_t col = 1; col <= 4; ++col) {
    for (std::size_t i = 2; i < rows.size(); ++i) {
      const double delta =
          std::stod(rows[i][col]) - std::stod(rows[i - 1][col]);
      CHECK(std::abs(delta) < 20.0 * h);
    }
  }
}

TEST_CASE("trace class sweep crosses all three classes") {
  const fs::path out = work_dir() / "classes.csv";
  REQUIRE(run("sweep --quantity trace_class_map --output " + out.string()) == 0);
  const auto rows = read_csv(out);
  bool elliptic = false, hyperbolic = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][2] == "elliptic") {
      elliptic = true;
      CHECK(rows[i][3] == "massive_like");
    }
    if (rows[i][2] == "hyperbolic") {
      hyperbolic = true;
      CHECK(rows[i][3] == "imaginary_like");
    }
  }
  CHECK(elliptic);
  CHECK(hyperbolic);
}

TEST_CASE("little group sweep reports tiny residuals") {
  const fs::path out = work_dir() / "lg.csv";
  REQUIRE(run("sweep --quantity little_group_check --output " + out.string()) == 0);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 102);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t col = 1; col <= 3; ++col) {
      CHECK(std::stod(rows[i][col]) < 1e-10);
    }
  }
}

TEST_CASE("invalid sweep specs exit with code 2") {
  const std::string out = (work_dir() / "never.csv").string();
  CHECK(run("sweep --quantity poincare_radius --steps 1 --output " + out) == 2);
  CHECK(run("sweep --quantity poincare_radius --range 2 1 --output " + out) == 2);
  CHECK(run("sweep --quantity no_such_thing --output " + out) == 2);
  CHECK(run("sweep --quantity poincare_radius") == 2);  // missing --output
}

TEST_CASE("unwritable output path exits with code 3") {
  CHECK(run("sweep --quantity poincare_radius --output "
            "/nonexistent_dir_for_twobytwo/out.csv") == 3);
}

TEST_CASE("verification suites pass and unknown names exit 2") {
  CHECK(run("verify lie_algebra") == 0);
  CHECK(run("verify homomorphism --samples 200") == 0);
  CHECK(run("verify decomposition_roundtrip --samples 200 --seed 7") == 0);
  CHECK(run("verify wigner_condition --samples 120") == 0);
  CHECK(run("verify stokes_invariant --samples 200") == 0);
  CHECK(run("verify bilinear_table") == 0);
  CHECK(run("verify no_such_suite") == 2);
}

}  // TEST_SUITE
