#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "dal/entanglement.hpp"
#include "dal/error.hpp"
#include "dal/model.hpp"
#include "dal/steady.hpp"
#include "support/test_support.hpp"

using namespace dal;
using dal::testing::max_abs_diff;

namespace {

ModelParams params(double omega_c, double j, double j_c, double gamma, double gamma_c) {
  ModelParams p;
  p.omega_c = omega_c;
  p.j = j;
  p.j_c = j_c;
  p.gamma = gamma;
  p.gamma_c = gamma_c;
  return p;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidState;
}

const ModelParams kOptimal = params(-0.74, -0.31, 0.01, 1e-3, 0.03);
const ModelParams kNegativeJ = params(0.55, -0.62, 0.01, 1e-3, 1e-3);
const ModelParams kPeak = params(0.55, -0.62, 0.01, 1e-3, 0.04);

}  // namespace

TEST_CASE("pure decay relaxes to |ggg>") {
  const auto r = steady_state(params(0.0, 0.0, 0.0, 1e-3, 1e-3));
  const auto ggg = DensityMatrix::pure(basis_ket(1, 1, 1));
  CHECK(max_abs_diff(r.rho.matrix(), ggg.matrix()) <= 1e-10);
  CHECK(r.residual <= 1e-10);
  CHECK(steady_negativity(params(0.3, 0.0, 0.0, 1e-3, 1e-3)) == 0.0);
}

TEST_CASE("reference operating points") {
  CHECK(std::abs(steady_negativity(kOptimal) - 0.413) <= 0.005);
  CHECK(std::abs(steady_negativity(kNegativeJ) - 0.180) <= 0.005);
  CHECK(std::abs(steady_negativity(kPeak) - 0.203) <= 0.005);
}

TEST_CASE("ancilla-free limit matches the closed form") {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> jd(-2.0, 2.0);
  std::uniform_real_distribution<double> gd(1e-3, 0.1);
  std::uniform_real_distribution<double> wd(-1.0, 1.0);
  std::uniform_real_distribution<double> gcd(1e-3, 0.5);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double j = jd(rng);
    const double g = gd(rng);
    const auto p = params(wd(rng), j, 0.0, g, gcd(rng));
    worst = std::max(worst, std::abs(steady_negativity(p) - two_qubit_analytic(j, g)));
  }
  CHECK(worst <= 1e-6);
  for (double j : {0.62, -0.62}) {
    CHECK(std::abs(steady_negativity(params(0.37, j, 0.0, 1e-3, 0.2)) - 0.155) <= 0.001);
  }
}

TEST_CASE("the sign of J_C does not matter") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    auto p = testing::random_params(rng);
    auto q = p;
    q.j_c = -p.j_c;
    CHECK(std::abs(steady_negativity(p) - steady_negativity(q)) <= 1e-9);
  }
}

TEST_CASE("agrees with the trace-replacement linear solve") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const auto p = testing::random_params(rng);
    const auto r = steady_state(p);
    const auto oracle = testing::trace_replacement_steady_state(build_liouvillian(p).matrix());
    CHECK(max_abs_diff(r.rho.matrix(), oracle) <= 1e-8);
    CHECK(r.residual <= 1e-9);
    CHECK(r.min_eigenvalue >= -1e-9);
    CHECK(r.nullspace_gap > 1e-6);
    CHECK(apply_liouvillian(p, r.rho).frobenius_norm() <= 1e-9);
  }
}

TEST_CASE("error paths") {
  CHECK(kind_of([] { steady_state(params(0.0, 0.5, 0.1, 0.0, 1e-3)); }) ==
        ErrorKind::InvalidParams);
  CHECK(kind_of([] { steady_state(params(0.0, 0.5, 0.1, 1e-3, 0.0)); }) ==
        ErrorKind::InvalidParams);
  SteadyTolerances strict;
  strict.nullspace_gap = 1.0;
  CHECK(kind_of([&] { steady_state(kOptimal, strict); }) == ErrorKind::NonUniqueSteadyState);
  SteadyTolerances tight;
  tight.residual = 0.0;
  tight.nullspace_gap = 0.0;
  // A zero residual budget can only pass when the solve is exact.
  try {
    steady_state(kOptimal, tight);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConvergenceFailure);
  }
}
