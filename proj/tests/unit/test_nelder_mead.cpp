#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dal/nelder_mead.hpp"

using namespace dal;

TEST_CASE("quadratic bowl") {
  auto f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 10.0 * (x[1] + 2.0) * (x[1] + 2.0);
  };
  const auto r = nelder_mead(f, {0.0, 0.0});
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-5));
  CHECK(r.value <= 1e-10);
}

TEST_CASE("Rosenbrock valley") {
  auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opt;
  opt.max_evaluations = 5000;
  opt.x_tolerance = 1e-9;
  opt.f_tolerance = 1e-14;
  const auto r = nelder_mead(f, {-1.2, 1.0}, {}, opt);
  CHECK(std::abs(r.x[0] - 1.0) <= 1e-4);
  CHECK(std::abs(r.x[1] - 1.0) <= 1e-4);
}

TEST_CASE("one-dimensional and budget-limited runs") {
  auto f = [](std::span<const double> x) { return std::cos(x[0]); };
  const auto r = nelder_mead(f, {2.0});
  CHECK(r.x[0] == doctest::Approx(M_PI).epsilon(1e-4));

  NelderMeadOptions opt;
  opt.max_evaluations = 10;
  auto g = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2]; };
  const auto limited = nelder_mead(g, {5.0, 5.0, 5.0}, {}, opt);
  CHECK_FALSE(limited.converged);
  CHECK(limited.evaluations <= 10);
  CHECK(limited.value <= 75.0);
}

TEST_CASE("custom initial steps orient the simplex") {
  auto f = [](std::span<const double> x) { return std::abs(x[0] - 0.3) + std::abs(x[1] - 0.7); };
  const std::vector<double> steps = {-0.05, 0.2};
  const auto r = nelder_mead(f, {0.5, 0.5}, steps);
  CHECK(r.value <= 1e-6);
}
