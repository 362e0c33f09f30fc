#include "dal/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dal {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, std::span<const double> steps,
                             const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  std::size_t evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return f(x);
  };
  if (n == 0) {
    const double v = eval(x0);
    return {std::move(x0), v, evaluations, true};
  }

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += steps.empty() ? options.initial_step : steps[i];
  }
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s(n + 1);
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      s[i] = std::move(simplex[order[i]]);
      v[i] = values[order[i]];
    }
    simplex = std::move(s);
    values = std::move(v);
  };

  auto affine = [&](const std::vector<double>& base, const std::vector<double>& toward, double t) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = base[i] + t * (toward[i] - base[i]);
    return out;
  };

  bool converged = false;
  while (true) {
    sort_simplex();
    double diameter = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        diameter = std::max(diameter, std::abs(simplex[k][i] - simplex[0][i]));
      }
    }
    if (values[n] - values[0] <= options.f_tolerance && diameter <= options.x_tolerance) {
      converged = true;
      break;
    }
    if (evaluations >= options.max_evaluations) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);
    }
    const auto& worst = simplex[n];
    auto reflected = affine(centroid, worst, -1.0);
    const double f_r = eval(reflected);
    if (f_r < values[0]) {
      auto expanded = affine(centroid, worst, -2.0);
      const double f_e = eval(expanded);
      if (f_e < f_r) {
        simplex[n] = std::move(expanded);
        values[n] = f_e;
      } else {
        simplex[n] = std::move(reflected);
        values[n] = f_r;
      }
      continue;
    }
    if (f_r < values[n - 1]) {
      simplex[n] = std::move(reflected);
      values[n] = f_r;
      continue;
    }
    // Outside contraction when the reflection beat the worst point, inside otherwise.
    const bool outside = f_r < values[n];
    auto contracted = outside ? affine(centroid, reflected, 0.5) : affine(centroid, worst, 0.5);
    const double f_c = eval(contracted);
    if (f_c < (outside ? f_r : values[n])) {
      simplex[n] = std::move(contracted);
      values[n] = f_c;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      simplex[k] = affine(simplex[0], simplex[k], 0.5);
      values[k] = eval(simplex[k]);
    }
  }
  return {simplex[0], values[0], evaluations, converged};
}

}  // namespace dal
