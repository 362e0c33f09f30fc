#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dal {

struct NelderMeadOptions {
  double initial_step = 0.1;
  double f_tolerance = 1e-10;  // spread of simplex values
  double x_tolerance = 1e-7;   // simplex diameter (infinity norm)
  std::size_t max_evaluations = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  std::size_t evaluations;
  bool converged;
};

/// Unconstrained Nelder-Mead minimization with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). `steps` gives
/// the per-coordinate offset of the initial simplex vertices; an empty span
/// uses options.initial_step for every coordinate.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, std::span<const double> steps = {},
                             const NelderMeadOptions& options = {});

}  // namespace dal
