#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dal/model.hpp"
#include "dal/nelder_mead.hpp"

namespace dal {

struct Axis {
  double min;
  double max;
  std::size_t points;

  /// Evenly spaced values, endpoints included. Throws InvalidParams when
  /// points < 2 or max < min.
  std::vector<double> values() const;
};

struct PointFailure {
  std::size_t index;
  std::string message;
};

struct SweepGrid {
  std::vector<double> omega_c_axis;
  std::vector<double> j_c_axis;
  ModelParams fixed;
  /// Row-major: values[i * j_c_axis.size() + k] is (omega_c_axis[i], j_c_axis[k]).
  /// Points whose solve failed hold NaN and appear in `failures`.
  std::vector<double> values;
  std::vector<PointFailure> failures;

  double at(std::size_t i, std::size_t k) const { return values[i * j_c_axis.size() + k]; }
};

/// Steady-state negativity over an (omega_c, j_c) grid; other fields come from
/// the template.
SweepGrid sweep_2d(const ModelParams& tmpl, const Axis& omega_c, const Axis& j_c,
                   std::size_t jobs = 1);

struct ScanPoint {
  double gamma_c;
  double negativity;  // NaN on failure
};

struct ScanCurve {
  std::vector<ScanPoint> points;
  std::vector<PointFailure> failures;
};

ScanCurve scan_gamma_c(const ModelParams& tmpl, std::span<const double> gamma_c_points,
                       std::size_t jobs = 1);

/// Bisection in gamma_c for N(gamma_c) = reference, given
/// N(lo) > reference > N(hi). Stops once the bracket is at most `tolerance`
/// wide and returns its midpoint. Throws BracketInvalid otherwise.
double find_crossover(const ModelParams& tmpl, std::pair<double, double> bracket,
                      double reference, double tolerance = 1e-3);

struct Interval {
  double lo;
  double hi;
};

struct Bounds {
  Interval j{-1.0, 0.0};
  Interval j_c{0.0, 1.0};
  Interval omega_c{-1.0, 1.0};
  Interval gamma_c{1e-6, 1.0};
  double gamma = 1e-3;

  /// Throws InvalidParams on inverted or non-finite intervals.
  void validate() const;
  ModelParams clip(const ModelParams& p) const;
  bool contains(const ModelParams& p) const;
};

struct StartRecord {
  ModelParams seed;
  ModelParams converged;
  double value;
  std::size_t evaluations;
};

struct OptResult {
  ModelParams best_params;
  double best_n = 0.0;
  std::size_t evaluations = 0;
  std::size_t starts = 0;
  std::vector<StartRecord> history;
};

struct OptimizerOptions {
  NelderMeadOptions nelder_mead{0.1, 1e-10, 1e-6, 600};
  /// Objective slope outside the box, per unit of normalized distance.
  double penalty = 1.0;
  bool log_gamma_c = true;
  bool quadratic_j_c = true;
};

/// Multi-start Nelder-Mead maximization of the steady-state negativity over
/// the free (non-degenerate) intervals of `bounds`. Coordinates are scaled to
/// the unit box; out-of-box points are evaluated at their clipped image minus
/// a distance penalty. Starts come from a Halton sequence with a random shift
/// drawn from `seed`, so results are reproducible and independent of `jobs`.
OptResult maximize_entanglement(const Bounds& bounds, std::size_t n_starts, std::uint64_t seed,
                                std::size_t jobs = 1, const OptimizerOptions& options = {});

void write_sweep_csv(std::ostream& out, const SweepGrid& grid);
void write_scan_csv(std::ostream& out, const ScanCurve& curve);

}  // namespace dal
