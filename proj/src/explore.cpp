#include "dal/explore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "dal/error.hpp"
#include "dal/format.hpp"
#include "dal/parallel.hpp"
#include "dal/steady.hpp"

namespace dal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Evaluates steady_negativity, turning any library error into a NaN plus a
// message so that one bad point never aborts a sweep.
double guarded_negativity(const ModelParams& p, std::string* message) {
  try {
    return steady_negativity(p);
  } catch (const Error& e) {
    *message = e.what();
    return kNaN;
  }
}

double halton(std::size_t index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  for (std::size_t i = index; i > 0; i /= base) {
    f /= base;
    r += f * static_cast<double>(i % base);
  }
  return r;
}

enum class Field { J, JC, OmegaC, GammaC };

double& field_of(ModelParams& p, Field f) {
  switch (f) {
    case Field::J: return p.j;
    case Field::JC: return p.j_c;
    case Field::OmegaC: return p.omega_c;
    case Field::GammaC: return p.gamma_c;
  }
  return p.j;
}

double value_of(ModelParams p, Field f) { return field_of(p, f); }

Interval interval_of(const Bounds& b, Field f) {
  switch (f) {
    case Field::J: return b.j;
    case Field::JC: return b.j_c;
    case Field::OmegaC: return b.omega_c;
    case Field::GammaC: return b.gamma_c;
  }
  return b.j;
}

// Search coordinates: the unit interval maps monotonically onto the bound
// interval. Rates spread over decades, so gamma_c is log-uniform; weak
// ancilla couplings matter most, so j_c is quadratic near its lower bound.
double from_unit(Field f, Interval iv, double u, const OptimizerOptions& options) {
  if (f == Field::GammaC && options.log_gamma_c) {
    return std::clamp(iv.lo * std::pow(iv.hi / iv.lo, u), iv.lo, iv.hi);
  }
  if (f == Field::JC && options.quadratic_j_c) {
    return iv.lo + u * u * (iv.hi - iv.lo);
  }
  return iv.lo + u * (iv.hi - iv.lo);
}

constexpr std::array<Field, 4> kFields = {Field::J, Field::JC, Field::OmegaC, Field::GammaC};

}  // namespace

std::vector<double> Axis::values() const {
  if (points < 2) throw Error(ErrorKind::InvalidParams, "axis needs at least 2 points");
  if (!std::isfinite(min) || !std::isfinite(max) || max < min) {
    throw Error(ErrorKind::InvalidParams, "axis bounds must be finite with max >= min");
  }
  std::vector<double> out(points);
  const double step = (max - min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) out[i] = min + static_cast<double>(i) * step;
  out.back() = max;
  return out;
}

SweepGrid sweep_2d(const ModelParams& tmpl, const Axis& omega_c, const Axis& j_c,
                   std::size_t jobs) {
  tmpl.validate();
  SweepGrid grid;
  grid.omega_c_axis = omega_c.values();
  grid.j_c_axis = j_c.values();
  grid.fixed = tmpl;
  const std::size_t nk = grid.j_c_axis.size();
  const std::size_t count = grid.omega_c_axis.size() * nk;
  grid.values.assign(count, kNaN);
  std::vector<std::string> messages(count);
  parallel_for(count, jobs, [&](std::size_t idx) {
    ModelParams p = tmpl;
    p.omega_c = grid.omega_c_axis[idx / nk];
    p.j_c = grid.j_c_axis[idx % nk];
    grid.values[idx] = guarded_negativity(p, &messages[idx]);
  });
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (!messages[idx].empty()) grid.failures.push_back({idx, std::move(messages[idx])});
  }
  return grid;
}

ScanCurve scan_gamma_c(const ModelParams& tmpl, std::span<const double> gamma_c_points,
                       std::size_t jobs) {
  tmpl.validate();
  for (double g : gamma_c_points) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw Error(ErrorKind::InvalidParams, "gamma_c scan points must be positive");
    }
  }
  ScanCurve curve;
  curve.points.resize(gamma_c_points.size());
  std::vector<std::string> messages(gamma_c_points.size());
  parallel_for(gamma_c_points.size(), jobs, [&](std::size_t idx) {
    ModelParams p = tmpl;
    p.gamma_c = gamma_c_points[idx];
    curve.points[idx] = {p.gamma_c, guarded_negativity(p, &messages[idx])};
  });
  for (std::size_t idx = 0; idx < messages.size(); ++idx) {
    if (!messages[idx].empty()) curve.failures.push_back({idx, std::move(messages[idx])});
  }
  return curve;
}

double find_crossover(const ModelParams& tmpl, std::pair<double, double> bracket,
                      double reference, double tolerance) {
  auto [lo, hi] = bracket;
  if (!(lo > 0.0) || !(hi > lo)) {
    throw Error(ErrorKind::BracketInvalid, "bracket must satisfy 0 < lo < hi");
  }
  auto n_at = [&](double gamma_c) {
    ModelParams p = tmpl;
    p.gamma_c = gamma_c;
    return steady_negativity(p);
  };
  const double n_lo = n_at(lo);
  const double n_hi = n_at(hi);
  if (!(n_lo > reference && reference > n_hi)) {
    throw Error(ErrorKind::BracketInvalid,
                "need N(lo) > reference > N(hi); got N(lo) = " + format_double(n_lo) +
                    ", N(hi) = " + format_double(n_hi));
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (n_at(mid) > reference) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void Bounds::validate() const {
  for (Field f : kFields) {
    const Interval iv = interval_of(*this, f);
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.hi < iv.lo) {
      throw Error(ErrorKind::InvalidParams, "bounds intervals must be finite with hi >= lo");
    }
  }
  if (!(gamma_c.lo > 0.0)) throw Error(ErrorKind::InvalidParams, "gamma_c lower bound must be > 0");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::InvalidParams, "gamma must be positive");
  }
}

ModelParams Bounds::clip(const ModelParams& p) const {
  ModelParams out = p;
  for (Field f : kFields) {
    const Interval iv = interval_of(*this, f);
    double& v = field_of(out, f);
    v = std::clamp(v, iv.lo, iv.hi);
  }
  out.gamma = gamma;
  return out;
}

bool Bounds::contains(const ModelParams& p) const {
  for (Field f : kFields) {
    const Interval iv = interval_of(*this, f);
    const double v = value_of(p, f);
    if (v < iv.lo || v > iv.hi) return false;
  }
  return p.gamma == gamma;
}

OptResult maximize_entanglement(const Bounds& bounds, std::size_t n_starts, std::uint64_t seed,
                                std::size_t jobs, const OptimizerOptions& options) {
  bounds.validate();
  if (n_starts == 0) throw Error(ErrorKind::InvalidParams, "need at least one start");

  std::vector<Field> free;
  for (Field f : kFields) {
    const Interval iv = interval_of(bounds, f);
    if (iv.hi > iv.lo) free.push_back(f);
  }
  ModelParams base;
  base.gamma = bounds.gamma;
  for (Field f : kFields) field_of(base, f) = interval_of(bounds, f).lo;

  // Unit-box coordinates u in [0,1]^k for the free fields.
  auto to_params = [&](std::span<const double> u) {
    ModelParams p = base;
    for (std::size_t d = 0; d < free.size(); ++d) {
      const Interval iv = interval_of(bounds, free[d]);
      field_of(p, free[d]) = from_unit(free[d], iv, std::clamp(u[d], 0.0, 1.0), options);
    }
    return p;
  };

  OptResult result;
  if (free.empty()) {
    result.best_params = base;
    std::string message;
    result.best_n = guarded_negativity(base, &message);
    result.evaluations = 1;
    result.starts = 1;
    result.history.push_back({base, base, result.best_n, 1});
    return result;
  }

  std::mt19937_64 rng(seed);
  std::vector<double> shift(free.size());
  for (auto& s : shift) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  static constexpr std::array<unsigned, 4> kPrimes = {2, 3, 5, 7};

  std::vector<std::vector<double>> seeds(n_starts, std::vector<double>(free.size()));
  for (std::size_t s = 0; s < n_starts; ++s) {
    for (std::size_t d = 0; d < free.size(); ++d) {
      const double h = halton(s + 1, kPrimes[d]) + shift[d];
      seeds[s][d] = h - std::floor(h);
    }
  }

  auto objective = [&](std::span<const double> u) {
    double outside = 0.0;
    for (double x : u) outside += std::max(0.0, -x) + std::max(0.0, x - 1.0);
    std::string message;
    const double n = guarded_negativity(to_params(u), &message);
    // A failed solve ranks below every valid point (N >= 0).
    const double value = std::isnan(n) ? 1.0 : -n;
    return value + options.penalty * outside;
  };

  result.history.resize(n_starts);
  parallel_for(n_starts, jobs, [&](std::size_t s) {
    std::vector<double> steps(free.size(), options.nelder_mead.initial_step);
    for (std::size_t d = 0; d < free.size(); ++d) {
      if (seeds[s][d] + steps[d] > 1.0) steps[d] = -steps[d];
    }
    const auto nm = nelder_mead(objective, seeds[s], steps, options.nelder_mead);
    const ModelParams converged = to_params(nm.x);
    std::string message;
    const double value = guarded_negativity(converged, &message);
    result.history[s] = {to_params(seeds[s]), converged, std::isnan(value) ? 0.0 : value,
                         nm.evaluations + 1};
  });

  result.starts = n_starts;
  std::size_t best = 0;
  for (std::size_t s = 0; s < n_starts; ++s) {
    result.evaluations += result.history[s].evaluations;
    if (result.history[s].value > result.history[best].value) best = s;
  }
  result.best_params = result.history[best].converged;
  result.best_n = result.history[best].value;
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
  out << "omega_c,j_c,negativity\n";
  const std::size_t nk = grid.j_c_axis.size();
  for (std::size_t i = 0; i < grid.omega_c_axis.size(); ++i) {
    for (std::size_t k = 0; k < nk; ++k) {
      out << format_double(grid.omega_c_axis[i]) << ',' << format_double(grid.j_c_axis[k]) << ','
          << format_double(grid.values[i * nk + k]) << '\n';
    }
  }
}

void write_scan_csv(std::ostream& out, const ScanCurve& curve) {
  out << "gamma_c,negativity\n";
  for (const auto& pt : curve.points) {
    out << format_double(pt.gamma_c) << ',' << format_double(pt.negativity) << '\n';
  }
}

}  // namespace dal
