#include "dal/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "dal/error.hpp"
#include "dal/format.hpp"
#include "dal/steady.hpp"

namespace dal {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidParams, std::string(name) + " must be positive and finite");
  }
}

void check_times(std::span<const double> times) {
  if (times.empty() || times.front() != 0.0) {
    throw Error(ErrorKind::InvalidParams, "sample times must start at t = 0");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1]) || !std::isfinite(times[k])) {
      throw Error(ErrorKind::InvalidParams, "sample times must be strictly ascending");
    }
  }
}

// Reuses the last propagator while the step length is unchanged up to rounding.
class Stepper {
 public:
  explicit Stepper(const ModelParams& p) : generator_(build_liouvillian(p).matrix()) {}

  const ComplexMatrix& propagator(double dt) {
    if (!(cached_dt_ > 0.0) || std::abs(dt - cached_dt_) > 1e-12 * cached_dt_) {
      cached_ = expm(generator_ * dt);
      cached_dt_ = dt;
    }
    return cached_;
  }

 private:
  ComplexMatrix generator_;
  ComplexMatrix cached_;
  double cached_dt_ = 0.0;
};

Trajectory run(const ModelParams& p, const DensityMatrix& rho0, std::span<const double> times,
               const Spectrum* spectrum) {
  if (rho0.dim() != kSystemDim) {
    throw Error(ErrorKind::InvalidState, "initial state must be an 8x8 density matrix");
  }
  check_times(times);
  Stepper stepper(p);
  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.states.reserve(times.size());

  ComplexVector state = vec(rho0.matrix());
  traj.states.push_back(rho0);
  for (std::size_t k = 1; k < times.size(); ++k) {
    state = stepper.propagator(times[k] - times[k - 1]) * std::span<const Complex>(state);
    traj.states.emplace_back(unvec(state), kTrajectoryTolerance);
  }
  if (spectrum != nullptr) {
    traj.fidelity_rows.reserve(traj.states.size());
    for (const auto& rho : traj.states) traj.fidelity_rows.push_back(fidelities(rho, *spectrum));
  }
  return traj;
}

}  // namespace

DensityMatrix excited_a_initial_state() {
  return DensityMatrix::pure(basis_ket(0, 1, 1));
}

std::vector<double> linear_times(double t_max, double dt_out) {
  require_positive(t_max, "t_max");
  require_positive(dt_out, "dt_out");
  if (dt_out > t_max) throw Error(ErrorKind::InvalidParams, "dt_out must not exceed t_max");
  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt_out + 1e-9));
  std::vector<double> times(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) times[k] = static_cast<double>(k) * dt_out;
  return times;
}

std::vector<double> log_times(double t_min, double t_max, std::size_t points) {
  require_positive(t_min, "t_min");
  require_positive(t_max, "t_max");
  if (!(t_max > t_min) || points < 2) {
    throw Error(ErrorKind::InvalidParams, "log spacing needs t_max > t_min and at least 2 points");
  }
  std::vector<double> times{0.0};
  const double lo = std::log10(t_min);
  const double hi = std::log10(t_max);
  for (std::size_t k = 0; k < points; ++k) {
    const double frac = static_cast<double>(k) / static_cast<double>(points - 1);
    times.push_back(std::pow(10.0, lo + frac * (hi - lo)));
  }
  times[1] = t_min;
  times.back() = t_max;
  return times;
}

Trajectory propagate(const ModelParams& p, const DensityMatrix& rho0, double t_max,
                     double dt_out) {
  const auto times = linear_times(t_max, dt_out);
  return run(p, rho0, times, nullptr);
}

Trajectory propagate(const ModelParams& p, const DensityMatrix& rho0,
                     std::span<const double> times) {
  return run(p, rho0, times, nullptr);
}

Trajectory fidelity_trajectory(const ModelParams& p, const DensityMatrix& rho0, double t_max,
                               double dt_out) {
  const auto times = linear_times(t_max, dt_out);
  const Spectrum spectrum = hamiltonian_spectrum(p);
  return run(p, rho0, times, &spectrum);
}

Trajectory fidelity_trajectory(const ModelParams& p, const DensityMatrix& rho0,
                               std::span<const double> times) {
  const Spectrum spectrum = hamiltonian_spectrum(p);
  return run(p, rho0, times, &spectrum);
}

double default_time_cap(const ModelParams& p) {
  return 50.0 / std::min(p.gamma, p.gamma_c);
}

Convergence converge_to_steady(const ModelParams& p, const DensityMatrix& rho0, double tol,
                               double t_cap, double dt_out) {
  require_positive(tol, "tol");
  require_positive(t_cap, "t_cap");
  require_positive(dt_out, "dt_out");
  if (rho0.dim() != kSystemDim) {
    throw Error(ErrorKind::InvalidState, "initial state must be an 8x8 density matrix");
  }
  const auto target = steady_state(p);
  if (trace_distance(rho0.matrix(), target.rho.matrix()) <= tol) return {0.0, rho0};

  const ComplexMatrix step = expm(build_liouvillian(p).matrix() * dt_out);
  ComplexVector state = vec(rho0.matrix());
  const auto steps = static_cast<std::size_t>(std::floor(t_cap / dt_out + 1e-9));
  for (std::size_t k = 1; k <= steps; ++k) {
    state = step * std::span<const Complex>(state);
    const ComplexMatrix rho = unvec(state);
    if (trace_distance(rho, target.rho.matrix()) <= tol) {
      return {static_cast<double>(k) * dt_out, DensityMatrix(rho, kTrajectoryTolerance)};
    }
  }
  throw Error(ErrorKind::NotConverged,
              "trace distance above " + format_double(tol) + " at t_cap = " + format_double(t_cap));
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  if (traj.fidelity_rows.size() != traj.states.size()) {
    throw Error(ErrorKind::InvalidState, "trajectory CSV needs fidelity rows for every sample");
  }
  out << "t";
  const std::size_t n_levels = traj.fidelity_rows.empty() ? kSystemDim
                                                           : traj.fidelity_rows.front().values.size();
  for (std::size_t n = 0; n < n_levels; ++n) out << ",F_" << n;
  out << ",trace_error,min_eig\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << format_double(traj.times[k]);
    for (double f : traj.fidelity_rows[k].values) out << ',' << format_double(f);
    const auto& rho = traj.states[k];
    out << ',' << format_double(std::abs(rho.matrix().trace() - 1.0)) << ','
        << format_double(rho.min_eigenvalue()) << '\n';
  }
}

}  // namespace dal
