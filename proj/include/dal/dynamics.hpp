#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "dal/model.hpp"
#include "dal/quantum.hpp"
#include "dal/spectral.hpp"

namespace dal {

/// Per-sample tolerances a propagated state must satisfy.
inline constexpr StateTolerance kTrajectoryTolerance{1e-9, 1e-9, -1e-8};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<FidelityVector> fidelity_rows;  // empty unless requested
};

/// |e><e|_A (x) |g><g|_B (x) |g><g|_C
DensityMatrix excited_a_initial_state();

/// 0, dt, 2 dt, ... up to t_max (inclusive within rounding).
std::vector<double> linear_times(double t_max, double dt_out);

/// 0 followed by `points` logarithmically spaced times in [t_min, t_max].
std::vector<double> log_times(double t_min, double t_max, std::size_t points);

/// Samples rho(t) on a uniform grid with a single precomputed propagator
/// expm(M dt_out).
Trajectory propagate(const ModelParams& p, const DensityMatrix& rho0, double t_max,
                     double dt_out);

/// Samples rho(t) at arbitrary ascending times starting at 0. Each distinct
/// step length gets its own propagator.
Trajectory propagate(const ModelParams& p, const DensityMatrix& rho0,
                     std::span<const double> times);

/// propagate() plus fidelities against hamiltonian_spectrum(p) per sample.
Trajectory fidelity_trajectory(const ModelParams& p, const DensityMatrix& rho0, double t_max,
                               double dt_out);
Trajectory fidelity_trajectory(const ModelParams& p, const DensityMatrix& rho0,
                               std::span<const double> times);

struct Convergence {
  double t_conv;
  DensityMatrix rho;
};

/// Steps by dt_out until the trace distance to the steady state drops to
/// tol. Throws NotConverged when t_cap passes first.
Convergence converge_to_steady(const ModelParams& p, const DensityMatrix& rho0, double tol,
                               double t_cap, double dt_out = 1.0);

/// 50 / min(gamma, gamma_c): the slowest decay sets the convergence horizon.
double default_time_cap(const ModelParams& p);

/// CSV with header t,F_0..F_7,trace_error,min_eig. Requires fidelity rows.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace dal
