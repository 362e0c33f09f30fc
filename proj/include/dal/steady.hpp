#pragma once

#include "dal/model.hpp"
#include "dal/quantum.hpp"

namespace dal {

struct SteadyTolerances {
  double residual = 1e-9;
  double nullspace_gap = 1e-6;
  double min_eigenvalue = -1e-9;
  double zero_trace = 1e-8;
};

struct SteadyStateResult {
  DensityMatrix rho;
  double residual;       // ||M vec(rho)||_2
  double nullspace_gap;  // second-smallest singular value of M
  double min_eigenvalue;
};

/// Unique stationary state of the Liouvillian from the smallest right
/// singular vector of M. Requires gamma > 0 and gamma_c > 0.
///
/// Errors: NonUniqueSteadyState when the gap is below tolerance, ZeroTrace
/// when the null vector has (numerically) no trace, NotPositive when the
/// hermitized state has an eigenvalue below the positivity tolerance, and
/// ConvergenceFailure when the residual exceeds its tolerance. Nothing is
/// projected or clipped to make a state valid.
SteadyStateResult steady_state(const ModelParams& p, const SteadyTolerances& tol = {});

/// Negativity of tr_C of the steady state.
double steady_negativity(const ModelParams& p, const SteadyTolerances& tol = {});

}  // namespace dal
