#include "dal/steady.hpp"

#include <cmath>
#include <string>

#include "dal/entanglement.hpp"
#include "dal/error.hpp"

namespace dal {

SteadyStateResult steady_state(const ModelParams& p, const SteadyTolerances& tol) {
  p.validate();
  if (!(p.gamma > 0.0) || !(p.gamma_c > 0.0)) {
    throw Error(ErrorKind::InvalidParams,
                "steady_state: gamma and gamma_c must both be positive for a unique steady state");
  }
  const Superoperator liouvillian = build_liouvillian(p);
  const MinSingular null = min_singular_vector(liouvillian.matrix());
  if (null.gap < tol.nullspace_gap) {
    throw Error(ErrorKind::NonUniqueSteadyState,
                "second-smallest singular value " + std::to_string(null.gap) + " below " +
                    std::to_string(tol.nullspace_gap));
  }

  // Dividing by the complex trace removes the arbitrary global phase of the
  // null vector before hermitizing.
  ComplexMatrix raw = unvec(null.vector);
  const Complex tr = raw.trace();
  if (std::abs(tr) < tol.zero_trace) {
    throw Error(ErrorKind::ZeroTrace, "null vector has trace " + std::to_string(std::abs(tr)));
  }
  raw *= 1.0 / tr;
  ComplexMatrix rho = (raw + raw.adjoint()) * 0.5;
  rho *= 1.0 / rho.trace().real();

  const double min_eig = eigvalsh(rho).front();
  if (min_eig < tol.min_eigenvalue) {
    throw Error(ErrorKind::NotPositive,
                "steady state has eigenvalue " + std::to_string(min_eig));
  }
  const double residual = norm2(liouvillian.matrix() * std::span<const Complex>(rho.data()));
  if (residual > tol.residual) {
    throw Error(ErrorKind::ConvergenceFailure,
                "steady-state residual " + std::to_string(residual) + " exceeds tolerance");
  }
  StateTolerance state_tol;
  state_tol.min_eigenvalue = tol.min_eigenvalue;
  return {DensityMatrix(std::move(rho), state_tol), residual, null.gap, min_eig};
}

double steady_negativity(const ModelParams& p, const SteadyTolerances& tol) {
  const auto st = steady_state(p, tol);
  return negativity(partial_trace_c(st.rho));
}

}  // namespace dal
