#include "dal/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dal/error.hpp"

namespace dal {

double negativity(const DensityMatrix& rho_ab) {
  if (rho_ab.dim() != kPairDim) {
    throw Error(ErrorKind::InvalidState, "negativity: expected a two-qubit (4x4) state");
  }
  double n = 0.0;
  for (double ev : eigvalsh(partial_transpose_b(rho_ab.matrix()))) {
    if (ev < 0.0) n -= ev;
  }
  if (n > 0.5 + 1e-12) {
    throw Error(ErrorKind::InvalidState, "negativity " + std::to_string(n) + " exceeds 0.5");
  }
  return n;
}

double two_qubit_analytic(double j, double gamma) {
  if (!(gamma >= 0.0)) throw Error(ErrorKind::InvalidParams, "gamma must be >= 0");
  const double j2 = j * j;
  const double value = (std::sqrt(j2 * gamma * gamma + 4.0 * j2) - j2) / (4.0 * j2 + 4.0 + gamma * gamma);
  return std::max(0.0, value);
}

OptimalCoupling optimal_two_qubit_coupling(double gamma) {
  if (!(gamma >= 0.0)) throw Error(ErrorKind::InvalidParams, "gamma must be >= 0");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = two_qubit_analytic(x1, gamma);
  double f2 = two_qubit_analytic(x2, gamma);
  while (hi - lo > 1e-6) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = two_qubit_analytic(x2, gamma);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = two_qubit_analytic(x1, gamma);
    }
  }
  const double j_star = 0.5 * (lo + hi);
  return {j_star, two_qubit_analytic(j_star, gamma)};
}

}  // namespace dal
