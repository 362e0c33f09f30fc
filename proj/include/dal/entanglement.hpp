#pragma once

#include "dal/quantum.hpp"

namespace dal {

/// Sum of the negative parts of the partial-transpose spectrum of a two-qubit
/// state; equals (||rho^{T_B}||_1 - 1) / 2. Lies in [0, 0.5].
double negativity(const DensityMatrix& rho_ab);

/// Closed-form steady-state negativity of two coupled, decaying qubits without
/// the ancilla: max(0, (sqrt(J^2 gamma^2 + 4 J^2) - J^2) / (4 J^2 + 4 + gamma^2)).
double two_qubit_analytic(double j, double gamma);

struct OptimalCoupling {
  double j_star;
  double n_star;
};

/// Golden-section maximization of two_qubit_analytic over J in (0, 2].
OptimalCoupling optimal_two_qubit_coupling(double gamma);

}  // namespace dal
