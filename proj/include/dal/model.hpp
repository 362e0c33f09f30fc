#pragma once

#include "dal/numerics.hpp"
#include "dal/quantum.hpp"

namespace dal {

/// Physical parameters in units of the A/B transition frequency (hbar = 1).
/// gamma is shared by A and B; gamma_c belongs to the ancilla C.
struct ModelParams {
  static constexpr double omega = 1.0;

  double omega_c = 0.0;
  double j = 0.0;
  double j_c = 0.0;
  double gamma = 1e-3;
  double gamma_c = 1e-3;

  /// Throws InvalidParams on non-finite values or negative rates.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// 64x64 generator acting on row-stacked 8x8 density matrices.
class Superoperator {
 public:
  explicit Superoperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

/// H = (1/2)(sz_A + sz_B) + (omega_c/2) sz_C + J sx_A sx_B + J_C (sx_A sx_C + sx_B sx_C).
ComplexMatrix build_hamiltonian(const ModelParams& p);

/// M = -i (H (x) I - I (x) H^T) + sum_k gamma_k D[sigma_-^k].
Superoperator build_liouvillian(const ModelParams& p);

/// -i[H, rho] + dissipator(rho) by direct matrix products. The raw overload
/// accepts any 8x8 operator.
ComplexMatrix apply_liouvillian(const ModelParams& p, const ComplexMatrix& rho);
ComplexMatrix apply_liouvillian(const ModelParams& p, const DensityMatrix& rho);

}  // namespace dal
