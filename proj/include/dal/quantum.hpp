#pragma once

#include <cstddef>
#include <span>

#include "dal/numerics.hpp"

// Qubit conventions used throughout: basis index 0 is |e>, index 1 is |g>,
// so sigma_z = diag(1, -1). Three-qubit states live in A (x) B (x) C with A the
// slowest index: composite index = 4a + 2b + c.

namespace dal {

enum class Site { A = 0, B = 1, C = 2 };

enum class PauliKind { X, Y, Z, Plus, Minus, Identity };

inline constexpr std::size_t kQubitDim = 2;
inline constexpr std::size_t kPairDim = 4;
inline constexpr std::size_t kSystemDim = 8;

ComplexMatrix pauli(PauliKind kind);

/// op on one site, identity on the other two.
ComplexMatrix embed(const ComplexMatrix& op, Site site);

/// Composite basis ket for qubit labels (0 = e, 1 = g).
ComplexVector basis_ket(std::size_t a, std::size_t b, std::size_t c);

struct StateTolerance {
  double hermitian = 1e-10;  // ||rho - rho^H||_F
  double trace = 1e-10;      // |tr rho - 1|
  double min_eigenvalue = -1e-9;
};

/// A validated density matrix (4x4 or 8x8). Construction checks
/// Hermiticity, unit trace and positivity and throws InvalidState otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, const StateTolerance& tol = {});

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  double min_eigenvalue() const noexcept { return min_eig_; }

  static DensityMatrix pure(std::span<const Complex> ket);
  static DensityMatrix maximally_mixed(std::size_t dim);

 private:
  ComplexMatrix m_;
  double min_eig_ = 0.0;
};

/// (rho_AB)[ij,kl] = sum_c rho[ijc, klc] on an 8x8 operator.
ComplexMatrix partial_trace_c(const ComplexMatrix& rho);
DensityMatrix partial_trace_c(const DensityMatrix& rho);

/// Transposes the B indices of a 4x4 operator: (a b),(a' b') -> (a b'),(a' b).
ComplexMatrix partial_transpose_b(const ComplexMatrix& rho);

/// Row-stacking vectorization and its inverse.
ComplexVector vec(const ComplexMatrix& rho);
ComplexMatrix unvec(std::span<const Complex> v);

// Superoperator primitives in the row-stacking convention:
// vec(A rho) = (A (x) I) vec(rho), vec(rho B) = (I (x) B^T) vec(rho),
// vec(A rho B) = (A (x) B^T) vec(rho).
ComplexMatrix left_multiplication(const ComplexMatrix& a);
ComplexMatrix right_multiplication(const ComplexMatrix& b);
ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b);

/// 0.5 * ||a - b||_1 for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace dal
