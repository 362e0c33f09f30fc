#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dal {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix, row-major. Row-stacking vectorization of a square
/// matrix is therefore a plain view of data().
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexVector column(std::size_t c) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  Complex trace() const;
  double frobenius_norm() const;
  /// Maximum absolute column sum.
  double norm1() const;
  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

double norm2(std::span<const Complex> v);
Complex dot(std::span<const Complex> a, std::span<const Complex> b);  // a^H b

/// Frobenius norm of a - b.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Relative anti-Hermitian part ||h - h^H||_F / ||h||_F (0 for the zero matrix).
double hermitian_defect(const ComplexMatrix& h);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column n belongs to eigenvalues[n]
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Throws NotHermitian when the relative asymmetry exceeds 1e-12.
EighResult eigh(const ComplexMatrix& h);

/// Eigenvalues only; skips the Hermiticity gate so callers can feed
/// matrices that are Hermitian up to accumulated rounding.
std::vector<double> eigvalsh(const ComplexMatrix& h);

struct MinSingular {
  ComplexVector vector;  // unit-norm right singular vector
  double residual = 0.0;  // ||m v||_2
  double gap = 0.0;       // second-smallest singular value
};

/// Right singular vector of the smallest singular value, from a full
/// one-sided Jacobi SVD.
MinSingular min_singular_vector(const ComplexMatrix& m);

/// All singular values, ascending.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Solves a x = b by LU with partial pivoting. Throws InvalidState on a
/// numerically singular a.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix exponential, scaling and squaring with a degree-13 Pade approximant.
/// Throws Overflow rather than returning non-finite entries.
ComplexMatrix expm(const ComplexMatrix& m);

/// Rotates v by a global phase so that its largest-magnitude entry is real
/// and positive. Ties go to the lowest index.
void normalize_phase(std::span<Complex> v);

}  // namespace dal
