#include "dal/quantum.hpp"

#include <cmath>
#include <string>

#include "dal/error.hpp"

namespace dal {

ComplexMatrix pauli(PauliKind kind) {
  using namespace std::complex_literals;
  switch (kind) {
    case PauliKind::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case PauliKind::Y: return {{0.0, -1.0i}, {1.0i, 0.0}};
    case PauliKind::Z: return {{1.0, 0.0}, {0.0, -1.0}};
    case PauliKind::Plus: return {{0.0, 1.0}, {0.0, 0.0}};   // |e><g|
    case PauliKind::Minus: return {{0.0, 0.0}, {1.0, 0.0}};  // |g><e|
    case PauliKind::Identity: return ComplexMatrix::identity(2);
  }
  return ComplexMatrix::identity(2);
}

ComplexMatrix embed(const ComplexMatrix& op, Site site) {
  if (op.rows() != kQubitDim || op.cols() != kQubitDim) {
    throw Error(ErrorKind::DimensionMismatch, "embed: single-qubit operator must be 2x2");
  }
  const ComplexMatrix id = ComplexMatrix::identity(kQubitDim);
  switch (site) {
    case Site::A: return kron(kron(op, id), id);
    case Site::B: return kron(kron(id, op), id);
    case Site::C: return kron(kron(id, id), op);
  }
  return {};
}

ComplexVector basis_ket(std::size_t a, std::size_t b, std::size_t c) {
  if (a > 1 || b > 1 || c > 1) {
    throw Error(ErrorKind::IndexOutOfRange, "basis_ket: qubit labels are 0 (e) or 1 (g)");
  }
  ComplexVector ket(kSystemDim, Complex{});
  ket[4 * a + 2 * b + c] = 1.0;
  return ket;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const StateTolerance& tol) {
  if (!m.is_square() || (m.rows() != 2 && m.rows() != kPairDim && m.rows() != kSystemDim)) {
    throw Error(ErrorKind::DimensionMismatch,
                "DensityMatrix: expected 2x2, 4x4 or 8x8, got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
  if (!m.all_finite()) throw Error(ErrorKind::InvalidState, "DensityMatrix: non-finite entry");
  const double herm = distance(m, m.adjoint());
  if (herm > tol.hermitian) {
    throw Error(ErrorKind::InvalidState,
                "DensityMatrix: not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const double trace_err = std::abs(m.trace() - 1.0);
  if (trace_err > tol.trace) {
    throw Error(ErrorKind::InvalidState,
                "DensityMatrix: trace deviates from 1 by " + std::to_string(trace_err));
  }
  // Store the exactly Hermitian part so downstream eigensolvers see no asymmetry.
  m_ = ComplexMatrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m_(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  }
  min_eig_ = eigvalsh(m_).front();
  if (min_eig_ < tol.min_eigenvalue) {
    throw Error(ErrorKind::InvalidState,
                "DensityMatrix: negative eigenvalue " + std::to_string(min_eig_));
  }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> ket) {
  const double n = norm2(ket);
  if (n == 0.0) throw Error(ErrorKind::InvalidState, "DensityMatrix::pure: zero ket");
  ComplexVector unit(ket.begin(), ket.end());
  for (auto& z : unit) z /= n;
  return DensityMatrix(ComplexMatrix::outer(unit));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

ComplexMatrix partial_trace_c(const ComplexMatrix& rho) {
  if (rho.rows() != kSystemDim || rho.cols() != kSystemDim) {
    throw Error(ErrorKind::DimensionMismatch, "partial_trace_c: expected an 8x8 operator");
  }
  ComplexMatrix out(kPairDim, kPairDim);
  for (std::size_t ab = 0; ab < kPairDim; ++ab) {
    for (std::size_t kl = 0; kl < kPairDim; ++kl) {
      out(ab, kl) = rho(2 * ab, 2 * kl) + rho(2 * ab + 1, 2 * kl + 1);
    }
  }
  return out;
}

DensityMatrix partial_trace_c(const DensityMatrix& rho) {
  return DensityMatrix(partial_trace_c(rho.matrix()));
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& rho) {
  if (rho.rows() != kPairDim || rho.cols() != kPairDim) {
    throw Error(ErrorKind::DimensionMismatch, "partial_transpose_b: expected a 4x4 operator");
  }
  ComplexMatrix out(kPairDim, kPairDim);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t ap = 0; ap < 2; ++ap) {
        for (std::size_t bp = 0; bp < 2; ++bp) {
          out(2 * a + b, 2 * ap + bp) = rho(2 * a + bp, 2 * ap + b);
        }
      }
    }
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& rho) {
  if (!rho.is_square()) throw Error(ErrorKind::DimensionMismatch, "vec: expected a square matrix");
  return ComplexVector(rho.data().begin(), rho.data().end());
}

ComplexMatrix unvec(std::span<const Complex> v) {
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "unvec: length " + std::to_string(v.size()) + " is not a perfect square");
  }
  return ComplexMatrix(d, d, ComplexVector(v.begin(), v.end()));
}

ComplexMatrix left_multiplication(const ComplexMatrix& a) {
  return kron(a, ComplexMatrix::identity(a.rows()));
}

ComplexMatrix right_multiplication(const ComplexMatrix& b) {
  return kron(ComplexMatrix::identity(b.rows()), b.transpose());
}

ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b) {
  return kron(a, b.transpose());
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (double ev : eigvalsh(a - b)) s += std::abs(ev);
  return 0.5 * s;
}

}  // namespace dal
