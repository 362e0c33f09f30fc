#include "dal/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dal/error.hpp"

namespace dal {

namespace {

void require_square(const ComplexMatrix& m, const char* where) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(where) + ": expected a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(where) + ": shape mismatch");
  }
}

// Permutation that sorts `keys` ascending; stable so equal keys keep their
// original column order.
std::vector<std::size_t> ascending_order(const std::vector<double>& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  return order;
}

struct JacobiState {
  ComplexMatrix a;
  ComplexMatrix v;
};

// Cyclic Jacobi on a Hermitian matrix. Each rotation first removes the phase
// of a(p,q) with a diagonal unitary, then applies the real symmetric rotation.
JacobiState jacobi_diagonalize(ComplexMatrix a, bool want_vectors) {
  const std::size_t n = a.rows();
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix{};
  const double scale = a.frobenius_norm();
  if (scale == 0.0 || n < 2) {
    return {std::move(a), std::move(v)};
  }

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q) s += std::norm(a(p, q));
      }
    }
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_norm();
    if (off <= 1e-15 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double g = 100.0 * r;
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const Complex w = apq / r;
        const double theta = (aqq - app) / (2.0 * r);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex wc = std::conj(w);

        // a <- a G, columns p and q
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q) * wc;
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        // a <- G^H a, rows p and q
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k) * w;
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q) * wc;
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (off_norm() > 1e-12 * scale) {
    throw Error(ErrorKind::ConvergenceFailure, "eigh: Jacobi sweeps did not converge");
  }
  return {std::move(a), std::move(v)};
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  ComplexMatrix out(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      out(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    }
  }
  return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "ComplexMatrix: " + std::to_string(data_.size()) + " entries for a " +
                    std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  }
  if (!all_finite()) {
    throw Error(ErrorKind::InvalidState, "ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "ComplexMatrix: ragged initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const { return norm2(data_); }

double ComplexMatrix::norm1() const {
  double best = 0.0;
  for (std::size_t c = 0; c < cols_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product: inner dimensions differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* out_row = &out(i, 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      const Complex* b_row = &b(k, 0);
      for (std::size_t j = 0; j < n; ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product: size mismatch");
  }
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s = 0.0;
    const Complex* row = &m(i, 0);
    for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s);
}

double hermitian_defect(const ComplexMatrix& h) {
  require_square(h, "hermitian_defect");
  const double scale = h.frobenius_norm();
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) s += std::norm(h(i, j) - std::conj(h(j, i)));
  }
  return std::sqrt(s) / scale;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

EighResult eigh(const ComplexMatrix& h) {
  require_square(h, "eigh");
  if (!h.all_finite()) throw Error(ErrorKind::InvalidState, "eigh: non-finite entry");
  const double defect = hermitian_defect(h);
  if (defect > 1e-12) {
    throw Error(ErrorKind::NotHermitian,
                "eigh: relative asymmetry " + std::to_string(defect) + " exceeds 1e-12");
  }
  auto [diag, vecs] = jacobi_diagonalize(hermitian_part(h), true);
  const std::size_t n = h.rows();
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = diag(i, i).real();
  const auto order = ascending_order(values);

  EighResult out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = values[order[k]];
    ComplexVector col = vecs.column(order[k]);
    const double nrm = norm2(col);
    for (auto& z : col) z /= nrm;
    normalize_phase(col);
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = col[r];
  }
  return out;
}

std::vector<double> eigvalsh(const ComplexMatrix& h) {
  require_square(h, "eigvalsh");
  if (!h.all_finite()) throw Error(ErrorKind::InvalidState, "eigvalsh: non-finite entry");
  const auto state = jacobi_diagonalize(hermitian_part(h), false);
  std::vector<double> values(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) values[i] = state.a(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

namespace {

struct JacobiSvd {
  std::vector<double> sigma;  // unsorted, one per column
  ComplexMatrix v;            // right singular vectors as columns (unsorted)
};

// One-sided (Hestenes) Jacobi: rotate column pairs of m until all columns are
// mutually orthogonal; the accumulated rotations are the right singular vectors.
JacobiSvd one_sided_jacobi(const ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  // Column-major working copies keep the inner loops contiguous.
  std::vector<Complex> a(rows * n);
  std::vector<Complex> v(n * n, Complex{});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) a[j * rows + i] = m(i, j);
    v[j * n + j] = 1.0;
  }
  std::vector<double> sq(n);
  auto column_norms = [&] {
    for (std::size_t j = 0; j < n; ++j) {
      sq[j] = 0.0;
      for (std::size_t i = 0; i < rows; ++i) sq[j] += std::norm(a[j * rows + i]);
    }
  };

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double tol = std::sqrt(static_cast<double>(rows)) * eps;
  // Columns this small are null to working precision; rotating them against
  // large columns only reshuffles rounding noise and never converges.
  const double null_floor = static_cast<double>(rows) * eps * m.frobenius_norm();
  const double null_floor_sq = null_floor * null_floor;
  constexpr int kMaxSweeps = 80;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    column_norms();
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      Complex* ap = &a[p * rows];
      Complex* vp = &v[p * n];
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = sq[p];
        const double beta = sq[q];
        if (alpha <= null_floor_sq || beta <= null_floor_sq) continue;
        Complex* aq = &a[q * rows];
        Complex g = 0.0;
        for (std::size_t i = 0; i < rows; ++i) g += std::conj(ap[i]) * aq[i];
        const double ag = std::abs(g);
        if (ag <= tol * std::sqrt(alpha * beta)) continue;
        converged = false;

        const Complex wc = std::conj(g / ag);
        const double zeta = (beta - alpha) / (2.0 * ag);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const Complex x = ap[i];
          const Complex y = aq[i] * wc;
          ap[i] = c * x - s * y;
          aq[i] = s * x + c * y;
        }
        Complex* vq = &v[q * n];
        for (std::size_t i = 0; i < n; ++i) {
          const Complex x = vp[i];
          const Complex y = vq[i] * wc;
          vp[i] = c * x - s * y;
          vq[i] = s * x + c * y;
        }
        sq[p] = alpha - t * ag;
        sq[q] = beta + t * ag;
      }
    }
  }
  if (!converged) {
    throw Error(ErrorKind::ConvergenceFailure, "singular value decomposition did not converge");
  }
  column_norms();
  JacobiSvd out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.sigma[j] = std::sqrt(sq[j]);
    for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v[j * n + i];
  }
  return out;
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& m) {
  if (!m.all_finite()) throw Error(ErrorKind::InvalidState, "singular_values: non-finite entry");
  auto svd = one_sided_jacobi(m);
  std::sort(svd.sigma.begin(), svd.sigma.end());
  return svd.sigma;
}

MinSingular min_singular_vector(const ComplexMatrix& m) {
  require_square(m, "min_singular_vector");
  if (!m.all_finite()) {
    throw Error(ErrorKind::InvalidState, "min_singular_vector: non-finite entry");
  }
  const auto svd = one_sided_jacobi(m);
  const auto order = ascending_order(svd.sigma);

  MinSingular out;
  out.vector = svd.v.column(order.front());
  const double nrm = norm2(out.vector);
  for (auto& z : out.vector) z /= nrm;
  normalize_phase(out.vector);
  out.residual = norm2(m * std::span<const Complex>(out.vector));
  out.gap = order.size() > 1 ? svd.sigma[order[1]] : 0.0;
  return out;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "solve");
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs rows");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  const double scale = a.norm1();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        piv = i;
      }
    }
    if (best <= std::numeric_limits<double>::epsilon() * scale || best == 0.0) {
      throw Error(ErrorKind::InvalidState, "solve: matrix is numerically singular");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(piv, j));
    }
    const Complex inv = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) * inv;
      if (f == Complex{}) continue;
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Complex s = x(ii, j);
      for (std::size_t k = ii + 1; k < n; ++k) s -= lu(ii, k) * x(k, j);
      x(ii, j) = s / lu(ii, ii);
    }
  }
  return x;
}

namespace {

// Pade numerator/denominator pieces: exp(A) ~ (V - U)^{-1} (V + U).
struct PadeTerms {
  ComplexMatrix u;
  ComplexMatrix v;
};

PadeTerms pade_low(const ComplexMatrix& a, std::span<const double> b) {
  const std::size_t n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix odd = ident * b[1];
  ComplexMatrix even = ident * b[0];
  ComplexMatrix power = ident;
  for (std::size_t k = 2; k < b.size(); k += 2) {
    power = power * a2;
    even += power * b[k];
    if (k + 1 < b.size()) odd += power * b[k + 1];
  }
  return {a * odd, std::move(even)};
}

PadeTerms pade13(const ComplexMatrix& a) {
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  const std::size_t n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  ComplexMatrix inner_u = a6 * b[13] + a4 * b[11] + a2 * b[9];
  ComplexMatrix u = a * (a6 * inner_u + a6 * b[7] + a4 * b[5] + a2 * b[3] + ident * b[1]);
  ComplexMatrix inner_v = a6 * b[12] + a4 * b[10] + a2 * b[8];
  ComplexMatrix v = a6 * inner_v + a6 * b[6] + a4 * b[4] + a2 * b[2] + ident * b[0];
  return {std::move(u), std::move(v)};
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m) {
  require_square(m, "expm");
  const double norm = m.norm1();
  if (!std::isfinite(norm)) {
    throw Error(ErrorKind::Overflow, "expm: non-finite input norm");
  }
  static constexpr double b3[] = {120.0, 60.0, 12.0, 1.0};
  static constexpr double b5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  static constexpr double b7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                  25200.0,    1512.0,    56.0,      1.0};
  static constexpr double b9[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                  30270240.0,    2162160.0,    110880.0,     3960.0,
                                  90.0,          1.0};
  constexpr double theta3 = 1.495585217958292e-2;
  constexpr double theta5 = 2.539398330063230e-1;
  constexpr double theta7 = 9.504178996162932e-1;
  constexpr double theta9 = 2.097847961257068e0;
  constexpr double theta13 = 5.371920351148152e0;

  PadeTerms terms;
  int squarings = 0;
  if (norm <= theta3) {
    terms = pade_low(m, b3);
  } else if (norm <= theta5) {
    terms = pade_low(m, b5);
  } else if (norm <= theta7) {
    terms = pade_low(m, b7);
  } else if (norm <= theta9) {
    terms = pade_low(m, b9);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
    if (squarings > 1000) {
      throw Error(ErrorKind::Overflow, "expm: norm too large to scale");
    }
    terms = pade13(m * std::ldexp(1.0, -squarings));
  }
  ComplexMatrix result = solve(terms.v - terms.u, terms.v + terms.u);
  for (int k = 0; k < squarings; ++k) {
    result = result * result;
    if (!result.all_finite()) break;
  }
  if (!result.all_finite()) {
    throw Error(ErrorKind::Overflow, "expm: result overflows double precision");
  }
  return result;
}

void normalize_phase(std::span<Complex> v) {
  if (v.empty()) return;
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    // Rounding-level ties resolve to the lowest index.
    if (mag > best_mag * (1.0 + 1e-12)) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag <= 0.0) return;
  const Complex phase = std::conj(v[best]) / best_mag;
  for (auto& z : v) z *= phase;
  v[best] = Complex(std::abs(v[best]), 0.0);
}

}  // namespace dal
