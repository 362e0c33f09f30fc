#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "dal/error.hpp"
#include "dal/numerics.hpp"
#include "dal/quantum.hpp"
#include "support/test_support.hpp"

using namespace dal;
using dal::testing::max_abs_diff;

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

ComplexMatrix sigma_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix sigma_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace

TEST_CASE("kron of identities is the identity") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
}

TEST_CASE("kron of diagonal and permutation matrices") {
  const std::vector<double> zz = {1.0, -1.0, -1.0, 1.0};
  CHECK(kron(sigma_z(), sigma_z()) == ComplexMatrix::diagonal(std::span<const double>(zz)));

  const ComplexMatrix xx = kron(sigma_x(), sigma_x());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(xx(i, j) == Complex(i + j == 3 ? 1.0 : 0.0));
  }
}

TEST_CASE("kron is associative and blockwise") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testing::random_matrix(rng, 2, 3);
    const auto b = testing::random_matrix(rng, 3, 2);
    const auto c = testing::random_matrix(rng, 2, 2);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
    const auto ab = kron(a, b);
    REQUIRE(ab.rows() == 6);
    REQUIRE(ab.cols() == 6);
    CHECK(std::abs(ab(1 * 3 + 2, 2 * 2 + 1) - a(1, 2) * b(2, 1)) <= 1e-15);
  }
}

TEST_CASE("eigh on textbook 2x2 and permuted diagonal") {
  SUBCASE("sigma_z") {
    const auto r = eigh(sigma_z());
    CHECK(r.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(r.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(std::abs(r.eigenvectors(1, 0)) == doctest::Approx(1.0));  // |g>
    CHECK(std::abs(r.eigenvectors(0, 1)) == doctest::Approx(1.0));  // |e>
  }
  SUBCASE("sigma_x") {
    const auto r = eigh(sigma_x());
    CHECK(r.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(r.eigenvalues[1] == doctest::Approx(1.0));
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(r.eigenvectors(0, 0) + r.eigenvectors(1, 0)) <= 1e-12);
    CHECK(std::abs(r.eigenvectors(0, 1) - r.eigenvectors(1, 1)) <= 1e-12);
    CHECK(std::abs(r.eigenvectors(0, 1)) == doctest::Approx(h));
  }
  SUBCASE("diag(3, 1, 2) sorts") {
    const std::vector<double> d = {3.0, 1.0, 2.0};
    const auto r = eigh(ComplexMatrix::diagonal(std::span<const double>(d)));
    CHECK(r.eigenvalues == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(r.eigenvectors(1, 0) == Complex(1.0));
    CHECK(r.eigenvectors(2, 1) == Complex(1.0));
    CHECK(r.eigenvectors(0, 2) == Complex(1.0));
  }
}

TEST_CASE("eigh contract on random Hermitian matrices") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix h = testing::random_hermitian(rng, n);
      const auto r = eigh(h);
      for (std::size_t k = 0; k + 1 < n; ++k) CHECK(r.eigenvalues[k] <= r.eigenvalues[k + 1]);

      const ComplexMatrix& v = r.eigenvectors;
      CHECK(distance(v.adjoint() * v, ComplexMatrix::identity(n)) <= 1e-10);
      const ComplexMatrix recon =
          v * ComplexMatrix::diagonal(std::span<const double>(r.eigenvalues)) * v.adjoint();
      CHECK(distance(recon, h) <= 1e-10 * h.frobenius_norm());

      // Independent oracle: Eigen's tridiagonal QR solver.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(h));
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(r.eigenvalues[k] == doctest::Approx(ref.eigenvalues()(k)).epsilon(1e-10));
      }
      // Phase convention: largest-magnitude component is real and positive.
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (std::abs(v(i, c)) > std::abs(v(best, c)) * (1.0 + 1e-12)) best = i;
        }
        CHECK(v(best, c).imag() == 0.0);
        CHECK(v(best, c).real() > 0.0);
      }
    }
  }
}

TEST_CASE("eigh rejects non-Hermitian input") {
  const ComplexMatrix m = {{1.0, 2.0}, {0.0, 1.0}};
  try {
    eigh(m);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
  CHECK_THROWS_AS(eigh(ComplexMatrix(2, 3)), Error);
}

TEST_CASE("min_singular_vector on diagonal and zero matrices") {
  SUBCASE("diag(0,1,1,1)") {
    const std::vector<double> d = {0.0, 1.0, 1.0, 1.0};
    const auto r = min_singular_vector(ComplexMatrix::diagonal(std::span<const double>(d)));
    CHECK(r.vector[0] == Complex(1.0));
    CHECK(norm2(r.vector) == doctest::Approx(1.0));
    CHECK(r.residual == 0.0);
    CHECK(r.gap == doctest::Approx(1.0));
  }
  SUBCASE("zero") {
    const auto r = min_singular_vector(ComplexMatrix(4, 4));
    CHECK(norm2(r.vector) == doctest::Approx(1.0));
    CHECK(r.residual == 0.0);
    CHECK(r.gap == 0.0);
  }
}

TEST_CASE("min_singular_vector residual and singular values match an independent SVD") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {4u, 16u, 64u}) {
    // Rank-deficient: last column is a combination of the others.
    ComplexMatrix m = testing::random_matrix(rng, n, n);
    for (std::size_t r = 0; r < n; ++r) m(r, n - 1) = m(r, 0) * Complex(0.3, -0.2) + m(r, 1);
    const auto res = min_singular_vector(m);
    CHECK(norm2(res.vector) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(norm2(m * std::span<const Complex>(res.vector)) - res.residual) <= 1e-12);
    CHECK(res.residual <= 1e-12 * m.frobenius_norm());

    Eigen::JacobiSVD<Eigen::MatrixXcd> ref(to_eigen(m));
    const auto sv = ref.singularValues();  // descending
    CHECK(res.gap == doctest::Approx(sv(n - 2)).epsilon(1e-9));
    const auto mine = singular_values(m);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(mine[k] - sv(n - 1 - k)) <= 1e-10 * sv(0));
    }
  }
}

TEST_CASE("expm special cases") {
  using namespace std::complex_literals;
  CHECK(max_abs_diff(expm(ComplexMatrix(3, 3)), ComplexMatrix::identity(3)) == 0.0);

  const std::vector<Complex> d = {0.7, -2.5};
  const auto e = expm(ComplexMatrix::diagonal(std::span<const Complex>(d)));
  CHECK(std::abs(e(0, 0) - std::exp(0.7)) <= 1e-10 * std::exp(0.7));
  CHECK(std::abs(e(1, 1) - std::exp(-2.5)) <= 1e-10 * std::exp(-2.5));
  CHECK(e(0, 1) == Complex(0.0));

  const double theta = 1.3;
  const auto rot = expm(sigma_z() * (-1.0i * theta / 2.0));
  CHECK(std::abs(rot(0, 0) - std::exp(-1.0i * theta / 2.0)) <= 1e-12);
  CHECK(std::abs(rot(1, 1) - std::exp(1.0i * theta / 2.0)) <= 1e-12);

  // Large norm exercises the squaring phase.
  const std::vector<Complex> big = {30.0, -40.0};
  const auto eb = expm(ComplexMatrix::diagonal(std::span<const Complex>(big)));
  CHECK(std::abs(eb(0, 0) - std::exp(30.0)) <= 1e-10 * std::exp(30.0));
}

TEST_CASE("expm matches the eigen-decomposition route on Hermitian generators") {
  using namespace std::complex_literals;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = testing::random_hermitian(rng, 8) * 1.5;
    const auto r = eigh(h);
    std::vector<Complex> phases(8);
    for (std::size_t k = 0; k < 8; ++k) phases[k] = std::exp(-1.0i * r.eigenvalues[k]);
    const ComplexMatrix oracle = r.eigenvectors *
                                 ComplexMatrix::diagonal(std::span<const Complex>(phases)) *
                                 r.eigenvectors.adjoint();
    const auto u = expm(h * -1.0i);
    CHECK(distance(u, oracle) <= 1e-10 * oracle.frobenius_norm());
  }
}

TEST_CASE("expm(m) expm(-m) = I for random 8x8 and 64x64 with norm up to 10") {
  std::mt19937_64 rng(99);
  for (std::size_t n : {8u, 64u}) {
    for (int trial = 0; trial < 5; ++trial) {
      ComplexMatrix m = testing::random_matrix(rng, n, n);
      m *= 10.0 / m.frobenius_norm();
      const auto prod = expm(m) * expm(m * -1.0);
      CHECK(max_abs_diff(prod, ComplexMatrix::identity(n)) <= 1e-9);
    }
  }
}

TEST_CASE("expm reports overflow instead of returning infinities") {
  const std::vector<Complex> d = {1000.0, 0.0};
  try {
    expm(ComplexMatrix::diagonal(std::span<const Complex>(d)));
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("LU solve recovers a known solution") {
  std::mt19937_64 rng(3);
  const auto a = testing::random_matrix(rng, 12, 12);
  const auto x = testing::random_matrix(rng, 12, 3);
  const auto b = a * x;
  CHECK(max_abs_diff(solve(a, b), x) <= 1e-10);
  CHECK_THROWS_AS(solve(ComplexMatrix(3, 3), ComplexMatrix(3, 1)), Error);
}

TEST_CASE("matrix construction validates shape and finiteness") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, std::vector<Complex>{Complex(NAN, 0.0)}), Error);
  CHECK_THROWS_AS(ComplexMatrix::identity(2) * ComplexMatrix::identity(3), Error);
}
