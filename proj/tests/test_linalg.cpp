#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "seqent/linalg.hpp"
#include "seqent/random.hpp"
#include "testutil.hpp"

using namespace seqent;
using namespace seqent::testutil;

namespace {

double orthonormality_error(const Matrix& v) {
  return max_abs_diff(v.adjoint() * v, Matrix::identity(v.cols()));
}

double reconstruction_error(const Matrix& a, const EigenSystem& es) {
  const std::size_t n = a.rows();
  Matrix rebuilt(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rebuilt(i, j) += es.eigenvalues[k] * es.eigenvectors(i, k) *
                         std::conj(es.eigenvectors(j, k));
  return max_abs_diff(a, rebuilt);
}

}  // namespace

TEST_CASE("eig_hermitian: identity") {
  const EigenSystem es = eig_hermitian(Matrix::identity(2));
  CHECK(es.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(orthonormality_error(es.eigenvectors) < 1e-10);
}

TEST_CASE("eig_hermitian: sigma_z already diagonal") {
  const EigenSystem es = eig_hermitian(sigma_z());
  CHECK(es.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  // Ascending order puts e2 first, then e1.
  CHECK(std::abs(es.eigenvectors(1, 0) - cx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(es.eigenvectors(0, 1) - cx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("eig_hermitian: sigma_x hand diagonalization") {
  const Matrix a = sigma_x();
  const EigenSystem es = eig_hermitian(a);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(es.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  // Phase convention makes the leading components real positive.
  CHECK(std::abs(es.eigenvectors(0, 0) - cx(r, 0.0)) < 1e-12);
  CHECK(std::abs(es.eigenvectors(1, 0) - cx(-r, 0.0)) < 1e-12);
  CHECK(std::abs(es.eigenvectors(0, 1) - cx(r, 0.0)) < 1e-12);
  CHECK(std::abs(es.eigenvectors(1, 1) - cx(r, 0.0)) < 1e-12);
  // A v = lambda v for both pairs.
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < 2; ++i) {
      cx av = 0.0;
      for (std::size_t j = 0; j < 2; ++j) av += a(i, j) * es.eigenvectors(j, k);
      CHECK(std::abs(av - es.eigenvalues[k] * es.eigenvectors(i, k)) < 1e-9);
    }
  }
}

TEST_CASE("eig_hermitian: random Hermitian reconstruction, d <= 8") {
  Rng rng(20240801);
  for (std::size_t d = 2; d <= 8; ++d) {
    for (int rep = 0; rep < 25; ++rep) {
      const Matrix a = random_hermitian(d, rng);
      const EigenSystem es = eig_hermitian(a);
      CHECK(reconstruction_error(a, es) < 1e-9);
      CHECK(orthonormality_error(es.eigenvectors) < 1e-10);
      for (std::size_t k = 1; k < d; ++k)
        CHECK(es.eigenvalues[k] >= es.eigenvalues[k - 1]);
    }
  }
}

TEST_CASE("eig_hermitian: deterministic output") {
  Rng rng(99);
  const Matrix a = random_hermitian(5, rng);
  const EigenSystem e1 = eig_hermitian(a);
  const EigenSystem e2 = eig_hermitian(a);
  CHECK(e1.eigenvalues == e2.eigenvalues);
  CHECK(max_abs_diff(e1.eigenvectors, e2.eigenvectors) == 0.0);
}

TEST_CASE("eig_hermitian: contract violations") {
  CHECK_THROWS_AS(eig_hermitian(Matrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(eig_hermitian(Matrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
                  std::invalid_argument);
}

TEST_CASE("expm_skew_hermitian: spectral formula by hand") {
  // exp(-i t sigma_z) = diag(exp(-it), exp(+it))
  const Matrix quarter = expm_skew_hermitian(sigma_z(), 3.14159265358979323846 / 2.0);
  CHECK(std::abs(quarter(0, 0) - cx(0.0, -1.0)) < 1e-12);
  CHECK(std::abs(quarter(1, 1) - cx(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(quarter(0, 1)) < 1e-12);

  const Matrix half = expm_skew_hermitian(sigma_z(), 3.14159265358979323846);
  CHECK(std::abs(half(0, 0) - cx(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(half(1, 1) - cx(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("expm_skew_hermitian: t = 0 is the identity") {
  Rng rng(7);
  const Matrix g = random_hermitian(4, rng);
  CHECK(approx_equal(expm_skew_hermitian(g, 0.0), Matrix::identity(4), 1e-12));
}

TEST_CASE("expm_skew_hermitian: unitarity and unit determinant magnitude") {
  Rng rng(1234);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.next_u64() % 5);
    const Matrix g = random_hermitian(d, rng);
    const Matrix u = expm_skew_hermitian(g, rng.uniform(-3.0, 3.0));
    CHECK(max_abs_diff(u.adjoint() * u, Matrix::identity(d)) < 1e-10);
    CHECK(std::abs(abs_det(u) - 1.0) < 1e-8);
  }
  CHECK_THROWS_AS(expm_skew_hermitian(Matrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), 1.0),
                  std::invalid_argument);
}

TEST_CASE("kron: direct expansions") {
  CHECK(approx_equal(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4), 0.0));
  const Matrix zi = kron(sigma_z(), Matrix::identity(2));
  const Matrix expect = Matrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                           {0.0, 1.0, 0.0, 0.0},
                                           {0.0, 0.0, -1.0, 0.0},
                                           {0.0, 0.0, 0.0, -1.0}});
  CHECK(approx_equal(zi, expect, 0.0));
}

TEST_CASE("kron: mixed product and associativity on random inputs") {
  Rng rng(42);
  auto random2 = [&rng] {
    Matrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        m(i, j) = cx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return m;
  };
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix a = random2(), b = random2(), c = random2(), d = random2();
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(slow_multiply(a, c), slow_multiply(b, d))) <
          1e-12);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("partial_trace: product states recover factors") {
  Rng rng(314);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix rho_a = random_density(3, rng).matrix();
    const Matrix rho_b = random_density(2, rng).matrix();
    const Matrix joint = kron(rho_a, rho_b);
    CHECK(max_abs_diff(partial_trace(joint, Subsystem::b, 3, 2), rho_a) < 1e-12);
    CHECK(max_abs_diff(partial_trace(joint, Subsystem::a, 3, 2), rho_b) < 1e-12);
    CHECK(std::abs(partial_trace(joint, Subsystem::b, 3, 2).trace() - joint.trace()) < 1e-12);
  }
}

TEST_CASE("partial_trace: Bell state and maximally mixed") {
  Matrix bell(4, 4);
  for (std::size_t k : {0, 3})
    for (std::size_t l : {0, 3}) bell(k, l) = 0.5;
  const Matrix half = 0.5 * Matrix::identity(2);
  CHECK(approx_equal(partial_trace(bell, Subsystem::b, 2, 2), half, 1e-15));
  CHECK(approx_equal(partial_trace(0.25 * Matrix::identity(4), Subsystem::a, 2, 2), half, 1e-15));
}

TEST_CASE("partial_trace: linearity and dimension contract") {
  Rng rng(2718);
  const Matrix m1 = random_hermitian(6, rng);
  const Matrix m2 = random_hermitian(6, rng);
  const cx alpha(0.3, -1.2);
  const Matrix lhs = partial_trace(alpha * m1 + m2, Subsystem::b, 2, 3);
  const Matrix rhs =
      alpha * partial_trace(m1, Subsystem::b, 2, 3) + partial_trace(m2, Subsystem::b, 2, 3);
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  CHECK_THROWS_AS(partial_trace(m1, Subsystem::b, 2, 2), std::invalid_argument);
}
