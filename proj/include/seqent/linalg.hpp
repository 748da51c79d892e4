#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace seqent {

using cx = std::complex<double>;

// Dense complex matrix, row major. Dimensions here stay desk scale (d <~ 25),
// so plain O(n^3) algorithms are used throughout.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // zero filled
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<cx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cx& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  cx operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Matrix adjoint() const;
  cx trace() const;
  bool is_hermitian(double tolerance) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cx s);

  const std::vector<cx>& entries() const { return e_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cx> e_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cx s, Matrix a);

// Largest |a_ij - b_ij|. Shapes must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

// Elementwise comparison under an absolute tolerance; float equality is never
// tested exactly.
bool approx_equal(const Matrix& a, const Matrix& b, double tolerance);

struct EigenSystem {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // orthonormal columns, k-th column pairs with eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
// Deterministic output: eigenvalues ascending (stable order), each
// eigenvector's first non-negligible component rotated onto the positive real
// axis. Throws std::invalid_argument for non-square or non-Hermitian input.
EigenSystem eig_hermitian(const Matrix& a);

// U = exp(-i t G) for Hermitian G, via the spectral decomposition of G.
// The result is unitary to machine precision.
Matrix expm_skew_hermitian(const Matrix& g, double t);

// Kronecker product, dimensions multiply.
Matrix kron(const Matrix& a, const Matrix& b);

enum class Subsystem { a, b };

// Trace out one tensor factor of a square matrix on a dim_a x dim_b product
// space (factor `a` is the slow index).
Matrix partial_trace(const Matrix& m, Subsystem traced_out, std::size_t dim_a,
                     std::size_t dim_b);

}  // namespace seqent
