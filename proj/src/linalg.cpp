#include "seqent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "seqent/tolerances.hpp"

namespace seqent {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, cx(0.0, 0.0)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: zero dimension");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<cx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (cx v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cx Matrix::trace() const {
  if (!square()) throw std::invalid_argument("trace: matrix not square");
  cx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_hermitian(double tolerance) const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tolerance) return false;
  return true;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "operator+=");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "operator-=");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Matrix& Matrix::operator*=(cx s) {
  for (auto& v : e_) v *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cx s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimension mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cx aik = a(i, k);
      if (aik == cx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tolerance) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tolerance;
}

// ------------------------------ eigensolver ---------------------------------

namespace {

// One complex Jacobi rotation zeroing A(p,q). A is Hermitian and updated in
// place; the rotation is accumulated into V.
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const cx apq = a(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const cx phase = apq / b;
  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double tau = (gamma - alpha) / (2.0 * b);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // A <- A R, columns p and q
  for (std::size_t k = 0; k < n; ++k) {
    const cx akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(phase) * akq;
    a(k, q) = s * phase * akp + c * akq;
  }
  // A <- R' A, rows p and q
  for (std::size_t k = 0; k < n; ++k) {
    const cx apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * std::conj(phase) * apk + c * aqk;
  }
  a(p, p) = cx(alpha - t * b, 0.0);
  a(q, q) = cx(gamma + t * b, 0.0);
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  // V <- V R
  for (std::size_t k = 0; k < n; ++k) {
    const cx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
    v(k, q) = s * phase * vkp + c * vkq;
  }
}

double max_offdiag(const Matrix& a) {
  double m = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) m = std::max(m, std::abs(a(p, q)));
  return m;
}

}  // namespace

EigenSystem eig_hermitian(const Matrix& a_in) {
  if (!a_in.square()) throw std::invalid_argument("eig_hermitian: matrix not square");
  if (!a_in.is_hermitian(tol::hermiticity))
    throw std::invalid_argument("eig_hermitian: matrix not Hermitian");

  const std::size_t n = a_in.rows();
  // Symmetrize exactly so roundoff in the input cannot bias the sweeps.
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = cx(a_in(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cx m = 0.5 * (a_in(i, j) + std::conj(a_in(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  Matrix v = Matrix::identity(n);

  double scale = 0.0;
  for (const cx& e : a.entries()) scale = std::max(scale, std::abs(e));
  const double stop = 1e-14 * std::max(1.0, scale);

  constexpr int max_sweeps = 64;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (max_offdiag(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 0.0) jacobi_rotate(a, v, p, q);
  }
  if (sweep == max_sweeps && max_offdiag(a) > stop)
    throw std::runtime_error("eig_hermitian: Jacobi sweep did not converge");

  // Ascending eigenvalues, stable under ties.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  es.eigenvalues.resize(n);
  es.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.eigenvalues[k] = a(order[k], order[k]).real();
    // Phase convention: first component above threshold made real positive.
    cx lead = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, order[k])) > 1e-12) {
        lead = v(i, order[k]);
        break;
      }
    }
    const cx phase = (lead == cx(0.0, 0.0)) ? cx(1.0, 0.0) : std::conj(lead) / std::abs(lead);
    for (std::size_t i = 0; i < n; ++i) es.eigenvectors(i, k) = phase * v(i, order[k]);
  }
  return es;
}

Matrix expm_skew_hermitian(const Matrix& g, double t) {
  const EigenSystem es = eig_hermitian(g);  // validates shape and hermiticity
  const std::size_t n = g.rows();
  Matrix u(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const cx ph = std::exp(cx(0.0, -t * es.eigenvalues[k]));
    for (std::size_t i = 0; i < n; ++i) {
      const cx w = ph * es.eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j)
        u(i, j) += w * std::conj(es.eigenvectors(j, k));
    }
  }
  return u;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cx aij = a(i, j);
      if (aij == cx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

Matrix partial_trace(const Matrix& m, Subsystem traced_out, std::size_t dim_a,
                     std::size_t dim_b) {
  if (!m.square() || m.rows() != dim_a * dim_b)
    throw std::invalid_argument("partial_trace: dimensions do not factor the matrix");
  if (traced_out == Subsystem::b) {
    Matrix r(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j)
        for (std::size_t k = 0; k < dim_b; ++k)
          r(i, j) += m(i * dim_b + k, j * dim_b + k);
    return r;
  }
  Matrix r(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k)
    for (std::size_t l = 0; l < dim_b; ++l)
      for (std::size_t i = 0; i < dim_a; ++i)
        r(k, l) += m(i * dim_b + k, i * dim_b + l);
  return r;
}

}  // namespace seqent
