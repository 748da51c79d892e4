#include "seqent/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "seqent/tolerances.hpp"

namespace seqent {

namespace {

// Clamp tiny negatives, reject real deviations, renormalize the rest.
void clean_probabilities(std::vector<double>& p, const char* who) {
  double sum = 0.0;
  for (double& v : p) {
    if (v < 0.0) {
      if (v < -tol::prob_clamp)
        throw std::invalid_argument(std::string(who) + ": negative probability " +
                                    std::to_string(v));
      v = 0.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol::prob_sum)
    throw std::invalid_argument(std::string(who) + ": probabilities sum to " +
                                std::to_string(sum));
  for (double& v : p) v /= sum;
}

double real_trace_product(const Matrix& a, const Matrix& b) {
  // Tr[a b] for matching square matrices.
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += (a(i, j) * b(j, i)).real();
  return t;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.square()) throw std::invalid_argument("DensityMatrix: matrix not square");
  if (!m_.is_hermitian(tol::hermiticity))
    throw std::invalid_argument("DensityMatrix: matrix not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > tol::state_trace ||
      std::abs(m_.trace().imag()) > tol::state_trace)
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  const EigenSystem es = eig_hermitian(m_);
  if (es.eigenvalues.front() < -tol::state_eigen_floor)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(es.eigenvalues.front()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  Matrix m = Matrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const std::vector<cx>& amplitudes) {
  const std::size_t d = amplitudes.size();
  double norm2 = 0.0;
  for (const cx& a : amplitudes) norm2 += std::norm(a);
  if (norm2 <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm2;
  return DensityMatrix(std::move(m));
}

Observable::Observable(Matrix m) : m_(std::move(m)), spectrum_(eig_hermitian(m_)) {
  const std::size_t d = m_.rows();
  std::size_t k = 0;
  while (k < d) {
    // Grow the cluster while neighbors sit within the degeneracy width.
    std::size_t end = k + 1;
    while (end < d &&
           spectrum_.eigenvalues[end] - spectrum_.eigenvalues[end - 1] < tol::degeneracy_cluster)
      ++end;
    Matrix proj(d, d);
    double value = 0.0;
    for (std::size_t c = k; c < end; ++c) {
      value += spectrum_.eigenvalues[c];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          proj(i, j) += spectrum_.eigenvectors(i, c) * std::conj(spectrum_.eigenvectors(j, c));
    }
    outcomes_.push_back(value / static_cast<double>(end - k));
    projectors_.push_back(std::move(proj));
    k = end;
  }
}

JointDistribution::JointDistribution(std::vector<double> labels_a,
                                     std::vector<double> labels_b,
                                     std::vector<double> p_row_major)
    : labels_a_(std::move(labels_a)),
      labels_b_(std::move(labels_b)),
      p_(std::move(p_row_major)) {
  if (labels_a_.empty() || labels_b_.empty() || p_.size() != labels_a_.size() * labels_b_.size())
    throw std::invalid_argument("JointDistribution: label/probability shape mismatch");
  clean_probabilities(p_, "JointDistribution");
}

std::vector<double> JointDistribution::marginal_a() const {
  std::vector<double> m(n_a(), 0.0);
  for (std::size_t i = 0; i < n_a(); ++i)
    for (std::size_t j = 0; j < n_b(); ++j) m[i] += at(i, j);
  return m;
}

std::vector<double> JointDistribution::marginal_b() const {
  std::vector<double> m(n_b(), 0.0);
  for (std::size_t i = 0; i < n_a(); ++i)
    for (std::size_t j = 0; j < n_b(); ++j) m[j] += at(i, j);
  return m;
}

BipartiteState::BipartiteState(std::size_t dim_a, std::size_t dim_b, Matrix m)
    : dim_a_(dim_a), dim_b_(dim_b), state_(std::move(m)) {
  if (state_.dim() != dim_a_ * dim_b_)
    throw std::invalid_argument("BipartiteState: dims do not factor the matrix");
}

Matrix BipartiteState::reduced_a() const {
  return partial_trace(matrix(), Subsystem::b, dim_a_, dim_b_);
}

Matrix BipartiteState::reduced_b() const {
  return partial_trace(matrix(), Subsystem::a, dim_a_, dim_b_);
}

std::vector<double> measure_distribution(const DensityMatrix& rho, const Observable& obs) {
  if (rho.dim() != obs.dim())
    throw std::invalid_argument("measure_distribution: dimension mismatch");
  std::vector<double> p(obs.n_outcomes());
  for (std::size_t k = 0; k < obs.n_outcomes(); ++k)
    p[k] = real_trace_product(rho.matrix(), obs.projector(k));
  clean_probabilities(p, "measure_distribution");
  return p;
}

JointDistribution sequential_joint(const DensityMatrix& rho, const Observable& first,
                                   const Observable& second) {
  if (rho.dim() != first.dim() || rho.dim() != second.dim())
    throw std::invalid_argument("sequential_joint: dimension mismatch");
  const std::size_t na = first.n_outcomes();
  const std::size_t nb = second.n_outcomes();
  std::vector<double> p(na * nb);
  for (std::size_t a = 0; a < na; ++a) {
    const Matrix collapsed = first.projector(a) * rho.matrix() * first.projector(a);
    for (std::size_t b = 0; b < nb; ++b)
      p[a * nb + b] = real_trace_product(collapsed, second.projector(b));
  }
  return JointDistribution(first.outcomes(), second.outcomes(), std::move(p));
}

JointDistribution sequential_joint_spin(Spin spin, double angle) {
  const std::size_t d = spin.dim();
  const WignerD w = wigner_small_d(spin, angle);
  std::vector<double> labels(d);
  for (std::size_t i = 0; i < d; ++i) labels[i] = -spin.s() + static_cast<double>(i);
  std::vector<double> p(d * d);
  // Labels run m = -s..s while WignerD rows run m' = s..-s, hence the flips.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const double amp = w(d - 1 - b, d - 1 - a);
      p[a * d + b] = amp * amp / static_cast<double>(d);
    }
  return JointDistribution(labels, labels, std::move(p));
}

BipartiteState post_measurement_bipartite(const BipartiteState& rho_ab,
                                          const Observable& on_a) {
  if (on_a.dim() != rho_ab.dim_a())
    throw std::invalid_argument("post_measurement_bipartite: observable dimension mismatch");
  const Matrix id_b = Matrix::identity(rho_ab.dim_b());
  Matrix out(rho_ab.matrix().rows(), rho_ab.matrix().cols());
  for (std::size_t k = 0; k < on_a.n_outcomes(); ++k) {
    const Matrix pk = kron(on_a.projector(k), id_b);
    out += pk * rho_ab.matrix() * pk;
  }
  return BipartiteState(rho_ab.dim_a(), rho_ab.dim_b(), std::move(out));
}

BipartiteState bell_state(std::size_t d) {
  if (d < 2) throw std::invalid_argument("bell_state: dimension must be >= 2");
  Matrix m(d * d, d * d);
  const double amp = 1.0 / static_cast<double>(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) m(k * d + k, l * d + l) = amp;
  return BipartiteState(d, d, std::move(m));
}

}  // namespace seqent
