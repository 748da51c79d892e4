#include "seqent/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seqent/tolerances.hpp"

namespace seqent {

namespace {

BoundReport make_report(double lhs, double rhs) {
  BoundReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.satisfied = r.slack >= -tol::bound_slack;
  return r;
}

double expectation(const DensityMatrix& rho, const Matrix& op) {
  cx t = 0.0;
  for (std::size_t i = 0; i < op.rows(); ++i)
    for (std::size_t j = 0; j < op.cols(); ++j) t += rho.matrix()(i, j) * op(j, i);
  return t.real();
}

double std_deviation(const DensityMatrix& rho, const Observable& o) {
  const double mean = expectation(rho, o.matrix());
  const double mean_sq = expectation(rho, o.matrix() * o.matrix());
  return std::sqrt(std::max(0.0, mean_sq - mean * mean));
}

}  // namespace

double max_overlap(const Observable& x, const Observable& z) {
  if (x.dim() != z.dim()) throw std::invalid_argument("max_overlap: dimension mismatch");
  if (!x.nondegenerate() || !z.nondegenerate())
    throw std::invalid_argument("max_overlap: degenerate observable unsupported");
  const Matrix& vx = x.spectrum().eigenvectors;
  const Matrix& vz = z.spectrum().eigenvectors;
  const Matrix overlaps = vx.adjoint() * vz;
  double c = 0.0;
  for (const cx& o : overlaps.entries()) c = std::max(c, std::abs(o));
  return std::min(c, 1.0);
}

BoundReport robertson_check(const DensityMatrix& rho, const Observable& x,
                            const Observable& z) {
  if (rho.dim() != x.dim() || rho.dim() != z.dim())
    throw std::invalid_argument("robertson_check: dimension mismatch");
  const double lhs = std_deviation(rho, x) * std_deviation(rho, z);
  const Matrix commutator = x.matrix() * z.matrix() - z.matrix() * x.matrix();
  cx mean = 0.0;
  for (std::size_t i = 0; i < commutator.rows(); ++i)
    for (std::size_t j = 0; j < commutator.cols(); ++j)
      mean += rho.matrix()(i, j) * commutator(j, i);
  return make_report(lhs, 0.5 * std::abs(mean));
}

BoundReport maassen_uffink_check(const DensityMatrix& rho, const Observable& x,
                                 const Observable& z) {
  const double c = max_overlap(x, z);
  const double lhs = shannon(measure_distribution(rho, x)) +
                     shannon(measure_distribution(rho, z));
  return make_report(lhs, -2.0 * std::log2(c));
}

BoundReport berta_check(const BipartiteState& rho_ab, const Observable& x,
                        const Observable& z) {
  const double c = max_overlap(x, z);
  const double lhs = conditional_von_neumann(post_measurement_bipartite(rho_ab, x)) +
                     conditional_von_neumann(post_measurement_bipartite(rho_ab, z));
  const double rhs = -2.0 * std::log2(c) + conditional_von_neumann(rho_ab);
  return make_report(lhs, rhs);
}

BoundReport conditioned_bound_check(const DensityMatrix& rho, const Observable& x0,
                                    const Observable& x, const Observable& z0,
                                    const Observable& z) {
  const double c = max_overlap(x, z);
  const double lhs = conditional_entropy(sequential_joint(rho, x0, x)) +
                     conditional_entropy(sequential_joint(rho, z0, z));
  const double h_min_x = std::min(shannon(measure_distribution(rho, x)),
                                  shannon(measure_distribution(rho, x0)));
  const double h_min_z = std::min(shannon(measure_distribution(rho, z)),
                                  shannon(measure_distribution(rho, z0)));
  const double rhs = std::max(0.0, -2.0 * std::log2(c) - h_min_x - h_min_z);
  return make_report(lhs, rhs);
}

BoundReport steering_witness(const JointDistribution& jx, const JointDistribution& jz,
                             double c) {
  if (!(c > 0.0 && c <= 1.0))
    throw std::invalid_argument("steering_witness: overlap outside (0, 1]");
  const double lhs = conditional_entropy(jx) + conditional_entropy(jz);
  return make_report(lhs, -2.0 * std::log2(c));
}

double memory_witness(Spin spin, double theta, double phi) {
  const SpinOperators ops = spin_operators(spin);
  const double c = max_overlap(Observable(ops.sx), Observable(ops.sz));
  return conditional_entropy(sequential_joint_spin(spin, theta)) +
         conditional_entropy(sequential_joint_spin(spin, phi)) + 2.0 * std::log2(c);
}

}  // namespace seqent
