#include "seqent/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "seqent/tolerances.hpp"

namespace seqent {

namespace {

double plog2p(double p) {
  if (p < tol::entropy_cutoff) return 0.0;
  return p * std::log2(p);
}

double entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) h -= plog2p(v);
  return h;
}

}  // namespace

Distribution::Distribution(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("Distribution: empty");
  double sum = 0.0;
  for (double& v : p_) {
    if (v < 0.0) {
      if (v < -tol::prob_clamp)
        throw std::invalid_argument("Distribution: negative entry " + std::to_string(v));
      v = 0.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol::prob_sum)
    throw std::invalid_argument("Distribution: entries sum to " + std::to_string(sum));
  for (double& v : p_) v /= sum;
}

double shannon(const Distribution& p) { return entropy_bits(p.p()); }

double shannon(const std::vector<double>& p) { return shannon(Distribution(p)); }

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("binary_entropy: p outside [0, 1]");
  return -plog2p(p) - plog2p(1.0 - p);
}

double conditional_entropy(const JointDistribution& joint) {
  return entropy_bits(joint.probabilities()) - entropy_bits(joint.marginal_a());
}

double mutual_information(const JointDistribution& joint) {
  return entropy_bits(joint.marginal_a()) + entropy_bits(joint.marginal_b()) -
         entropy_bits(joint.probabilities());
}

double relative_entropy(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("relative_entropy: length mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < tol::entropy_cutoff) continue;
    if (q[k] < tol::entropy_cutoff) return std::numeric_limits<double>::infinity();
    d += p[k] * std::log2(p[k] / q[k]);
  }
  return d;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const EigenSystem es = eig_hermitian(rho.matrix());
  double s = 0.0;
  for (double lambda : es.eigenvalues) {
    if (lambda <= tol::vn_eigen_cutoff) continue;  // incl. numerical negatives
    s -= lambda * std::log2(lambda);
  }
  return s;
}

double conditional_von_neumann(const BipartiteState& rho_ab) {
  const double s_ab = von_neumann_entropy(rho_ab.state());
  const double s_b = von_neumann_entropy(DensityMatrix(rho_ab.reduced_b()));
  return s_ab - s_b;
}

}  // namespace seqent
