#pragma once

#include <vector>

#include "seqent/quantum.hpp"

namespace seqent {

// Probability vector: entries >= 0 (tiny negatives clamp), sum 1 within
// tol::prob_sum. Validated at construction.
class Distribution {
 public:
  explicit Distribution(std::vector<double> p);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t k) const { return p_[k]; }
  const std::vector<double>& p() const { return p_; }

 private:
  std::vector<double> p_;
};

// All entropies below are in bits (base-2 logs); p log p is read as 0 for
// p < tol::entropy_cutoff.

double shannon(const Distribution& p);
double shannon(const std::vector<double>& p);  // validates, then delegates

double binary_entropy(double p);  // throws outside [0, 1]

// H(B|A) = H(A,B) - H(A) with A the first (prior) index. Computed via the
// joint/marginal difference, never via per-row averaging, so near-zero
// marginals cannot blow up.
double conditional_entropy(const JointDistribution& joint);

// H(A:B) = H(A) + H(B) - H(A,B).
double mutual_information(const JointDistribution& joint);

// D(p||q); +infinity when p has weight where q has none.
double relative_entropy(const Distribution& p, const Distribution& q);

// S(rho) = -sum lambda log2 lambda over the spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

// S(A|B) = S(rho_AB) - S(rho_B); negative values signal entanglement.
double conditional_von_neumann(const BipartiteState& rho_ab);

}  // namespace seqent
