#pragma once

#include <cstdint>
#include <limits>

#include "seqent/bounds.hpp"
#include "seqent/random.hpp"

namespace seqent {

// One hidden variable of a classical temporal-correlation model: a weight,
// fixed response distributions for the prior measurement in each context, and
// a hidden quantum state that answers the later measurement via the Born rule.
struct LhsMember {
  double weight;
  Distribution prior_response_x;
  Distribution prior_response_z;
  DensityMatrix hidden_state;
};

class LhsEnsemble {
 public:
  explicit LhsEnsemble(std::vector<LhsMember> members);  // validates weights

  const std::vector<LhsMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t dim() const { return members_.front().hidden_state.dim(); }

 private:
  std::vector<LhsMember> members_;
};

enum class Context { x, z };

// Model statistics P(a, b) = sum_l w_l R_l(a) Tr[rho_l P_b]: the prior outcome
// a is answered by the fixed response, the later outcome b by the hidden state.
JointDistribution lhs_joint(const LhsEnsemble& ensemble, Context context,
                            const Observable& later);

// Bayesian posterior over the hidden variable given the prior outcome:
// w_{l|a} = w_l R_l(a) / sum_{l'} w_{l'} R_{l'}(a). Throws when the
// conditioning outcome has probability below 1e-12.
Distribution lhs_conditional_decomposition(const LhsEnsemble& ensemble, Context context,
                                           std::size_t prior_outcome);

// Reproducible generator: weights and responses from normalized uniform draws,
// hidden states as random pure-state mixtures. Same seed, same ensemble.
LhsEnsemble random_lhs_ensemble(std::size_t dim, std::size_t n_members,
                                std::uint64_t seed);

struct TheoremSweepSummary {
  int trials = 0;
  int violations = 0;  // steering witness failures; zero for every classical model
  double min_slack = std::numeric_limits<double>::infinity();
  // Proof-chain diagnostics, minimized over every member and both contexts.
  double min_member_mu_slack = std::numeric_limits<double>::infinity();
  double min_averaging_slack = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
};

// Drives `trials` random ensembles through the steering witness. Member counts
// cycle 1..8; trial k uses the derived seed stream derive_seed(seed, k), so
// results do not depend on evaluation order.
TheoremSweepSummary theorem_sweep(std::size_t dim, int trials, const Observable& x,
                                  const Observable& z, std::uint64_t seed);

}  // namespace seqent
