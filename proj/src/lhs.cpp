#include "seqent/lhs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "seqent/tolerances.hpp"

namespace seqent {

LhsEnsemble::LhsEnsemble(std::vector<LhsMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("LhsEnsemble: no members");
  double total = 0.0;
  const std::size_t d = members_.front().hidden_state.dim();
  for (const LhsMember& m : members_) {
    if (m.weight < 0.0 || m.weight > 1.0 + tol::prob_clamp)
      throw std::invalid_argument("LhsEnsemble: weight outside [0, 1]");
    if (m.hidden_state.dim() != d)
      throw std::invalid_argument("LhsEnsemble: mixed hidden-state dimensions");
    total += m.weight;
  }
  if (std::abs(total - 1.0) > tol::prob_clamp)
    throw std::invalid_argument("LhsEnsemble: weights sum to " + std::to_string(total));
}

namespace {

const Distribution& prior_of(const LhsMember& m, Context context) {
  return context == Context::x ? m.prior_response_x : m.prior_response_z;
}

}  // namespace

JointDistribution lhs_joint(const LhsEnsemble& ensemble, Context context,
                            const Observable& later) {
  if (later.dim() != ensemble.dim())
    throw std::invalid_argument("lhs_joint: observable dimension mismatch");
  const std::size_t na = prior_of(ensemble.members().front(), context).size();
  const std::size_t nb = later.n_outcomes();
  std::vector<double> p(na * nb, 0.0);
  for (const LhsMember& m : ensemble.members()) {
    const Distribution& prior = prior_of(m, context);
    if (prior.size() != na)
      throw std::invalid_argument("lhs_joint: inconsistent prior outcome counts");
    const std::vector<double> born = measure_distribution(m.hidden_state, later);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b) p[a * nb + b] += m.weight * prior[a] * born[b];
  }
  std::vector<double> labels_a(na);
  for (std::size_t a = 0; a < na; ++a) labels_a[a] = static_cast<double>(a);
  return JointDistribution(std::move(labels_a), later.outcomes(), std::move(p));
}

Distribution lhs_conditional_decomposition(const LhsEnsemble& ensemble, Context context,
                                           std::size_t prior_outcome) {
  std::vector<double> w(ensemble.size());
  double marginal = 0.0;
  for (std::size_t l = 0; l < ensemble.size(); ++l) {
    const LhsMember& m = ensemble.members()[l];
    const Distribution& prior = prior_of(m, context);
    if (prior_outcome >= prior.size())
      throw std::invalid_argument("lhs_conditional_decomposition: outcome out of range");
    w[l] = m.weight * prior[prior_outcome];
    marginal += w[l];
  }
  if (marginal <= 1e-12)
    throw std::invalid_argument(
        "lhs_conditional_decomposition: conditioning outcome has zero probability");
  for (double& v : w) v /= marginal;
  return Distribution(std::move(w));
}

LhsEnsemble random_lhs_ensemble(std::size_t dim, std::size_t n_members,
                                std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("random_lhs_ensemble: dim must be >= 2");
  if (n_members < 1) throw std::invalid_argument("random_lhs_ensemble: need a member");
  Rng rng(seed);
  const std::vector<double> weights = random_distribution(n_members, rng);
  std::vector<LhsMember> members;
  members.reserve(n_members);
  for (std::size_t l = 0; l < n_members; ++l) {
    members.push_back(LhsMember{weights[l],
                                Distribution(random_distribution(dim, rng)),
                                Distribution(random_distribution(dim, rng)),
                                random_density(dim, rng)});
  }
  return LhsEnsemble(std::move(members));
}

TheoremSweepSummary theorem_sweep(std::size_t dim, int trials, const Observable& x,
                                  const Observable& z, std::uint64_t seed) {
  if (x.dim() != dim || z.dim() != dim)
    throw std::invalid_argument("theorem_sweep: observable dimension mismatch");
  const double c = max_overlap(x, z);
  const double mu_floor = -2.0 * std::log2(c);

  TheoremSweepSummary summary;
  summary.trials = trials;
  summary.seed = seed;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n_members = 1 + static_cast<std::size_t>(trial % 8);
    const LhsEnsemble ensemble =
        random_lhs_ensemble(dim, n_members, derive_seed(seed, static_cast<std::uint64_t>(trial)));

    const JointDistribution jx = lhs_joint(ensemble, Context::x, x);
    const JointDistribution jz = lhs_joint(ensemble, Context::z, z);
    const BoundReport witness = steering_witness(jx, jz, c);
    summary.min_slack = std::min(summary.min_slack, witness.slack);
    if (!witness.satisfied) ++summary.violations;

    // Per-member Maassen-Uffink step of the proof.
    double avg_hx = 0.0, avg_hz = 0.0;
    for (const LhsMember& m : ensemble.members()) {
      const double hx = shannon(measure_distribution(m.hidden_state, x));
      const double hz = shannon(measure_distribution(m.hidden_state, z));
      summary.min_member_mu_slack =
          std::min(summary.min_member_mu_slack, hx + hz - mu_floor);
      avg_hx += m.weight * hx;
      avg_hz += m.weight * hz;
    }
    // Averaging step: conditioning cannot beat the ensemble average.
    summary.min_averaging_slack =
        std::min({summary.min_averaging_slack, conditional_entropy(jx) - avg_hx,
                  conditional_entropy(jz) - avg_hz});
  }
  return summary;
}

}  // namespace seqent
