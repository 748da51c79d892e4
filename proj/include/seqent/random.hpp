#pragma once

#include <cstdint>
#include <random>

#include "seqent/quantum.hpp"

namespace seqent {

// Deterministic random source for sweeps and tests. The core is
// std::mt19937_64 (bit-exact output per the C++ standard); doubles come from
// the top 53 bits, (word >> 11) * 2^-53, so streams replay identically for a
// given seed on any IEEE-754 platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

// Per-trial seed stream: splitmix64 finalizer over base + golden-ratio steps.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Normalized uniform draw over n outcomes.
std::vector<double> random_distribution(std::size_t n, Rng& rng);

// Random mixture of `dim` random pure states; always a valid DensityMatrix.
DensityMatrix random_density(std::size_t dim, Rng& rng);

// Hermitian matrix with uniform entries: diagonal in [-1, 1], off-diagonal
// real and imaginary parts in [-1, 1].
Matrix random_hermitian(std::size_t dim, Rng& rng);

// Random Hermitian observable, redrawn until the spectrum has no cluster
// narrower than min_gap (so every projector is rank 1).
Observable random_nondegenerate_observable(std::size_t dim, Rng& rng,
                                           double min_gap = 1e-6);

// Random mixture of dim_a*dim_b pure states on the product space.
BipartiteState random_bipartite(std::size_t dim_a, std::size_t dim_b, Rng& rng);

}  // namespace seqent
