#include "seqent/random.hpp"

#include <cmath>
#include <stdexcept>

namespace seqent {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer (Steele et al.), constants as published.
  std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> random_distribution(std::size_t n, Rng& rng) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = rng.uniform() + 1e-12;  // keep strictly positive so normalization is safe
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

namespace {

std::vector<cx> random_unit_vector(std::size_t dim, Rng& rng) {
  std::vector<cx> v(dim);
  double norm2 = 0.0;
  while (norm2 < 1e-12) {
    norm2 = 0.0;
    for (cx& a : v) {
      a = cx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      norm2 += std::norm(a);
    }
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cx& a : v) a *= inv;
  return v;
}

Matrix random_mixture(std::size_t dim, std::size_t n_pure, Rng& rng) {
  const std::vector<double> w = random_distribution(n_pure, rng);
  Matrix m(dim, dim);
  for (std::size_t k = 0; k < n_pure; ++k) {
    const std::vector<cx> psi = random_unit_vector(dim, rng);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) += w[k] * psi[i] * std::conj(psi[j]);
  }
  // Exact Hermitian symmetrization kills accumulation roundoff.
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = cx(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const cx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

}  // namespace

DensityMatrix random_density(std::size_t dim, Rng& rng) {
  return DensityMatrix(random_mixture(dim, dim, rng));
}

Matrix random_hermitian(std::size_t dim, Rng& rng) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = rng.uniform(-1.0, 1.0);
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = cx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Observable random_nondegenerate_observable(std::size_t dim, Rng& rng, double min_gap) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Observable obs(random_hermitian(dim, rng));
    bool gapped = obs.nondegenerate();
    for (std::size_t k = 0; gapped && k + 1 < obs.n_outcomes(); ++k)
      gapped = obs.outcome(k + 1) - obs.outcome(k) >= min_gap;
    if (gapped) return obs;
  }
  throw std::runtime_error("random_nondegenerate_observable: no gapped draw in 256 tries");
}

BipartiteState random_bipartite(std::size_t dim_a, std::size_t dim_b, Rng& rng) {
  const std::size_t d = dim_a * dim_b;
  return BipartiteState(dim_a, dim_b, random_mixture(d, d, rng));
}

}  // namespace seqent
