#pragma once

#include "seqent/entropy.hpp"

namespace seqent {

// Result of an lhs >= rhs inequality check, in bits.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool satisfied = false;  // slack >= -tol::bound_slack
};

// c(X, Z) = max_{x,z} |<x|z>| over eigenvector pairs; in [1/sqrt(d), 1].
// Degenerate observables are rejected.
double max_overlap(const Observable& x, const Observable& z);

// Robertson product bound: dX dZ >= |<[X, Z]>| / 2.
BoundReport robertson_check(const DensityMatrix& rho, const Observable& x,
                            const Observable& z);

// Maassen-Uffink entropic bound: H(X) + H(Z) >= -2 log2 c(X, Z).
BoundReport maassen_uffink_check(const DensityMatrix& rho, const Observable& x,
                                 const Observable& z);

// Quantum-memory bound: S(X|B) + S(Z|B) >= -2 log2 c + S(A|B), with the
// conditional entropies taken on the post-measured bipartite states.
BoundReport berta_check(const BipartiteState& rho_ab, const Observable& x,
                        const Observable& z);

// Temporal-memory floor: H(X|X0) + H(Z|Z0) >= max[0, -2log2 c - Hmin(X) - Hmin(Z)]
// where Hmin pairs each later observable with its prior via the smaller of the
// two unconditioned measurement entropies on rho.
BoundReport conditioned_bound_check(const DensityMatrix& rho, const Observable& x0,
                                    const Observable& x, const Observable& z0,
                                    const Observable& z);

// Steering form of the temporal bound on externally supplied joints:
// H(X|X0) + H(Z|Z0) >= -2 log2 c. satisfied == false certifies that no
// classical (hidden-state) model reproduces the two joints.
BoundReport steering_witness(const JointDistribution& jx, const JointDistribution& jz,
                             double c);

// Spin rotor witness M_s(theta, phi) = H(theta) + H(phi) + 2 log2 c(Sx, Sz)
// built from the closed-form sequential spin joints; negative values certify
// quantum temporal memory.
double memory_witness(Spin spin, double theta, double phi);

}  // namespace seqent
