#pragma once

// Central numeric tolerances. Every module reads these; no stray epsilons
// elsewhere.
namespace seqent::tol {

inline constexpr double hermiticity = 1e-10;           // max-norm ||A - A'||
inline constexpr double eig_reconstruct = 1e-9;        // ||A - V L V'||
inline constexpr double unitarity = 1e-10;
inline constexpr double trace_preserve = 1e-12;
inline constexpr double state_trace = 1e-10;
inline constexpr double state_eigen_floor = 1e-10;     // eigenvalues >= -this
inline constexpr double projector_complete = 1e-10;
inline constexpr double projector_orthogonal = 1e-9;
inline constexpr double degeneracy_cluster = 1e-9;     // eigenvalue cluster width
inline constexpr double prob_clamp = 1e-12;            // [-this, 0) clamps to 0
inline constexpr double prob_sum = 1e-10;              // |sum - 1| allowed
inline constexpr double entropy_cutoff = 1e-15;        // p below this adds 0
inline constexpr double vn_eigen_cutoff = 1e-12;
inline constexpr double bound_slack = 1e-9;            // satisfied iff slack >= -this
inline constexpr double negative_cell = 1e-9;          // grid cell "negative" below -this

}  // namespace seqent::tol
