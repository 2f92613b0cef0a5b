#pragma once

#include <vector>

#include "signlap/graph.hpp"

namespace signlap::testing {

// Eigenvalues of D^{-1/2}(D - A)D^{-1/2} from the characteristic polynomials
// of its leading principal minors, evaluated exactly over the rationals.
// For symmetric M the number of eigenvalues below t equals the number of sign
// changes in 1, det(M_1 - t), ..., det(M_N - t); bisection on that count
// brackets every eigenvalue, repeated ones included. Determinants use the
// Leibniz expansion, so this is intended for N <= 6.
std::vector<double> charpoly_eigenvalues(const SignedGraph& g, int bisection_steps = 60);

/// Signed adjacency table built straight from the edge list.
std::vector<std::vector<double>> signed_adjacency_table(const SignedGraph& g);

/// Does any θ (all 2^N) and any permutation (all N!) satisfy Γ^θ ≅ -Γ?
bool brute_force_certificate_exists(const SignedGraph& g);

/// Exhaustive check over all 2^N switchings for an all-positive (target = +1)
/// or all-negative (target = -1) switched graph.
bool brute_force_switches_to(const SignedGraph& g, int target);

}  // namespace signlap::testing
