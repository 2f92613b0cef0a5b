#pragma once

#include <cstdint>
#include <optional>

#include "signlap/graph.hpp"

namespace signlap {

/// Witness that Γ^θ is isomorphic to -Γ via `perm`.
struct SymmetryCertificate {
  SwitchingFunction theta;
  VertexBijection perm;

  friend bool operator==(const SymmetryCertificate&, const SymmetryCertificate&) = default;
};

/// θ = +1 on the first colour class and -1 on the second, so Γ^θ = -Γ.
/// Empty iff the underlying graph has an odd cycle.
std::optional<SwitchingFunction> find_bipartite_switching(const SignedGraph& g);

struct SearchBudget {
  /// Above this order the search refuses instead of enumerating 2^{N-1} switchings.
  std::size_t max_vertices = 12;
  /// Threads sharing the switching enumeration; the result does not depend on it.
  unsigned workers = 1;
};

enum class SearchStatus { Found, Absent, BudgetExceeded };

struct CertificateSearch {
  SearchStatus status = SearchStatus::Absent;
  std::optional<SymmetryCertificate> certificate;
  std::uint64_t switchings_tried = 0;
};

// Exhaustive search for the lexicographically first (θ, perm) with
// Γ^θ ≅ -Γ. Switchings are enumerated with the lowest-id vertex fixed to +1,
// as sequences over the id-sorted vertices with +1 ordered before -1;
// permutations are enumerated by backtracking over id-sorted vertices and
// id-sorted candidate images, pruned by incident weight and signed-weight
// multisets. Requires a connected graph.
CertificateSearch find_symmetry_certificate(const SignedGraph& g, const SearchBudget& budget = {});

/// True iff perm is an exact isomorphism Γ^θ → -Γ. Throws GraphError when the
/// certificate does not have the shape of g.
bool verify_certificate(const SignedGraph& g, const SymmetryCertificate& cert);

/// Exact isomorphism search between two graphs on the same vertex count with
/// invariant pruning; returns the lexicographically first bijection.
std::optional<VertexBijection> find_isomorphism(const SignedGraph& from, const SignedGraph& to);

}  // namespace signlap
