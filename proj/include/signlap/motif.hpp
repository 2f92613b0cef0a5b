#pragma once

#include "signlap/spectral.hpp"

namespace signlap {

/// Suffix marking replica vertices: x becomes x'.
inline constexpr char kReplicaSuffix = '\'';

// A nonempty vertex subset Ω of a graph, in caller-given order. The replica
// Ω' follows the same order and is appended after the ambient vertices in the
// replicated graph.
class Motif {
 public:
  /// Throws GraphError for an empty or repeated subset, unknown ids, or when
  /// a replica id x' already names a vertex of g.
  Motif(const SignedGraph& g, const std::vector<VertexId>& omega);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t ambient_size() const noexcept { return ambient_size_; }
  /// Ambient vertex indices of Ω.
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  std::vector<VertexId> replica_ids() const;
  bool contains(std::size_t x) const { return position_.at(x) >= 0; }
  /// Position of ambient vertex x within Ω, or -1.
  long position(std::size_t x) const { return position_.at(x); }

 private:
  std::size_t ambient_size_ = 0;
  std::vector<std::size_t> members_;
  std::vector<VertexId> ids_;
  std::vector<long> position_;
};

/// Δ_Ω(x,y) = δ_xy - κ_xy/m(x) for x, y ∈ Ω, with m the ambient degree.
DenseMatrix dirichlet_laplacian(const SignedGraph& g, const Motif& omega);

/// Eigenpairs of Δ_Ω, ascending, orthonormal in ℓ²(Ω, m).
EigenDecomposition dirichlet_eigh(const SignedGraph& g, const Motif& omega);

/// Γ^Ω: g plus a copy Ω' joined to V∖Ω exactly as Ω is, with Ω's internal
/// edges copied and no edges between Ω and Ω'.
SignedGraph replicate(const SignedGraph& g, const Motif& omega);

/// f' = f on Ω, -f on Ω', 0 elsewhere, in the vertex order of replicate().
Vector extend_eigenvector(const Vector& f, const Motif& omega);

struct MotifEigenCheck {
  double eigenvalue = 0.0;
  double spectrum_distance = 0.0;  // min |λ - μ| over μ ∈ σ(Γ^Ω)
  double residual = 0.0;           // ‖Δ_{Γ^Ω} f' - λ f'‖∞
};

struct MotifReport {
  std::vector<MotifEigenCheck> checks;
  Spectrum replicated_spectrum;
  double tol = 0.0;
  bool passed = false;
};

MotifReport verify_motif_inclusion(const SignedGraph& g, const Motif& omega, double tol = kSpectrumTol);

}  // namespace signlap
