#pragma once

#include "signlap/graph.hpp"
#include "signlap/linalg.hpp"

namespace signlap {

/// Default absolute tolerance for comparing spectra.
inline constexpr double kSpectrumTol = 1e-8;

/// Signed adjacency matrix A(x,y) = κ_xy.
DenseMatrix adjacency_matrix(const SignedGraph& g);

/// Δ = I - D⁻¹A in the vertex order of g.
DenseMatrix laplacian(const SignedGraph& g);

/// P = D⁻¹A. Rows need not sum to one once negative edges are present.
DenseMatrix transition_matrix(const SignedGraph& g);

/// Symmetrised form D^{-1/2}(D - A)D^{-1/2}; similar to Δ.
DenseMatrix symmetric_laplacian(const SignedGraph& g);

/// Applies Δ or P to a vector without assembling the matrix.
Vector apply_laplacian(const SignedGraph& g, std::span<const double> f);
Vector apply_transition(const SignedGraph& g, std::span<const double> f);

// Eigenpairs of Δ. Eigenvalues are nondecreasing and the eigenvectors are
// orthonormal in ℓ²(V, m). Each eigenvector's first entry of non-negligible
// magnitude is positive; bases of degenerate eigenspaces are otherwise
// arbitrary.
struct EigenDecomposition {
  Vector eigenvalues;
  std::vector<Vector> eigenvectors;
};

struct Spectrum {
  Vector eigenvalues;  // sorted ascending

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

EigenDecomposition eigh_m(const SignedGraph& g);
Spectrum spectrum(const SignedGraph& g);

/// True iff the sorted multiset {2 - λ} matches `s` elementwise within `tol`.
bool is_spectrum_symmetric(const Spectrum& s, double tol = kSpectrumTol);

/// Elementwise comparison of two sorted spectra.
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol = kSpectrumTol);

/// ⟨u, v⟩_m and the induced norm.
double inner_m(const SignedGraph& g, std::span<const double> u, std::span<const double> v);
double norm_m(const SignedGraph& g, std::span<const double> u);

/// ½ Σ_{x,y} μ_xy (f(x) - η_xy f(y))² / Σ_x f(x)² m(x); throws on f = 0.
double rayleigh_quotient(const SignedGraph& g, std::span<const double> f);

struct NonnegativeSwitch {
  SignedGraph graph;         // Γ^θ
  SwitchingFunction theta;   // -1 exactly where the first eigenvector is negative
  Vector eigenvector;        // θ·f, entrywise nonnegative
};

/// Switches g so that its first eigenvector becomes nonnegative.
NonnegativeSwitch nonnegative_first_eigenvector_switch(const SignedGraph& g);

/// Largest residual ‖Δv - λv‖∞ over all eigenpairs of `d`.
double max_eigen_residual(const SignedGraph& g, const EigenDecomposition& d);

}  // namespace signlap
