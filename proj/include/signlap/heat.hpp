#pragma once

#include <optional>

#include "signlap/spectral.hpp"

namespace signlap {

/// States f_0 = g, f_{k+1} = P f_k of the discrete-time heat equation.
struct HeatTrajectory {
  std::vector<Vector> states;
};

HeatTrajectory heat_simulate(const SignedGraph& g, const Vector& initial, std::size_t steps);

// Damped 2-periodic solution: Pu = λv, Pv = λu with u, v linearly independent
// and decay rate λ in (0, 1]. λ = 1 is admitted; the amplitude is then constant.
struct PeriodicSolution {
  Vector u;
  Vector v;
  double lambda = 0.0;
};

/// Returns (u, Pu/λ, λ) when u is an eigenvector of P² but not of P, with
/// λ = ‖Pu‖_m/‖u‖_m > 0. `tol` bounds the relative P² residual and the
/// departure of |cos∠(u, Pu)| from 1.
std::optional<PeriodicSolution> detect_periodic(const SignedGraph& g, const Vector& u, double tol = 1e-8);

/// u = f + g, v = f - g for Δ-eigenvectors f, g at 1 - λ and 1 + λ, λ > 0.
/// Throws std::invalid_argument when f or g fails the eigenvector check
/// (relative residual 1e-9) or the eigenvalues are not reflected about 1.
PeriodicSolution periodic_from_eigenpair(const Vector& f, const Vector& g, const SignedGraph& graph);

struct PeriodicParts {
  Vector f;  // Pf = λf, Δ-eigenvalue 1 - λ
  Vector g;  // Pg = -λg, Δ-eigenvalue 1 + λ
};

/// f = (u + v)/2, g = (u - v)/2. Throws std::invalid_argument if `sol`
/// violates Pu = λv, Pv = λu.
PeriodicParts decompose_periodic(const SignedGraph& graph, const PeriodicSolution& sol);

/// Decay rates |1 - λ| of reflected eigenvalue pairs λ, 2 - λ with λ ≠ 1,
/// ascending and deduplicated within `tol`.
Vector symmetric_eigenvalue_pairs(const Spectrum& s, double tol = kSpectrumTol);

/// One periodic solution per available decay rate, built from the sum of the
/// first eigenvectors found at 1 - λ and 1 + λ.
std::vector<PeriodicSolution> periodic_solutions(const SignedGraph& g, double tol = kSpectrumTol);

}  // namespace signlap
