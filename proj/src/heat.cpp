#include "signlap/heat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace signlap {

namespace {

constexpr double kEigenTol = 1e-9;

void require_positive(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
}

// Eigenvalue estimate of Δ at f, throwing if f is not an eigenvector.
double laplacian_eigenvalue(const SignedGraph& g, const Vector& f, const char* name) {
  if (max_abs(f) == 0.0) throw std::invalid_argument(std::string(name) + " is the zero vector");
  const double mu = rayleigh_quotient(g, f);
  Vector r = axpby(1.0, apply_laplacian(g, f), -mu, f);
  if (max_abs(r) > kEigenTol * std::max(1.0, std::abs(mu)) * max_abs(f)) {
    throw std::invalid_argument(std::string(name) + " is not an eigenvector of the Laplacian");
  }
  return mu;
}

}  // namespace

HeatTrajectory heat_simulate(const SignedGraph& g, const Vector& initial, std::size_t steps) {
  if (initial.size() != g.size()) throw GraphError("initial data does not match the vertex count");
  HeatTrajectory t;
  t.states.reserve(steps + 1);
  t.states.push_back(initial);
  for (std::size_t k = 0; k < steps; ++k) t.states.push_back(apply_transition(g, t.states.back()));
  return t;
}

std::optional<PeriodicSolution> detect_periodic(const SignedGraph& g, const Vector& u, double tol) {
  require_positive(tol);
  const double nu = norm_m(g, u);
  if (nu == 0.0) throw std::invalid_argument("detect_periodic: zero vector");

  Vector pu = apply_transition(g, u);
  const double npu = norm_m(g, pu);
  const double lambda = npu / nu;
  if (lambda <= tol) return std::nullopt;  // Pu = 0: eigenvector of P

  Vector ppu = apply_transition(g, pu);
  if (norm_m(g, axpby(1.0, ppu, -lambda * lambda, u)) > tol * nu) return std::nullopt;

  const double cosine = inner_m(g, u, pu) / (nu * npu);
  if (std::abs(cosine) > 1.0 - tol) return std::nullopt;

  for (double& x : pu) x /= lambda;
  return PeriodicSolution{u, std::move(pu), lambda};
}

PeriodicSolution periodic_from_eigenpair(const Vector& f, const Vector& g, const SignedGraph& graph) {
  if (f.size() != graph.size() || g.size() != graph.size()) {
    throw GraphError("eigenvector does not match the vertex count");
  }
  const double mu_f = laplacian_eigenvalue(graph, f, "f");
  const double mu_g = laplacian_eigenvalue(graph, g, "g");
  const double lambda = 1.0 - mu_f;
  if (std::abs(mu_g - (1.0 + lambda)) > kEigenTol) {
    throw std::invalid_argument("eigenvalues of f and g are not reflected about 1");
  }
  if (!(lambda > kEigenTol)) {
    throw std::invalid_argument("f must belong to an eigenvalue 1 - λ with λ > 0");
  }
  return PeriodicSolution{axpby(1.0, f, 1.0, g), axpby(1.0, f, -1.0, g), lambda};
}

PeriodicParts decompose_periodic(const SignedGraph& graph, const PeriodicSolution& sol) {
  if (sol.u.size() != graph.size() || sol.v.size() != graph.size()) {
    throw GraphError("periodic solution does not match the vertex count");
  }
  if (!(sol.lambda > 0.0)) throw std::invalid_argument("decay rate must be positive");
  const double scale = std::max(max_abs(sol.u), max_abs(sol.v));
  Vector ru = axpby(1.0, apply_transition(graph, sol.u), -sol.lambda, sol.v);
  Vector rv = axpby(1.0, apply_transition(graph, sol.v), -sol.lambda, sol.u);
  if (std::max(max_abs(ru), max_abs(rv)) > kEigenTol * scale) {
    throw std::invalid_argument("not a periodic solution: Pu = λv, Pv = λu violated");
  }
  return PeriodicParts{axpby(0.5, sol.u, 0.5, sol.v), axpby(0.5, sol.u, -0.5, sol.v)};
}

Vector symmetric_eigenvalue_pairs(const Spectrum& s, double tol) {
  require_positive(tol);
  Vector rates;
  for (double lam : s.eigenvalues) {
    if (std::abs(lam - 1.0) <= tol) continue;
    const bool reflected = std::any_of(s.eigenvalues.begin(), s.eigenvalues.end(),
                                       [&](double mu) { return std::abs(mu - (2.0 - lam)) <= tol; });
    if (reflected) rates.push_back(std::abs(1.0 - lam));
  }
  std::sort(rates.begin(), rates.end());
  Vector out;
  for (double r : rates) {
    if (out.empty() || r - out.back() > tol) out.push_back(r);
  }
  return out;
}

std::vector<PeriodicSolution> periodic_solutions(const SignedGraph& g, double tol) {
  EigenDecomposition d = eigh_m(g);
  std::vector<PeriodicSolution> out;
  for (double rate : symmetric_eigenvalue_pairs(Spectrum{d.eigenvalues}, tol)) {
    const Vector* f = nullptr;
    const Vector* h = nullptr;
    for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
      if (!f && std::abs(d.eigenvalues[i] - (1.0 - rate)) <= tol) f = &d.eigenvectors[i];
      if (!h && std::abs(d.eigenvalues[i] - (1.0 + rate)) <= tol) h = &d.eigenvectors[i];
    }
    // The rate reported is the one measured on u, consistent with detection.
    Vector u = axpby(1.0, *f, 1.0, *h);
    Vector pu = apply_transition(g, u);
    const double lambda = norm_m(g, pu) / norm_m(g, u);
    for (double& x : pu) x /= lambda;
    out.push_back(PeriodicSolution{std::move(u), std::move(pu), lambda});
  }
  return out;
}

}  // namespace signlap
