#include "signlap/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace signlap {

namespace {

void check_dim(const SignedGraph& g, std::span<const double> f) {
  if (f.size() != g.size()) {
    throw GraphError("vector has " + std::to_string(f.size()) + " entries, graph has " +
                     std::to_string(g.size()) + " vertices");
  }
}

void normalize_sign(Vector& v) {
  const double scale = max_abs(v);
  for (double x : v) {
    if (std::abs(x) > 1e-10 * scale) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

DenseMatrix adjacency_matrix(const SignedGraph& g) {
  DenseMatrix a(g.size());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.signed_weight();
    a(e.v, e.u) = e.signed_weight();
  }
  return a;
}

DenseMatrix transition_matrix(const SignedGraph& g) {
  DenseMatrix p(g.size());
  for (const auto& e : g.edges()) {
    p(e.u, e.v) = e.signed_weight() / g.degree(e.u);
    p(e.v, e.u) = e.signed_weight() / g.degree(e.v);
  }
  return p;
}

DenseMatrix laplacian(const SignedGraph& g) {
  DenseMatrix p = transition_matrix(g);
  DenseMatrix l(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) l(i, j) = (i == j ? 1.0 : 0.0) - p(i, j);
  return l;
}

DenseMatrix symmetric_laplacian(const SignedGraph& g) {
  DenseMatrix l = DenseMatrix::identity(g.size());
  for (const auto& e : g.edges()) {
    const double w = -e.signed_weight() / std::sqrt(g.degree(e.u) * g.degree(e.v));
    l(e.u, e.v) = w;
    l(e.v, e.u) = w;
  }
  return l;
}

Vector apply_transition(const SignedGraph& g, std::span<const double> f) {
  check_dim(g, f);
  Vector out(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    double s = 0.0;
    for (const auto& nb : g.neighbors(x)) s += g.edges()[nb.edge].signed_weight() * f[nb.vertex];
    out[x] = s / g.degree(x);
  }
  return out;
}

Vector apply_laplacian(const SignedGraph& g, std::span<const double> f) {
  Vector pf = apply_transition(g, f);
  for (std::size_t x = 0; x < pf.size(); ++x) pf[x] = f[x] - pf[x];
  return pf;
}

EigenDecomposition eigh_m(const SignedGraph& g) {
  SymmetricEigen sym = jacobi_eigh(symmetric_laplacian(g));
  EigenDecomposition out;
  out.eigenvalues = std::move(sym.values);
  out.eigenvectors.reserve(sym.vectors.size());
  for (auto& phi : sym.vectors) {
    // Δ = D^{-1/2} L D^{1/2}, so D^{-1/2}φ is an m-orthonormal eigenvector of Δ.
    for (std::size_t x = 0; x < phi.size(); ++x) phi[x] /= std::sqrt(g.degree(x));
    normalize_sign(phi);
    out.eigenvectors.push_back(std::move(phi));
  }
  return out;
}

Spectrum spectrum(const SignedGraph& g) { return Spectrum{eigh_m(g).eigenvalues}; }

bool is_spectrum_symmetric(const Spectrum& s, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  Vector reflected(s.eigenvalues.rbegin(), s.eigenvalues.rend());
  for (double& x : reflected) x = 2.0 - x;
  Vector sorted = s.eigenvalues;
  std::sort(sorted.begin(), sorted.end());
  std::sort(reflected.begin(), reflected.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (std::abs(sorted[i] - reflected[i]) > tol) return false;
  }
  return true;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.eigenvalues.size() != b.eigenvalues.size()) return false;
  Vector x = a.eigenvalues, y = b.eigenvalues;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - y[i]) > tol) return false;
  return true;
}

double inner_m(const SignedGraph& g, std::span<const double> u, std::span<const double> v) {
  check_dim(g, u);
  check_dim(g, v);
  return weighted_dot(u, v, g.degrees());
}

double norm_m(const SignedGraph& g, std::span<const double> u) { return std::sqrt(inner_m(g, u, u)); }

double rayleigh_quotient(const SignedGraph& g, std::span<const double> f) {
  check_dim(g, f);
  const double denom = inner_m(g, f, f);
  if (denom == 0.0) throw std::invalid_argument("Rayleigh quotient of the zero vector");
  // Each unordered edge appears twice in the ordered double sum, cancelling the ½.
  double num = 0.0;
  for (const auto& e : g.edges()) {
    const double d = f[e.u] - to_int(e.sign) * f[e.v];
    num += e.weight * d * d;
  }
  return num / denom;
}

NonnegativeSwitch nonnegative_first_eigenvector_switch(const SignedGraph& g) {
  EigenDecomposition d = eigh_m(g);
  const Vector& f = d.eigenvectors.front();
  std::vector<Sign> labels(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) labels[x] = f[x] < 0 ? Sign::Negative : Sign::Positive;
  SwitchingFunction theta(std::move(labels));
  Vector switched = theta.apply(f);
  return {apply_switching(g, theta), std::move(theta), std::move(switched)};
}

double max_eigen_residual(const SignedGraph& g, const EigenDecomposition& d) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
    const Vector& v = d.eigenvectors[i];
    Vector r = axpby(1.0, apply_laplacian(g, v), -d.eigenvalues[i], v);
    worst = std::max(worst, max_abs(r));
  }
  return worst;
}

}  // namespace signlap
