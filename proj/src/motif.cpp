#include "signlap/motif.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace signlap {

Motif::Motif(const SignedGraph& g, const std::vector<VertexId>& omega)
    : ambient_size_(g.size()), position_(g.size(), -1) {
  if (omega.empty()) throw GraphError("motif must contain at least one vertex");
  for (const auto& id : omega) {
    const std::size_t x = g.index_of(id);
    if (position_[x] >= 0) throw GraphError("motif lists vertex '" + id + "' twice");
    if (g.find(id + kReplicaSuffix)) {
      throw GraphError("replica id '" + id + kReplicaSuffix + "' collides with an existing vertex");
    }
    position_[x] = static_cast<long>(members_.size());
    members_.push_back(x);
    ids_.push_back(id);
  }
}

std::vector<VertexId> Motif::replica_ids() const {
  std::vector<VertexId> out;
  out.reserve(ids_.size());
  for (const auto& id : ids_) out.push_back(id + kReplicaSuffix);
  return out;
}

DenseMatrix dirichlet_laplacian(const SignedGraph& g, const Motif& omega) {
  const auto& idx = omega.members();
  DenseMatrix d(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      d(i, j) = (i == j ? 1.0 : 0.0) - g.signed_weight(idx[i], idx[j]) / g.degree(idx[i]);
  return d;
}

EigenDecomposition dirichlet_eigh(const SignedGraph& g, const Motif& omega) {
  const auto& idx = omega.members();
  const std::size_t n = idx.size();
  // M^{-1/2}(M - K)M^{-1/2} with M the ambient degrees on Ω.
  DenseMatrix sym = DenseMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        sym(i, j) = -g.signed_weight(idx[i], idx[j]) / std::sqrt(g.degree(idx[i]) * g.degree(idx[j]));
      }
  SymmetricEigen eig = jacobi_eigh(sym);
  EigenDecomposition out;
  out.eigenvalues = std::move(eig.values);
  for (auto& phi : eig.vectors) {
    for (std::size_t i = 0; i < n; ++i) phi[i] /= std::sqrt(g.degree(idx[i]));
    out.eigenvectors.push_back(std::move(phi));
  }
  return out;
}

SignedGraph replicate(const SignedGraph& g, const Motif& omega) {
  if (omega.ambient_size() != g.size()) throw GraphError("motif belongs to a different graph");
  std::vector<VertexId> vertices = g.vertex_ids();
  const auto replicas = omega.replica_ids();
  vertices.insert(vertices.end(), replicas.begin(), replicas.end());

  std::vector<EdgeSpec> edges = g.edge_specs();
  for (const auto& e : g.edges()) {
    const long pu = omega.position(e.u);
    const long pv = omega.position(e.v);
    if (pu < 0 && pv < 0) continue;
    const VertexId a = pu >= 0 ? replicas[pu] : g.id(e.u);
    const VertexId b = pv >= 0 ? replicas[pv] : g.id(e.v);
    edges.push_back({a, b, e.weight, to_int(e.sign)});
  }
  return SignedGraph::build(std::move(vertices), edges);
}

Vector extend_eigenvector(const Vector& f, const Motif& omega) {
  if (f.size() != omega.size()) throw GraphError("vector does not match the motif size");
  Vector out(omega.ambient_size() + omega.size(), 0.0);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    out[omega.members()[i]] = f[i];
    out[omega.ambient_size() + i] = -f[i];
  }
  return out;
}

MotifReport verify_motif_inclusion(const SignedGraph& g, const Motif& omega, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const SignedGraph big = replicate(g, omega);
  const EigenDecomposition dir = dirichlet_eigh(g, omega);

  MotifReport report;
  report.tol = tol;
  report.replicated_spectrum = spectrum(big);
  report.passed = true;
  for (std::size_t i = 0; i < dir.eigenvalues.size(); ++i) {
    MotifEigenCheck c;
    c.eigenvalue = dir.eigenvalues[i];
    c.spectrum_distance = std::numeric_limits<double>::infinity();
    for (double mu : report.replicated_spectrum.eigenvalues) {
      c.spectrum_distance = std::min(c.spectrum_distance, std::abs(mu - c.eigenvalue));
    }
    Vector ext = extend_eigenvector(dir.eigenvectors[i], omega);
    c.residual = max_abs(axpby(1.0, apply_laplacian(big, ext), -c.eigenvalue, ext));
    report.passed = report.passed && c.spectrum_distance <= tol && c.residual <= tol;
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace signlap
