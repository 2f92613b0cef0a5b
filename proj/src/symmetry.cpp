#include "signlap/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace signlap {

std::optional<SwitchingFunction> find_bipartite_switching(const SignedGraph& g) {
  auto parts = is_bipartite(g);
  if (!parts) return std::nullopt;
  std::vector<Sign> labels(g.size(), Sign::Positive);
  for (std::size_t x : parts->second) labels[x] = Sign::Negative;
  return SwitchingFunction(std::move(labels));
}

namespace {

struct VertexInvariant {
  std::vector<double> weights;
  std::vector<double> signed_weights;

  friend bool operator==(const VertexInvariant&, const VertexInvariant&) = default;
};

std::vector<VertexInvariant> invariants(const SignedGraph& g) {
  std::vector<VertexInvariant> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (const auto& nb : g.neighbors(x)) {
      const Edge& e = g.edges()[nb.edge];
      out[x].weights.push_back(e.weight);
      out[x].signed_weights.push_back(e.signed_weight());
    }
    std::sort(out[x].weights.begin(), out[x].weights.end());
    std::sort(out[x].signed_weights.begin(), out[x].signed_weights.end());
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SignedGraph& from, const SignedGraph& to)
      : from_(from), to_(to), from_inv_(invariants(from)), to_inv_(invariants(to)) {}

  std::optional<VertexBijection> run() {
    if (from_.size() != to_.size() || from_.edge_count() != to_.edge_count()) return std::nullopt;
    const std::size_t n = from_.size();
    image_.assign(n, kUnset);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return VertexBijection(image_);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool compatible(std::size_t x, std::size_t y, std::size_t depth) const {
    if (!(from_inv_[x] == to_inv_[y])) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t xp = from_.id_order()[i];
      const std::size_t yp = image_[xp];
      auto e1 = from_.edge_between(x, xp);
      auto e2 = to_.edge_between(y, yp);
      if (e1.has_value() != e2.has_value()) return false;
      if (e1) {
        const Edge& a = from_.edges()[*e1];
        const Edge& b = to_.edges()[*e2];
        if (a.weight != b.weight || a.sign != b.sign) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == from_.size()) return true;
    const std::size_t x = from_.id_order()[depth];
    for (std::size_t y : to_.id_order()) {
      if (used_[y] || !compatible(x, y, depth)) continue;
      image_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      image_[x] = kUnset;
    }
    return false;
  }

  const SignedGraph& from_;
  const SignedGraph& to_;
  std::vector<VertexInvariant> from_inv_;
  std::vector<VertexInvariant> to_inv_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

// Switching number k enumerates θ over id-sorted vertices s_0 < s_1 < ...:
// θ(s_0) = +1 and θ(s_j) = -1 iff bit (N-1-j) of k is set, so increasing k
// walks the sequences lexicographically with +1 before -1.
SwitchingFunction switching_from_index(const SignedGraph& g, std::uint64_t k) {
  const std::size_t n = g.size();
  std::vector<Sign> labels(n, Sign::Positive);
  for (std::size_t j = 1; j < n; ++j) {
    if ((k >> (n - 1 - j)) & 1U) labels[g.id_order()[j]] = Sign::Negative;
  }
  return SwitchingFunction(std::move(labels));
}

}  // namespace

std::optional<VertexBijection> find_isomorphism(const SignedGraph& from, const SignedGraph& to) {
  return IsomorphismSearch(from, to).run();
}

CertificateSearch find_symmetry_certificate(const SignedGraph& g, const SearchBudget& budget) {
  if (!g.is_connected()) throw GraphError("certificate search requires a connected graph");
  CertificateSearch result;
  if (g.size() > budget.max_vertices || g.size() > 63) {
    result.status = SearchStatus::BudgetExceeded;
    return result;
  }

  // Bipartite graphs always carry the colour-class certificate; report it
  // in preference to whatever the enumeration would reach first.
  if (auto theta = find_bipartite_switching(g)) {
    result.status = SearchStatus::Found;
    result.certificate = SymmetryCertificate{std::move(*theta), VertexBijection::identity(g.size())};
    return result;
  }

  const SignedGraph target = negate(g);
  const std::uint64_t total = std::uint64_t{1} << (g.size() - 1);
  std::atomic<std::uint64_t> best{total};
  std::atomic<std::uint64_t> tried{0};
  std::mutex mu;
  std::optional<SymmetryCertificate> found;

  // Worker w takes k = w, w + W, ... in increasing order and stops once k
  // passes the best hit so far, so every k below the final minimum is tried.
  auto work = [&](unsigned w, unsigned stride) {
    for (std::uint64_t k = w; k < total && k < best.load(); k += stride) {
      tried.fetch_add(1);
      SwitchingFunction theta = switching_from_index(g, k);
      auto perm = find_isomorphism(apply_switching(g, theta), target);
      if (!perm) continue;
      std::lock_guard lock(mu);
      if (k < best.load()) {
        best.store(k);
        found = SymmetryCertificate{std::move(theta), std::move(*perm)};
      }
      return;
    }
  };

  const unsigned workers = std::max(1U, budget.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  result.switchings_tried = tried.load();
  if (found) {
    result.status = SearchStatus::Found;
    result.certificate = std::move(found);
  } else {
    result.status = SearchStatus::Absent;
  }
  return result;
}

bool verify_certificate(const SignedGraph& g, const SymmetryCertificate& cert) {
  if (cert.theta.size() != g.size()) throw GraphError("certificate switching does not cover the graph");
  if (cert.perm.size() != g.size()) throw GraphError("certificate permutation does not cover the graph");
  return check_isomorphism(apply_switching(g, cert.theta), negate(g), cert.perm);
}

}  // namespace signlap
