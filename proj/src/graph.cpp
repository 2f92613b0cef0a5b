#include "signlap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace signlap {

Sign sign_from_int(int s) {
  if (s == 1) return Sign::Positive;
  if (s == -1) return Sign::Negative;
  throw GraphError("edge sign must be 1 or -1, got " + std::to_string(s));
}

SignedGraph SignedGraph::build(const std::vector<EdgeSpec>& edges) {
  std::set<VertexId> ids;
  for (const auto& e : edges) {
    ids.insert(e.u);
    ids.insert(e.v);
  }
  return build(std::vector<VertexId>(ids.begin(), ids.end()), edges);
}

SignedGraph SignedGraph::build(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges) {
  SignedGraph g;
  g.ids_ = std::move(vertices);
  for (std::size_t i = 0; i < g.ids_.size(); ++i) {
    if (!g.index_.emplace(g.ids_[i], i).second) {
      throw GraphError("duplicate vertex id '" + g.ids_[i] + "'");
    }
  }

  for (const auto& spec : edges) {
    auto u = g.find(spec.u);
    auto v = g.find(spec.v);
    if (!u) throw GraphError("edge references unknown vertex '" + spec.u + "'");
    if (!v) throw GraphError("edge references unknown vertex '" + spec.v + "'");
    if (*u == *v) throw GraphError("self-loop at vertex '" + spec.u + "'");
    if (!std::isfinite(spec.weight) || !(spec.weight > 0.0)) {
      throw GraphError("edge " + spec.u + "-" + spec.v + " has nonpositive or non-finite weight");
    }
    Edge e{std::min(*u, *v), std::max(*u, *v), spec.weight, sign_from_int(spec.sign)};
    if (!g.pair_index_.emplace(std::pair{e.u, e.v}, 0).second) {
      throw GraphError("duplicate edge " + spec.u + "-" + spec.v);
    }
    g.edges_.push_back(e);
  }

  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });

  const std::size_t n = g.ids_.size();
  g.adjacency_.assign(n, {});
  g.degree_.assign(n, 0.0);
  for (std::size_t k = 0; k < g.edges_.size(); ++k) {
    const Edge& e = g.edges_[k];
    g.pair_index_[{e.u, e.v}] = k;
    g.adjacency_[e.u].push_back({e.v, k});
    g.adjacency_[e.v].push_back({e.u, k});
    g.degree_[e.u] += e.weight;
    g.degree_[e.v] += e.weight;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (g.adjacency_[x].empty()) throw GraphError("isolated vertex '" + g.ids_[x] + "'");
  }

  g.id_order_.resize(n);
  std::iota(g.id_order_.begin(), g.id_order_.end(), std::size_t{0});
  std::sort(g.id_order_.begin(), g.id_order_.end(),
            [&](std::size_t a, std::size_t b) { return g.ids_[a] < g.ids_[b]; });
  return g;
}

std::optional<std::size_t> SignedGraph::find(std::string_view id) const {
  auto it = index_.find(VertexId(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SignedGraph::index_of(std::string_view id) const {
  if (auto x = find(id)) return *x;
  throw GraphError("unknown vertex id '" + std::string(id) + "'");
}

std::optional<std::size_t> SignedGraph::edge_between(std::size_t x, std::size_t y) const {
  auto it = pair_index_.find({std::min(x, y), std::max(x, y)});
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

double SignedGraph::signed_weight(std::size_t x, std::size_t y) const {
  if (auto k = edge_between(x, y)) return edges_[*k].signed_weight();
  return 0.0;
}

std::vector<std::vector<std::size_t>> SignedGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t root : id_order_) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (const auto& nb : adjacency_[x]) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          queue.push_back(nb.vertex);
        }
      }
    }
    std::sort(comp.begin(), comp.end(), [&](std::size_t a, std::size_t b) { return ids_[a] < ids_[b]; });
    out.push_back(std::move(comp));
  }
  return out;
}

bool SignedGraph::is_connected() const { return components().size() <= 1; }

SignedGraph SignedGraph::with_signs(const std::vector<Sign>& signs) const {
  if (signs.size() != edges_.size()) throw GraphError("sign vector does not match edge count");
  SignedGraph g = *this;
  for (std::size_t k = 0; k < signs.size(); ++k) g.edges_[k].sign = signs[k];
  return g;
}

std::vector<EdgeSpec> SignedGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({ids_[e.u], ids_[e.v], e.weight, to_int(e.sign)});
  return out;
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  if (a.ids_ != b.ids_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t k = 0; k < a.edges_.size(); ++k) {
    const Edge& x = a.edges_[k];
    const Edge& y = b.edges_[k];
    if (x.u != y.u || x.v != y.v || x.weight != y.weight || x.sign != y.sign) return false;
  }
  return true;
}

SwitchingFunction SwitchingFunction::from_map(const SignedGraph& g, const std::map<VertexId, int>& labels) {
  std::vector<Sign> out(g.size(), Sign::Positive);
  std::vector<bool> set(g.size(), false);
  for (const auto& [id, s] : labels) {
    std::size_t x = g.index_of(id);
    out[x] = sign_from_int(s);
    set[x] = true;
  }
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!set[x]) throw GraphError("switching function missing vertex '" + g.id(x) + "'");
  }
  return SwitchingFunction(std::move(out));
}

Vector SwitchingFunction::apply(const Vector& f) const {
  if (f.size() != labels_.size()) throw GraphError("switching function / vector size mismatch");
  Vector out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = to_int(labels_[x]) * f[x];
  return out;
}

std::map<VertexId, int> SwitchingFunction::to_map(const SignedGraph& g) const {
  std::map<VertexId, int> out;
  for (std::size_t x = 0; x < labels_.size(); ++x) out[g.id(x)] = to_int(labels_[x]);
  return out;
}

VertexBijection::VertexBijection(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t y : image_) {
    if (y >= image_.size() || hit[y]) throw GraphError("vertex map is not a bijection");
    hit[y] = true;
  }
}

VertexBijection VertexBijection::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return VertexBijection(std::move(image));
}

VertexBijection VertexBijection::from_map(const SignedGraph& from, const SignedGraph& to,
                                          const std::map<VertexId, VertexId>& mapping) {
  if (from.size() != to.size()) throw GraphError("vertex map between graphs of different order");
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(from.size(), unset);
  for (const auto& [x, y] : mapping) image[from.index_of(x)] = to.index_of(y);
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x] == unset) throw GraphError("vertex map missing vertex '" + from.id(x) + "'");
  }
  return VertexBijection(std::move(image));
}

bool VertexBijection::is_identity() const {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::map<VertexId, VertexId> VertexBijection::to_map(const SignedGraph& from, const SignedGraph& to) const {
  std::map<VertexId, VertexId> out;
  for (std::size_t x = 0; x < image_.size(); ++x) out[from.id(x)] = to.id(image_[x]);
  return out;
}

SignedGraph build_graph(const std::vector<EdgeSpec>& edges) { return SignedGraph::build(edges); }

SignedGraph negate(const SignedGraph& g) {
  std::vector<Sign> signs;
  signs.reserve(g.edge_count());
  for (const auto& e : g.edges()) signs.push_back(flip(e.sign));
  return g.with_signs(signs);
}

SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta) {
  if (theta.size() != g.size()) throw GraphError("switching function is not defined on every vertex");
  std::vector<Sign> signs;
  signs.reserve(g.edge_count());
  for (const auto& e : g.edges()) signs.push_back(theta[e.u] * e.sign * theta[e.v]);
  return g.with_signs(signs);
}

namespace {

// Breadth-first sign propagation: label(root) = +1 and label(y) = label(x) * s(xy)
// along tree edges, where s is the sign demanded of each edge. Returns the
// labels if every non-tree edge agrees.
std::optional<std::vector<Sign>> propagate(const SignedGraph& g, auto&& required_sign) {
  std::vector<Sign> label(g.size(), Sign::Positive);
  std::vector<bool> seen(g.size(), false);
  for (const auto& comp : g.components()) {
    std::deque<std::size_t> queue{comp.front()};
    seen[comp.front()] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& nb : g.neighbors(x)) {
        Sign want = label[x] * required_sign(g.edges()[nb.edge]);
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          label[nb.vertex] = want;
          queue.push_back(nb.vertex);
        } else if (label[nb.vertex] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return label;
}

}  // namespace

std::optional<Bipartition> is_bipartite(const SignedGraph& g) {
  auto label = propagate(g, [](const Edge&) { return Sign::Negative; });
  if (!label) return std::nullopt;
  Bipartition parts;
  for (std::size_t x : g.id_order()) {
    ((*label)[x] == Sign::Positive ? parts.first : parts.second).push_back(x);
  }
  return parts;
}

BalanceClassification classify_balance(const SignedGraph& g) {
  BalanceClassification out;
  // Γ^θ is all-positive iff θ(x)θ(y) = η_xy on every edge.
  if (auto lab = propagate(g, [](const Edge& e) { return e.sign; })) {
    out.balancing.emplace(std::move(*lab));
  }
  if (auto lab = propagate(g, [](const Edge& e) { return flip(e.sign); })) {
    out.antibalancing.emplace(std::move(*lab));
  }
  return out;
}

Sign cycle_sign(const SignedGraph& g, const std::vector<std::size_t>& cycle) {
  if (cycle.size() < 2) throw GraphError("cycle needs at least two vertices");
  std::vector<std::size_t> walk = cycle;
  if (walk.front() != walk.back()) walk.push_back(walk.front());
  Sign s = Sign::Positive;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    auto k = g.edge_between(walk[i], walk[i + 1]);
    if (!k) {
      throw GraphError("no edge " + g.id(walk[i]) + "-" + g.id(walk[i + 1]) + " in cycle");
    }
    s = s * g.edges()[*k].sign;
  }
  return s;
}

Sign cycle_sign(const SignedGraph& g, const std::vector<VertexId>& cycle) {
  std::vector<std::size_t> idx;
  idx.reserve(cycle.size());
  for (const auto& id : cycle) idx.push_back(g.index_of(id));
  return cycle_sign(g, idx);
}

bool check_isomorphism(const SignedGraph& g1, const SignedGraph& g2, const VertexBijection& s,
                       double weight_tol) {
  if (g1.size() != g2.size() || s.size() != g1.size()) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  for (const auto& e : g1.edges()) {
    auto k = g2.edge_between(s(e.u), s(e.v));
    if (!k) return false;
    const Edge& f = g2.edges()[*k];
    if (f.sign != e.sign) return false;
    if (weight_tol == 0.0 ? f.weight != e.weight : std::abs(f.weight - e.weight) > weight_tol) {
      return false;
    }
  }
  // Equal edge counts plus an injective edge map makes non-edges map to non-edges.
  return true;
}

}  // namespace signlap
