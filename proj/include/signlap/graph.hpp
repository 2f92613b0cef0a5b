#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace signlap {

/// Raised for any malformed graph, switching, bijection or vertex reference.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexId = std::string;
using Vector = std::vector<double>;

/// Edge sign; stored as a plain int restricted to +1 / -1.
enum class Sign : int { Positive = 1, Negative = -1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}
Sign sign_from_int(int s);

/// One entry of an edge list as supplied by a caller.
struct EdgeSpec {
  VertexId u;
  VertexId v;
  double weight = 1.0;
  int sign = 1;
};

/// A stored edge; endpoints are vertex indices with `u < v`.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;
  Sign sign = Sign::Positive;

  double signed_weight() const noexcept { return to_int(sign) * weight; }
};

struct Neighbor {
  std::size_t vertex;
  std::size_t edge;
};

// Weighted signed graph without self-loops, multi-edges or isolated vertices.
// Vertices are addressed by index in the order of `vertex_ids()`; every
// matrix and vector in the library uses that order.
class SignedGraph {
 public:
  /// Vertex order is lexicographic by id.
  static SignedGraph build(const std::vector<EdgeSpec>& edges);
  /// Vertex order is the given order; every listed vertex must carry an edge
  /// and every edge endpoint must be listed.
  static SignedGraph build(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<VertexId>& vertex_ids() const noexcept { return ids_; }
  const VertexId& id(std::size_t x) const { return ids_.at(x); }
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Neighbor>& neighbors(std::size_t x) const { return adjacency_.at(x); }
  /// Index into `edges()` of the edge joining x and y, if any.
  std::optional<std::size_t> edge_between(std::size_t x, std::size_t y) const;

  /// Weighted degree m(x).
  double degree(std::size_t x) const { return degree_.at(x); }
  const Vector& degrees() const noexcept { return degree_; }

  /// Signed weight of the pair; zero when not adjacent.
  double signed_weight(std::size_t x, std::size_t y) const;

  /// Vertex indices sorted by id.
  const std::vector<std::size_t>& id_order() const noexcept { return id_order_; }

  /// Connected components, each sorted by id, listed by their lowest id.
  std::vector<std::vector<std::size_t>> components() const;
  bool is_connected() const;

  /// Same vertices and weights, new sign per edge (indexed like `edges()`).
  SignedGraph with_signs(const std::vector<Sign>& signs) const;

  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  SignedGraph() = default;

  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
  Vector degree_;
  std::vector<std::size_t> id_order_;
};

/// ±1 label per vertex of a specific graph, stored in that graph's vertex order.
class SwitchingFunction {
 public:
  explicit SwitchingFunction(std::vector<Sign> labels) : labels_(std::move(labels)) {}
  static SwitchingFunction identity(std::size_t n) {
    return SwitchingFunction(std::vector<Sign>(n, Sign::Positive));
  }
  /// Throws GraphError when the map misses a vertex or names an unknown one.
  static SwitchingFunction from_map(const SignedGraph& g, const std::map<VertexId, int>& labels);

  std::size_t size() const noexcept { return labels_.size(); }
  Sign operator[](std::size_t x) const { return labels_.at(x); }
  const std::vector<Sign>& labels() const noexcept { return labels_; }

  /// Pointwise product θ·f.
  Vector apply(const Vector& f) const;
  std::map<VertexId, int> to_map(const SignedGraph& g) const;

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;

 private:
  std::vector<Sign> labels_;
};

/// Bijection between the vertex index sets of two graphs of equal order.
class VertexBijection {
 public:
  /// Throws GraphError unless `image` is a permutation of 0..n-1.
  explicit VertexBijection(std::vector<std::size_t> image);
  static VertexBijection identity(std::size_t n);
  static VertexBijection from_map(const SignedGraph& from, const SignedGraph& to,
                                  const std::map<VertexId, VertexId>& mapping);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t x) const { return image_.at(x); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  bool is_identity() const;
  std::map<VertexId, VertexId> to_map(const SignedGraph& from, const SignedGraph& to) const;

  friend bool operator==(const VertexBijection&, const VertexBijection&) = default;

 private:
  std::vector<std::size_t> image_;
};

SignedGraph build_graph(const std::vector<EdgeSpec>& edges);

/// -Γ: every sign flipped.
SignedGraph negate(const SignedGraph& g);

/// Γ^θ: sign of xy becomes θ(x) η_xy θ(y).
SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta);

struct Bipartition {
  std::vector<std::size_t> first;   // contains the lowest id of each component
  std::vector<std::size_t> second;
};

/// Two-colouring of the underlying graph; signs are ignored. Disconnected
/// graphs are coloured per component.
std::optional<Bipartition> is_bipartite(const SignedGraph& g);

// Result of structural balance classification. A graph may be both balanced
// and antibalanced (e.g. a balanced graph with bipartite support), so the two
// witnesses are reported independently.
struct BalanceClassification {
  std::optional<SwitchingFunction> balancing;      // Γ^θ = (G,+)
  std::optional<SwitchingFunction> antibalancing;  // (-Γ)^θ = (G,+)

  bool balanced() const noexcept { return balancing.has_value(); }
  bool antibalanced() const noexcept { return antibalancing.has_value(); }
  bool neither() const noexcept { return !balanced() && !antibalanced(); }
};

BalanceClassification classify_balance(const SignedGraph& g);

/// Product of the signs along a closed walk given as a vertex sequence. The
/// closing edge back to the first vertex is implied unless the sequence
/// already repeats it at the end.
Sign cycle_sign(const SignedGraph& g, const std::vector<std::size_t>& cycle);
Sign cycle_sign(const SignedGraph& g, const std::vector<VertexId>& cycle);

/// True iff `s` carries edges of g1 onto edges of g2 with equal weight and
/// sign, and non-edges onto non-edges. `weight_tol` = 0 means exact equality.
bool check_isomorphism(const SignedGraph& g1, const SignedGraph& g2, const VertexBijection& s,
                       double weight_tol = 0.0);

}  // namespace signlap
