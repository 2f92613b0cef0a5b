#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "signlap/graph.hpp"

namespace signlap::testing {

inline SignedGraph p2(int sign = 1) { return build_graph({{"a", "b", 1.0, sign}}); }

inline SignedGraph triangle(int s_ab = 1, int s_bc = 1, int s_ca = 1) {
  return build_graph({{"a", "b", 1.0, s_ab}, {"b", "c", 1.0, s_bc}, {"c", "a", 1.0, s_ca}});
}

/// C4 on 1-2-3-4-1 with the 4-1 edge carrying `last`.
inline SignedGraph c4(int last = -1) {
  return build_graph({{"1", "2", 1.0, 1}, {"2", "3", 1.0, 1}, {"3", "4", 1.0, 1}, {"4", "1", 1.0, last}});
}

inline SignedGraph complete(int n, int sign) {
  std::vector<EdgeSpec> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({"k" + std::to_string(i), "k" + std::to_string(j), 1.0, sign});
  return build_graph(e);
}

inline std::string vid(int i) { return "v" + std::to_string(i); }

struct GraphOptions {
  int min_n = 2;
  int max_n = 8;
  bool signed_edges = true;
  bool bipartite = false;
};

// Random connected graph: random spanning tree plus extra edges, weights in
// (0, 2]. With `bipartite`, extra edges only join opposite tree colours.
inline SignedGraph random_graph(std::mt19937_64& rng, GraphOptions opt = {}) {
  std::uniform_int_distribution<int> size(opt.min_n, opt.max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = size(rng);
  const double density = 0.15 + 0.6 * unit(rng);
  auto weight = [&] { return 2.0 * (1.0 - unit(rng)); };
  auto sign = [&] { return opt.signed_edges && unit(rng) < 0.5 ? -1 : 1; };

  std::vector<int> colour(n, 0);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<EdgeSpec> edges;
  for (int i = 1; i < n; ++i) {
    const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    colour[i] = 1 - colour[j];
    adj[i][j] = adj[j][i] = true;
    edges.push_back({vid(j), vid(i), weight(), sign()});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (adj[i][j] || (opt.bipartite && colour[i] == colour[j])) continue;
      if (unit(rng) < density) edges.push_back({vid(i), vid(j), weight(), sign()});
    }
  return build_graph(edges);
}

inline SwitchingFunction random_switching(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> labels(n);
  for (auto& s : labels) s = coin(rng) ? Sign::Negative : Sign::Positive;
  return SwitchingFunction(labels);
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

}  // namespace signlap::testing
