#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "ocdom/graph.hpp"

namespace ocdom {

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Star K_{1,n-1}: vertex 0 is the center.
inline Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star requires at least 1 vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

// G(n, p) conditioned on connectivity: draw until connected, up to
// `max_draws` attempts. Same seed, same graph, on every platform — hence the
// hand-rolled uniform double instead of std::bernoulli_distribution (whose
// output is implementation-defined).
inline Graph random_connected_graph(int n, double p, std::uint64_t seed,
                                    int max_draws = 10000) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("random graph order out of range");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0,1]");
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  for (int attempt = 0; attempt < max_draws; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit() < p) g.add_edge(u, v);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("random connected graph: draw limit exhausted");
}

}  // namespace ocdom
