#pragma once

#include <numeric>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ocdom/generators.hpp"
#include "ocdom/graph.hpp"

namespace ocdom {

enum class ProductKind { lexicographic, cartesian, direct, corona, direct_power };

inline std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::direct: return "direct";
    case ProductKind::corona: return "corona";
    case ProductKind::direct_power: return "direct-power";
  }
  return "?";
}

inline ProductKind product_kind_from_string(std::string_view s) {
  if (s == "lexicographic" || s == "lex") return ProductKind::lexicographic;
  if (s == "cartesian") return ProductKind::cartesian;
  if (s == "direct") return ProductKind::direct;
  if (s == "corona") return ProductKind::corona;
  if (s == "direct-power") return ProductKind::direct_power;
  throw std::invalid_argument("unknown product kind: " + std::string(s));
}

// Row-major id for the pair (u, v) with second factor of order h_order.
inline int pair_index(int u, int v, int h_order) { return u * h_order + v; }

inline std::pair<int, int> unpair_index(int id, int h_order) {
  return {id / h_order, id % h_order};
}

// A built product together with its id maps, so witness sets can be moved
// between factor and product coordinates without guessing conventions.
struct ProductInstance {
  ProductKind kind;
  std::vector<Graph> factors;  // two entries for binary kinds, none for powers
  std::vector<int> orders;     // direct_power only: orders of the complete factors
  Graph graph;

  // --- binary products (lexicographic / cartesian / direct) ---
  int pair(int u, int v) const { return pair_index(u, v, factors.at(1).order()); }
  std::pair<int, int> unpair(int id) const {
    return unpair_index(id, factors.at(1).order());
  }

  // --- corona: G keeps ids 0..|G|-1, copy x of H occupies a block after ---
  int corona_root(int x) const { return x; }
  int corona_copy(int x, int h) const {
    return factors.at(0).order() + x * factors.at(1).order() + h;
  }
  // Returns (x, -1) for the root of block x, else (x, h) inside copy x.
  std::pair<int, int> corona_unpair(int id) const {
    int ng = factors.at(0).order(), nh = factors.at(1).order();
    if (id < ng) return {id, -1};
    int off = id - ng;
    return {off / nh, off % nh};
  }

  // --- direct powers: mixed-radix row-major over `orders` ---
  int tuple_id(std::span<const int> coords) const {
    int id = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
      id = id * orders[i] + coords[i];
    return id;
  }
  std::vector<int> id_tuple(int id) const {
    std::vector<int> coords(orders.size());
    for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
      coords[i] = id % orders[i];
      id /= orders[i];
    }
    return coords;
  }

  // Explicit id -> coordinates table. Corona roots appear as [x], copy
  // vertices as [x, h]; binary products as [u, v]; powers as full tuples.
  nlohmann::json index_map_json() const {
    nlohmann::json map = nlohmann::json::array();
    for (int id = 0; id < graph.order(); ++id) {
      if (kind == ProductKind::corona) {
        auto [x, h] = corona_unpair(id);
        if (h < 0)
          map.push_back({x});
        else
          map.push_back({x, h});
      } else if (kind == ProductKind::direct_power) {
        map.push_back(id_tuple(id));
      } else {
        auto [u, v] = unpair(id);
        map.push_back({u, v});
      }
    }
    return {{"kind", to_string(kind)}, {"map", map}};
  }
};

namespace product_detail {

inline void check_order(long order) {
  if (order > kMaxVertices)
    throw std::invalid_argument("product order " + std::to_string(order) +
                                " exceeds supported maximum of 128");
}

inline ProductInstance binary_shell(ProductKind kind, const Graph& g, const Graph& h) {
  check_order(static_cast<long>(g.order()) * h.order());
  ProductInstance p;
  p.kind = kind;
  p.factors = {g, h};
  p.graph = Graph(g.order() * h.order());
  return p;
}

}  // namespace product_detail

// G o H: {(u1,v1),(u2,v2)} is an edge iff u1u2 in E(G), or u1 = u2 and
// v1v2 in E(H).
inline ProductInstance lexicographic_product(const Graph& g, const Graph& h) {
  ProductInstance p = product_detail::binary_shell(ProductKind::lexicographic, g, h);
  int nh = h.order();
  for (int u1 = 0; u1 < g.order(); ++u1)
    for (int v1 = 0; v1 < nh; ++v1) {
      int a = pair_index(u1, v1, nh);
      for (int v2 = v1 + 1; v2 < nh; ++v2)
        if (h.has_edge(v1, v2)) p.graph.add_edge(a, pair_index(u1, v2, nh));
      for (int u2 = u1 + 1; u2 < g.order(); ++u2)
        if (g.has_edge(u1, u2))
          for (int v2 = 0; v2 < nh; ++v2)
            p.graph.add_edge(a, pair_index(u2, v2, nh));
    }
  return p;
}

// G box H: one coordinate moves along an edge, the other stays fixed.
inline ProductInstance cartesian_product(const Graph& g, const Graph& h) {
  ProductInstance p = product_detail::binary_shell(ProductKind::cartesian, g, h);
  int nh = h.order();
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < nh; ++v) {
      int a = pair_index(u, v, nh);
      for (int v2 = v + 1; v2 < nh; ++v2)
        if (h.has_edge(v, v2)) p.graph.add_edge(a, pair_index(u, v2, nh));
      for (int u2 = u + 1; u2 < g.order(); ++u2)
        if (g.has_edge(u, u2)) p.graph.add_edge(a, pair_index(u2, v, nh));
    }
  return p;
}

// G x H: both coordinates move along edges simultaneously.
inline ProductInstance direct_product(const Graph& g, const Graph& h) {
  ProductInstance p = product_detail::binary_shell(ProductKind::direct, g, h);
  int nh = h.order();
  for (auto [u1, u2] : g.edges())
    for (auto [v1, v2] : h.edges()) {
      p.graph.add_edge(pair_index(u1, v1, nh), pair_index(u2, v2, nh));
      p.graph.add_edge(pair_index(u1, v2, nh), pair_index(u2, v1, nh));
    }
  return p;
}

// Corona G oc H: G plus |V(G)| disjoint copies of H, copy x fully joined to
// the x-th vertex of G.
inline ProductInstance corona_product(const Graph& g, const Graph& h) {
  int ng = g.order(), nh = h.order();
  product_detail::check_order(static_cast<long>(ng) + static_cast<long>(ng) * nh);
  ProductInstance p;
  p.kind = ProductKind::corona;
  p.factors = {g, h};
  p.graph = Graph(ng + ng * nh);
  for (auto [u, v] : g.edges()) p.graph.add_edge(u, v);
  for (int x = 0; x < ng; ++x) {
    for (auto [a, b] : h.edges())
      p.graph.add_edge(p.corona_copy(x, a), p.corona_copy(x, b));
    for (int hv = 0; hv < nh; ++hv)
      p.graph.add_edge(p.corona_root(x), p.corona_copy(x, hv));
  }
  return p;
}

// Direct product K_{n_1} x ... x K_{n_t}: tuples adjacent iff they differ in
// every coordinate.
inline ProductInstance direct_power_complete(std::span<const int> orders) {
  if (orders.empty()) throw std::invalid_argument("direct power needs at least one factor");
  long total = 1;
  for (int n : orders) {
    if (n < 1) throw std::invalid_argument("complete factor order must be positive");
    total *= n;
    product_detail::check_order(total);
  }
  ProductInstance p;
  p.kind = ProductKind::direct_power;
  p.orders.assign(orders.begin(), orders.end());
  p.graph = Graph(static_cast<int>(total));
  for (int a = 0; a < p.graph.order(); ++a) {
    std::vector<int> ca = p.id_tuple(a);
    for (int b = a + 1; b < p.graph.order(); ++b) {
      std::vector<int> cb = p.id_tuple(b);
      bool all_differ = true;
      for (std::size_t i = 0; i < ca.size() && all_differ; ++i)
        all_differ = ca[i] != cb[i];
      if (all_differ) p.graph.add_edge(a, b);
    }
  }
  return p;
}

inline ProductInstance build_product(ProductKind kind, const Graph& g, const Graph& h) {
  switch (kind) {
    case ProductKind::lexicographic: return lexicographic_product(g, h);
    case ProductKind::cartesian: return cartesian_product(g, h);
    case ProductKind::direct: return direct_product(g, h);
    case ProductKind::corona: return corona_product(g, h);
    case ProductKind::direct_power: break;
  }
  throw std::invalid_argument("direct-power takes a list of orders, not two graphs");
}

}  // namespace ocdom
