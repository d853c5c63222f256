#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ocdom/cert_cache.hpp"
#include "ocdom/generators.hpp"
#include "ocdom/graph_io.hpp"

namespace ocdom {

// Every labeled graph on {0..n-1}, edge-mask ascending. Mask bit k toggles
// the k-th edge in column-major upper-triangle order — the same order graph6
// packs bits, so enumeration order and encoding order agree.
inline std::vector<Graph> enumerate_labeled_graphs(int n, bool connected_only) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("exhaustive enumeration limited to order <= 6");
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1) g.add_edge(slots[k].first, slots[k].second);
    if (!connected_only || g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

// All labeled connected graphs with 1..max_n vertices, order ascending, then
// edge-mask ascending within each order.
inline std::vector<Graph> enumerate_labeled_connected(int max_n) {
  if (max_n < 1 || max_n > 6)
    throw std::invalid_argument("max order must be in [1, 6]");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph> batch = enumerate_labeled_graphs(n, true);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

struct CorpusSpec {
  enum class Mode { exhaustive, random, file };
  Mode mode = Mode::exhaustive;

  int max_n = 4;  // exhaustive: connected graphs with 1..max_n vertices

  int n = 5;  // random: `count` seeded connected draws on n vertices
  int count = 20;
  double edge_prob = 0.5;
  std::uint64_t seed = 1;

  std::string path;  // file: graph6 tokens, one per line

  // Filters applied after generation.
  std::optional<int> min_order;
  std::optional<int> max_order;
  std::optional<bool> require_connected;
  std::optional<bool> gamma_is_one;

  std::vector<Graph> graphs(CertCache* cache = nullptr) const {
    std::vector<Graph> all;
    switch (mode) {
      case Mode::exhaustive:
        all = enumerate_labeled_connected(max_n);
        break;
      case Mode::random:
        for (int i = 0; i < count; ++i)
          all.push_back(random_connected_graph(n, edge_prob, seed + i));
        break;
      case Mode::file:
        all = load_graph6_file(path);
        break;
    }
    CertCache local;
    CertCache* gamma_cache = cache ? cache : &local;
    std::vector<Graph> kept;
    for (Graph& g : all) {
      if (min_order && g.order() < *min_order) continue;
      if (max_order && g.order() > *max_order) continue;
      if (require_connected && g.is_connected() != *require_connected) continue;
      if (gamma_is_one) {
        if (g.order() == 0) continue;
        bool one = gamma_cache->value(g, DominationKind::domination) == 1;
        if (one != *gamma_is_one) continue;
      }
      kept.push_back(std::move(g));
    }
    return kept;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    switch (mode) {
      case Mode::exhaustive:
        j = {{"mode", "exhaustive"}, {"max_n", max_n}};
        break;
      case Mode::random:
        j = {{"mode", "random"},
             {"n", n},
             {"count", count},
             {"edge_prob", edge_prob},
             {"seed", seed}};
        break;
      case Mode::file:
        j = {{"mode", "file"}, {"path", path}};
        break;
    }
    if (min_order) j["min_order"] = *min_order;
    if (max_order) j["max_order"] = *max_order;
    if (require_connected) j["require_connected"] = *require_connected;
    if (gamma_is_one) j["gamma_is_one"] = *gamma_is_one;
    return j;
  }
};

}  // namespace ocdom
