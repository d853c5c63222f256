#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ocdom/bits.hpp"

namespace ocdom {

// Subset of the vertices of a fixed graph. Knows its universe size so that
// complements and validity checks need no extra arguments.
class VertexSet {
 public:
  class const_iterator {
   public:
    using value_type = int;
    const_iterator(const Bits* b, int v) : bits_(b), v_(v) {}
    int operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = bits_->next(v_);
      return *this;
    }
    bool operator==(const const_iterator& o) const { return v_ == o.v_; }

   private:
    const Bits* bits_;
    int v_;
  };

  VertexSet() = default;

  explicit VertexSet(int universe) : universe_(universe) {
    if (universe < 0 || universe > kMaxVertices)
      throw std::invalid_argument("vertex set universe out of range");
  }

  VertexSet(int universe, std::initializer_list<int> ids) : VertexSet(universe) {
    for (int v : ids) insert(v);
  }

  static VertexSet from_bits(int universe, const Bits& b) {
    VertexSet s(universe);
    if (!b.subset_of(Bits::first_n(universe)))
      throw std::invalid_argument("bits exceed vertex set universe");
    s.bits_ = b;
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    s.bits_ = Bits::first_n(universe);
    return s;
  }

  int universe() const { return universe_; }
  int size() const { return bits_.count(); }
  bool empty() const { return bits_.empty(); }
  bool contains(int v) const { return v >= 0 && v < universe_ && bits_.test(v); }

  void insert(int v) {
    if (v < 0 || v >= universe_)
      throw std::out_of_range("vertex id outside universe");
    bits_.set(v);
  }

  void erase(int v) {
    if (v >= 0 && v < universe_) bits_.reset(v);
  }

  const Bits& bits() const { return bits_; }

  VertexSet complement() const {
    VertexSet s(universe_);
    s.bits_ = Bits::first_n(universe_).and_not(bits_);
    return s;
  }

  // Member ids in ascending order.
  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }

  const_iterator begin() const { return {&bits_, bits_.lowest()}; }
  const_iterator end() const { return {&bits_, -1}; }

  bool operator==(const VertexSet&) const = default;

 private:
  int universe_ = 0;
  Bits bits_;
};

// Simple undirected graph on vertex ids 0..n-1, adjacency kept as bitmasks.
// No loops, no multi-edges.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  void add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::out_of_range("edge endpoint outside graph");
    if (u == v) throw std::invalid_argument("self-loops not supported");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && adj_[u].test(v);
  }

  // Open neighborhood N(v) as raw bits (hot-path form).
  const Bits& neighbors(int v) const { return adj_.at(v); }

  Bits closed_neighbors(int v) const {
    Bits b = adj_.at(v);
    b.set(v);
    return b;
  }

  VertexSet open_neighborhood(int v) const {
    return VertexSet::from_bits(n_, neighbors(v));
  }

  VertexSet closed_neighborhood(int v) const {
    return VertexSet::from_bits(n_, closed_neighbors(v));
  }

  int degree(int v) const { return adj_.at(v).count(); }

  int min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min degree of the empty graph");
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
      if (adj_[v].empty()) return true;
    return false;
  }

  Bits vertex_mask() const { return Bits::first_n(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
        out.emplace_back(u, v);
    return out;
  }

  // Does `sub` induce a connected subgraph? Empty and singleton sets count as
  // connected. Mask-based BFS; this is the solver's hot path.
  bool is_connected_within(const Bits& sub) const {
    int start = sub.lowest();
    if (start < 0) return true;
    Bits seen = Bits::single(start);
    Bits frontier = seen;
    while (!frontier.empty()) {
      Bits grow;
      for (int v = frontier.lowest(); v >= 0; v = frontier.next(v))
        grow |= adj_[v];
      frontier = (grow & sub).and_not(seen);
      seen |= frontier;
    }
    return sub.subset_of(seen);
  }

  bool is_connected() const { return n_ <= 1 || is_connected_within(vertex_mask()); }

  // Connected component of `sub` containing `start` (which must be in `sub`).
  Bits component_within(const Bits& sub, int start) const {
    Bits seen = Bits::single(start);
    Bits frontier = seen;
    while (!frontier.empty()) {
      Bits grow;
      for (int v = frontier.lowest(); v >= 0; v = frontier.next(v))
        grow |= adj_[v];
      frontier = (grow & sub).and_not(seen);
      seen |= frontier;
    }
    return seen;
  }

  // Subgraph induced by `keep`, vertices relabeled 0..k-1 in ascending order
  // of their original ids. When `orig` is non-null it receives the original
  // id of each new vertex.
  Graph induced(const VertexSet& keep, std::vector<int>* orig = nullptr) const {
    if (keep.universe() != n_)
      throw std::invalid_argument("induced subgraph: universe mismatch");
    std::vector<int> old_ids = keep.ids();
    Graph sub(static_cast<int>(old_ids.size()));
    for (int i = 0; i < sub.order(); ++i)
      for (int j = i + 1; j < sub.order(); ++j)
        if (adj_[old_ids[i]].test(old_ids[j])) sub.add_edge(i, j);
    if (orig) *orig = std::move(old_ids);
    return sub;
  }

  bool operator==(const Graph&) const = default;

 private:
  static int checked_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order out of range [0, 128]");
    return n;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<Bits> adj_;
};

}  // namespace ocdom
