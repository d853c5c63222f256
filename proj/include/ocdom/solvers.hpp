#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ocdom/graph.hpp"

namespace ocdom {

enum class DominationKind { domination, total_domination, outer_connected };

inline std::string_view to_string(DominationKind k) {
  switch (k) {
    case DominationKind::domination: return "domination";
    case DominationKind::total_domination: return "total-domination";
    case DominationKind::outer_connected: return "outer-connected-domination";
  }
  return "?";
}

inline DominationKind domination_kind_from_string(std::string_view s) {
  if (s == "domination" || s == "gamma") return DominationKind::domination;
  if (s == "total-domination" || s == "gamma-t") return DominationKind::total_domination;
  if (s == "outer-connected-domination" || s == "gamma-oc")
    return DominationKind::outer_connected;
  throw std::invalid_argument("unknown domination kind: " + std::string(s));
}

enum class SolverId { baseline, branch_and_bound };

inline std::string_view to_string(SolverId s) {
  return s == SolverId::baseline ? "baseline" : "branch-and-bound";
}

// ---------------------------------------------------------------------------
// Validity oracles. These are the definitions; everything else defers to them.

inline bool is_dominating(const Graph& g, const Bits& s) {
  Bits covered = s;
  for (int v = s.lowest(); v >= 0; v = s.next(v)) covered |= g.neighbors(v);
  return g.vertex_mask().subset_of(covered);
}

inline bool is_total_dominating(const Graph& g, const Bits& s) {
  Bits covered;
  for (int v = s.lowest(); v >= 0; v = s.next(v)) covered |= g.neighbors(v);
  return g.vertex_mask().subset_of(covered);
}

// Dominating and the vertices outside the set induce a connected subgraph.
inline bool is_outer_connected_dominating(const Graph& g, const Bits& s) {
  return is_dominating(g, s) && g.is_connected_within(g.vertex_mask().and_not(s));
}

inline bool is_valid_set(const Graph& g, const Bits& s, DominationKind kind) {
  switch (kind) {
    case DominationKind::domination: return is_dominating(g, s);
    case DominationKind::total_domination: return is_total_dominating(g, s);
    case DominationKind::outer_connected: return is_outer_connected_dominating(g, s);
  }
  return false;
}

inline bool is_valid_set(const Graph& g, const VertexSet& s, DominationKind kind) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  return is_valid_set(g, s.bits(), kind);
}

// ---------------------------------------------------------------------------

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t spent)
      : std::runtime_error("solver node budget exhausted after " +
                           std::to_string(spent) + " nodes"),
        nodes(spent) {}
  std::uint64_t nodes;
};

struct SolveOptions {
  std::optional<std::uint64_t> node_budget;  // nullopt: unlimited
};

struct DominationCertificate {
  DominationKind kind;
  int value;
  VertexSet witness;  // lexicographically least optimum set
  SolverId solver;
  std::uint64_t nodes_expanded;

  nlohmann::json to_json() const {
    return {{"kind", to_string(kind)},
            {"value", value},
            {"witness", witness.ids()},
            {"solver", to_string(solver)},
            {"nodes_expanded", nodes_expanded}};
  }
};

// Calls fn(bits) for every k-subset of {lo, ..., n-1}, ascending
// lexicographic order of the id tuple. Stops early (returning true) when fn
// returns true. Note tuple order is not mask order: {0,3} precedes {1,2}.
template <typename Fn>
bool for_each_combination(int lo, int n, int k, Fn&& fn) {
  if (k < 0 || k > n - lo) return false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = lo + i;
  while (true) {
    Bits b;
    for (int v : c) b.set(v);
    if (fn(b)) return true;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

namespace solver_detail {

inline void check_solvable(const Graph& g, DominationKind kind) {
  if (g.order() == 0)
    throw std::invalid_argument("domination number of the empty graph is undefined");
  if (kind == DominationKind::total_domination && g.has_isolated_vertex())
    throw std::invalid_argument(
        "total domination is undefined on graphs with an isolated vertex");
}

struct Ctx {
  const Graph& g;
  DominationKind kind;
  int n;
  Bits full;
  std::vector<Bits> cover;  // closed neighborhoods, open for total domination
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  Ctx(const Graph& graph, DominationKind k, const SolveOptions& opt)
      : g(graph),
        kind(k),
        n(graph.order()),
        full(graph.vertex_mask()),
        budget(opt.node_budget.value_or(std::numeric_limits<std::uint64_t>::max())) {
    cover.reserve(n);
    for (int v = 0; v < n; ++v)
      cover.push_back(k == DominationKind::total_domination ? graph.neighbors(v)
                                                            : graph.closed_neighbors(v));
  }

  void tick() {
    if (++nodes > budget) throw BudgetExhausted(nodes);
  }

  bool valid(const Bits& s) const { return is_valid_set(g, s, kind); }
};

// Branch and bound over classes (chosen ⊆ S, S ∩ excluded = ∅). Branches on
// the cover options of an uncovered vertex; options already tried move into
// the excluded set, so the classes partition the search space.
struct Bnb {
  Ctx& ctx;
  int best;

  // Strongest value any class member can still beat: number of uncovered
  // vertices divided by the best single-vertex coverage available.
  static int greedy_lower_bound(const Ctx& ctx, const Bits& uncovered,
                                const Bits& allowed) {
    int maxcov = 0;
    for (int u = allowed.lowest(); u >= 0; u = allowed.next(u))
      maxcov = std::max(maxcov, (ctx.cover[u] & uncovered).count());
    if (maxcov == 0) return -1;  // nobody can cover: class has no valid member
    return (uncovered.count() + maxcov - 1) / maxcov;
  }

  void dive(const Bits& chosen, int cnt, const Bits& covered, Bits excluded) {
    ctx.tick();
    if (covered == ctx.full) {
      leaf(chosen, cnt, excluded);
      return;
    }
    Bits uncovered = ctx.full.and_not(covered);
    Bits allowed = ctx.full.and_not(excluded).and_not(chosen);
    int lb = greedy_lower_bound(ctx, uncovered, allowed);
    if (lb < 0 || cnt + lb >= best) return;

    // Branch on the uncovered vertex with the fewest remaining cover options.
    Bits options;
    int fewest = ctx.n + 1;
    for (int v = uncovered.lowest(); v >= 0; v = uncovered.next(v)) {
      Bits opts = ctx.cover[v] & allowed;
      int c = opts.count();
      if (c < fewest) {
        fewest = c;
        options = opts;
        if (c == 0) return;
      }
    }
    for (int u = options.lowest(); u >= 0; u = options.next(u)) {
      Bits next_chosen = chosen;
      next_chosen.set(u);
      dive(next_chosen, cnt + 1, covered | ctx.cover[u], excluded);
      excluded.set(u);
    }
  }

  // Every vertex is covered, so `chosen` dominates. For plain and total
  // domination that is validity. For outer-connected domination the set may
  // still leave a disconnected complement; any valid superset in this class
  // must swallow all but one complement component, and each such completion
  // is itself valid, so trying them per component keeps the search exact.
  void leaf(const Bits& chosen, int cnt, const Bits& excluded) {
    if (ctx.kind != DominationKind::outer_connected) {
      best = std::min(best, cnt);
      return;
    }
    Bits outside = ctx.full.and_not(chosen);
    if (outside.empty()) {
      best = std::min(best, cnt);
      return;
    }
    Bits rest = outside;
    while (!rest.empty()) {
      Bits comp = ctx.g.component_within(outside, rest.lowest());
      rest = rest.and_not(comp);
      Bits completion = outside.and_not(comp);
      if (!completion.intersects(excluded))
        best = std::min(best, cnt + completion.count());
    }
  }
};

// Depth-first descent in ascending id order at the known optimum size; the
// first valid set found is the lexicographically least one. Prunes use only
// domination necessities, which every valid set obeys.
struct LexWitnessSearch {
  Ctx& ctx;
  int k;
  Bits found{};

  bool descend(int lo, const Bits& chosen, int cnt, const Bits& covered) {
    ctx.tick();
    if (cnt == k) {
      if (covered == ctx.full &&
          (ctx.kind != DominationKind::outer_connected ||
           ctx.g.is_connected_within(ctx.full.and_not(chosen)))) {
        found = chosen;
        return true;
      }
      return false;
    }
    Bits uncovered = ctx.full.and_not(covered);
    if (!uncovered.empty()) {
      Bits avail = ctx.full.and_not(Bits::first_n(lo));
      int maxcov = 0;
      for (int v = uncovered.lowest(); v >= 0; v = uncovered.next(v))
        if (!ctx.cover[v].intersects(avail)) return false;
      for (int u = avail.lowest(); u >= 0; u = avail.next(u))
        maxcov = std::max(maxcov, (ctx.cover[u] & uncovered).count());
      if ((uncovered.count() + maxcov - 1) / maxcov > k - cnt) return false;
    }
    for (int a = lo; a <= ctx.n - (k - cnt); ++a) {
      Bits next_chosen = chosen;
      next_chosen.set(a);
      if (descend(a + 1, next_chosen, cnt + 1, covered | ctx.cover[a])) return true;
    }
    return false;
  }
};

}  // namespace solver_detail

// Reference solver: test every subset in ascending tuple order, sizes
// ascending. The first valid set is the optimum and the canonical witness.
inline DominationCertificate solve_baseline(const Graph& g, DominationKind kind,
                                            const SolveOptions& opt = {}) {
  solver_detail::check_solvable(g, kind);
  solver_detail::Ctx ctx(g, kind, opt);
  for (int k = 0; k <= ctx.n; ++k) {
    Bits hit;
    bool done = for_each_combination(0, ctx.n, k, [&](const Bits& s) {
      ctx.tick();
      if (!ctx.valid(s)) return false;
      hit = s;
      return true;
    });
    if (done)
      return {kind, k, VertexSet::from_bits(ctx.n, hit), SolverId::baseline, ctx.nodes};
  }
  throw std::logic_error("exhaustive search found no valid set");
}

// Two phases: branch and bound pins the optimum value, then a pruned
// lexicographic descent at that size recovers the canonical witness. Output
// is identical to solve_baseline, only faster.
inline DominationCertificate solve_bnb(const Graph& g, DominationKind kind,
                                       const SolveOptions& opt = {}) {
  solver_detail::check_solvable(g, kind);
  solver_detail::Ctx ctx(g, kind, opt);

  // The full vertex set is always valid here (total domination is guarded
  // against isolated vertices above), so `n` seeds the incumbent.
  solver_detail::Bnb bnb{ctx, ctx.n};
  bnb.dive(Bits{}, 0, Bits{}, Bits{});

  solver_detail::LexWitnessSearch lex{ctx, bnb.best};
  if (!lex.descend(0, Bits{}, 0, Bits{}))
    throw std::logic_error("witness descent failed at the proven optimum");
  return {kind, bnb.best, VertexSet::from_bits(ctx.n, lex.found),
          SolverId::branch_and_bound, ctx.nodes};
}

inline DominationCertificate solve(const Graph& g, DominationKind kind,
                                   SolverId engine = SolverId::branch_and_bound,
                                   const SolveOptions& opt = {}) {
  return engine == SolverId::baseline ? solve_baseline(g, kind, opt)
                                      : solve_bnb(g, kind, opt);
}

// ---------------------------------------------------------------------------
// Exhaustive subset scan, used for product lower bounds: did any subset of
// size at most `max_size` validate? Every subset is visited (no early exit),
// so `checked` depends only on the instance. Work is split by leading
// element across threads and merged with order-independent reductions,
// keeping the result identical for every job count.

struct ScanResult {
  bool found_valid;
  std::uint64_t checked;
};

inline ScanResult scan_for_valid_set(const Graph& g, DominationKind kind,
                                     int max_size, int jobs = 1) {
  int n = g.order();
  std::atomic<bool> found{false};
  std::atomic<std::uint64_t> checked{0};
  if (max_size >= 0) {
    ++checked;
    if (is_valid_set(g, Bits{}, kind)) found = true;
  }
  jobs = std::max(1, jobs);
  auto worker = [&](int t) {
    std::uint64_t local = 0;
    bool local_found = false;
    for (int a = t; a < n; a += jobs) {
      for (int size = 1; size <= max_size; ++size) {
        for_each_combination(a + 1, n, size - 1, [&](const Bits& tail) {
          Bits s = tail;
          s.set(a);
          ++local;
          if (is_valid_set(g, s, kind)) local_found = true;
          return false;
        });
      }
    }
    checked += local;
    if (local_found) found = true;
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return {found.load(), checked.load()};
}

}  // namespace ocdom
