#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ocdom/checks.hpp"
#include "ocdom/corpus.hpp"

namespace ocdom {

struct SuiteConfig {
  std::string out_path;  // JSONL destination; empty keeps records in memory only
  int jobs = 1;
  std::optional<std::uint64_t> budget;
  SolverId engine = SolverId::branch_and_bound;
  std::uint64_t seed = 2025;   // drives pair sampling, nothing else
  int product_order_cap = 20;  // exact product solves in sweeps stay under this
  int sample_above_cap = 32;   // seeded sample size taken from over-cap pairs
};

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct SuiteCounts {
  int pass = 0, discrepancy = 0, refused = 0, budget = 0;
  int total() const { return pass + discrepancy + refused + budget; }
};

struct RunReport {
  std::string config_digest;
  std::map<std::string, SuiteCounts> per_check;
  std::vector<nlohmann::json> discrepancies;
  std::map<std::string, double> wall_seconds;
  std::vector<nlohmann::json> records;  // sorted by instance key
  int reused = 0;

  int total_records() const { return static_cast<int>(records.size()); }

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [id, c] : per_check) {
      checks[id] = {{"pass", c.pass},
                    {"discrepancy", c.discrepancy},
                    {"refused", c.refused},
                    {"budget_exhausted", c.budget},
                    {"total", c.total()}};
    }
    for (const auto& [id, secs] : wall_seconds) checks[id]["wall_seconds"] = secs;
    return {{"config_digest", config_digest},
            {"checks", checks},
            {"records", total_records()},
            {"reused", reused},
            {"discrepancies", discrepancies}};
  }
};

// A schedulable unit: knows the record keys it will produce (for resume
// lookups) and how to produce them.
struct WorkItem {
  std::vector<std::string> keys;
  std::function<std::vector<VerificationRecord>()> run;
};

// --- key helpers; must mirror VerificationRecord::key() exactly -----------

inline std::string instance_key(const std::string& check, const Graph& g) {
  return check + '|' + emit_graph6(g);
}
inline std::string instance_key(const std::string& check, const Graph& g,
                                const Graph& h) {
  return check + '|' + emit_graph6(g) + ',' + emit_graph6(h);
}
inline std::string instance_key(const std::string& check, const Graph& g,
                                const Graph& h, const Graph& k) {
  return check + '|' + emit_graph6(g) + ',' + emit_graph6(h) + ',' + emit_graph6(k);
}
inline std::string instance_key(const std::string& check, std::span<const int> orders) {
  std::string s = check + "|orders:";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(orders[i]);
  }
  return s;
}

// --- item factories --------------------------------------------------------

inline WorkItem item_min_degree_bound(Graph g, CheckContext& ctx) {
  return {{instance_key("thm1-bound", g)},
          [g = std::move(g), &ctx] { return std::vector{check_min_degree_bound(g, ctx)}; }};
}

// One of the single-record pair checks: thm5, lem-k1, lem1-bound, lem-th2,
// lem-th4.
inline WorkItem item_pair_check(const std::string& check, Graph g, Graph h,
                                CheckContext& ctx) {
  std::string key = instance_key(check, g, h);  // before the moves below
  auto run = [check, g = std::move(g), h = std::move(h), &ctx] {
    if (check == "thm5") return std::vector{check_lex_formula(g, h, ctx)};
    if (check == "lem-k1") return std::vector{check_lex_k1(g, h, ctx)};
    if (check == "lem1-bound") return std::vector{check_lex_floor(g, h, ctx)};
    if (check == "lem-th2") return std::vector{check_lex_gamma_monotone(g, h, ctx)};
    if (check == "lem-th4") return std::vector{check_lex_total_bound(g, h, ctx)};
    throw std::invalid_argument("unknown pair check: " + check);
  };
  return {{std::move(key)}, std::move(run)};
}

inline WorkItem item_corona(Graph g, Graph h, CheckContext& ctx) {
  return {{instance_key("thm6-corona", g, h), instance_key("cor-corona-size", g, h)},
          [g = std::move(g), h = std::move(h), &ctx] { return check_corona(g, h, ctx); }};
}

inline WorkItem item_cartesian(Graph g, Graph h, CheckContext& ctx) {
  return {{instance_key("claim1-validity", g, h), instance_key("thm-cart-bound", g, h)},
          [g = std::move(g), h = std::move(h), &ctx] { return check_cartesian(g, h, ctx); }};
}

inline WorkItem item_direct(std::vector<int> orders, CheckContext& ctx) {
  std::span<const int> view(orders);
  return {{instance_key("cor-direct-lb", view), instance_key("thm-direct-sharp", view)},
          [orders = std::move(orders), &ctx] {
            return check_direct(std::span<const int>(orders), ctx);
          }};
}

inline WorkItem item_vizing(Graph g, Graph h, Graph k, CheckContext& ctx) {
  return {{instance_key("vizing-equivalent", g, h, k)},
          [g = std::move(g), h = std::move(h), k = std::move(k), &ctx] {
            return std::vector{check_vizing_equivalent(g, h, k, ctx)};
          }};
}

// --- runner ----------------------------------------------------------------

// Executes the items, reusing any records already persisted under out_path,
// and rewrites the JSONL sorted by instance key. Worker threads take items
// round-robin, so the record set is independent of the job count; only the
// single sorted writer touches the file.
inline RunReport run_work_items(const std::vector<WorkItem>& items,
                                const SuiteConfig& cfg,
                                const std::string& digest_seed) {
  namespace fs = std::filesystem;
  using clock = std::chrono::steady_clock;

  std::unordered_map<std::string, nlohmann::json> have;
  if (!cfg.out_path.empty() && fs::exists(cfg.out_path)) {
    std::ifstream in(cfg.out_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line);
      std::string key = VerificationRecord::from_json(j).key();
      have.emplace(std::move(key), std::move(j));
    }
  }

  struct Slot {
    std::vector<nlohmann::json> records;
    double secs = 0;
    bool reused = false;
  };
  std::vector<Slot> slots(items.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool cached = !items[i].keys.empty();
    for (const std::string& k : items[i].keys)
      cached = cached && have.count(k) > 0;
    if (cached) {
      for (const std::string& k : items[i].keys) slots[i].records.push_back(have[k]);
      slots[i].reused = true;
    } else {
      pending.push_back(i);
    }
  }

  int jobs = std::max(1, cfg.jobs);
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&](int t) {
    try {
      for (std::size_t idx = t; idx < pending.size(); idx += jobs) {
        std::size_t i = pending[idx];
        auto t0 = clock::now();
        std::vector<VerificationRecord> recs = items[i].run();
        slots[i].secs = std::chrono::duration<double>(clock::now() - t0).count();
        for (const VerificationRecord& r : recs)
          slots[i].records.push_back(r.to_json());
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };
  if (jobs == 1 || pending.size() <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::map<std::string, nlohmann::json> merged;
  RunReport report;
  report.config_digest = fnv1a_hex(digest_seed);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (slots[i].reused) ++report.reused;
    if (!slots[i].reused && !slots[i].records.empty()) {
      double share = slots[i].secs / slots[i].records.size();
      for (const nlohmann::json& j : slots[i].records)
        report.wall_seconds[j.at("check").get<std::string>()] += share;
    }
    for (nlohmann::json& j : slots[i].records) {
      std::string key = VerificationRecord::from_json(j).key();
      merged.emplace(std::move(key), std::move(j));
    }
  }

  for (auto& [key, j] : merged) {
    SuiteCounts& c = report.per_check[j.at("check").get<std::string>()];
    switch (verdict_from_string(j.at("verdict").get<std::string>())) {
      case Verdict::pass: ++c.pass; break;
      case Verdict::discrepancy:
        ++c.discrepancy;
        report.discrepancies.push_back(j);
        break;
      case Verdict::refused_precondition: ++c.refused; break;
      case Verdict::budget_exhausted: ++c.budget; break;
    }
    report.records.push_back(j);
  }

  if (!cfg.out_path.empty()) {
    fs::path out(cfg.out_path);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    fs::path tmp = out;
    tmp += ".tmp";
    {
      std::ofstream f(tmp, std::ios::trunc);
      if (!f) throw std::runtime_error("cannot write " + tmp.string());
      for (const nlohmann::json& j : report.records) f << j.dump() << '\n';
    }
    fs::rename(tmp, out);
  }
  return report;
}

// --- pair selection under the product-order cap ----------------------------

inline int product_order_of(ProductKind kind, const Graph& g, const Graph& h) {
  return kind == ProductKind::corona ? g.order() * (1 + h.order())
                                     : g.order() * h.order();
}

// Full cross-product below the cap; a seeded fixed-size sample above it
// (still bounded by what the solver can represent). Fisher-Yates with raw
// rng draws, since std::shuffle sequences vary across standard libraries.
inline std::vector<std::pair<std::size_t, std::size_t>> select_pairs(
    const std::vector<Graph>& gs, const std::vector<Graph>& hs, ProductKind kind,
    const SuiteConfig& cfg) {
  std::vector<std::pair<std::size_t, std::size_t>> under, over;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < hs.size(); ++j) {
      int order = product_order_of(kind, gs[i], hs[j]);
      if (order <= cfg.product_order_cap)
        under.emplace_back(i, j);
      else if (order <= kMaxVertices)
        over.emplace_back(i, j);
    }
  std::size_t take = std::min<std::size_t>(cfg.sample_above_cap, over.size());
  if (take > 0) {
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t i = 0; i < take; ++i) {
      std::size_t j = i + rng() % (over.size() - i);
      std::swap(over[i], over[j]);
    }
    under.insert(under.end(), over.begin(), over.begin() + take);
  }
  return under;
}

// --- generic suite over a corpus -------------------------------------------

inline const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = {
      "thm1-bound",      "lem-th2",       "lem-th4",         "thm5",
      "lem-k1",          "lem1-bound",    "thm6-corona",     "cor-corona-size",
      "thm-cart-bound",  "claim1-validity", "cor-direct-lb", "thm-direct-sharp",
      "vizing-equivalent"};
  return ids;
}

// Runs the requested checks on every applicable instance, pair, or triple
// drawn from the corpus. Pair checks use the full ordered cross-product
// under the product-order cap plus a seeded sample above it; vizing triples
// filter the corpus by domination class first.
inline RunReport run_suite(const CorpusSpec& corpus,
                           std::vector<std::string> checks, const SuiteConfig& cfg,
                           const std::vector<std::vector<int>>& direct_orders = {}) {
  if (checks.size() == 1 && checks[0] == "all") checks = all_check_ids();
  for (const std::string& c : checks) {
    const auto& known = all_check_ids();
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw std::invalid_argument("unknown check id: " + c);
  }
  auto wants = [&](std::string_view id) {
    return std::find(checks.begin(), checks.end(), id) != checks.end();
  };

  CertCache cache(cfg.engine, cfg.budget);
  CheckContext ctx{cache, cfg.jobs};
  std::vector<Graph> graphs = corpus.graphs(&cache);

  std::vector<WorkItem> items;
  std::set<std::string> seen;
  auto add = [&](WorkItem it) {
    if (seen.insert(it.keys.front()).second) items.push_back(std::move(it));
  };

  if (wants("thm1-bound"))
    for (const Graph& g : graphs) add(item_min_degree_bound(g, ctx));

  for (const char* check : {"thm5", "lem-k1", "lem1-bound", "lem-th2", "lem-th4"})
    if (wants(check))
      for (auto [i, j] : select_pairs(graphs, graphs, ProductKind::lexicographic, cfg))
        add(item_pair_check(check, graphs[i], graphs[j], ctx));

  if (wants("thm6-corona") || wants("cor-corona-size"))
    for (auto [i, j] : select_pairs(graphs, graphs, ProductKind::corona, cfg))
      add(item_corona(graphs[i], graphs[j], ctx));

  if (wants("claim1-validity") || wants("thm-cart-bound"))
    for (auto [i, j] : select_pairs(graphs, graphs, ProductKind::cartesian, cfg))
      add(item_cartesian(graphs[i], graphs[j], ctx));

  if (wants("cor-direct-lb") || wants("thm-direct-sharp"))
    for (const std::vector<int>& orders : direct_orders) add(item_direct(orders, ctx));

  if (wants("vizing-equivalent")) {
    // Hypothesis prefilter keeps the triple space sane; the checker still
    // re-validates and refuses anything that slips through.
    std::vector<std::size_t> gh, ks;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      if (g.order() == 0 || !g.is_connected()) continue;
      if (cache.value(g, DominationKind::domination) == 1)
        ks.push_back(i);
      else
        gh.push_back(i);
    }
    for (std::size_t a : gh)
      for (std::size_t b : gh)
        for (std::size_t c : ks) {
          long rhs_order = static_cast<long>(graphs[a].order()) * graphs[b].order() *
                           graphs[c].order();
          if (rhs_order <= cfg.product_order_cap)
            add(item_vizing(graphs[a], graphs[b], graphs[c], ctx));
        }
  }

  nlohmann::json digest = {{"corpus", corpus.to_json()},
                           {"checks", checks},
                           {"cap", cfg.product_order_cap},
                           {"seed", cfg.seed},
                           {"engine", to_string(cfg.engine)},
                           {"budget", cfg.budget ? nlohmann::json(*cfg.budget)
                                                 : nlohmann::json()}};
  return run_work_items(items, cfg, digest.dump());
}

// --- the bundled reproduction scenario -------------------------------------

// Fixed scenario list:
//   1. minimum-degree bound on every labeled connected graph up to order 6
//   2. lexicographic family on all ordered pairs of connected graphs up to
//      order 4, K1 collapse on every connected graph up to order 5, and a
//      seeded sample of order-5 pairs within the product cap
//   3. corona checks for connected bases up to order 4 against every labeled
//      graph up to order 3
//   4. box-product checks on all ordered connected pairs up to order 4
//   5. direct powers (2,2,2), (4,4,4), (5,4,4)
//   6. the Vizing-equivalent inequality on {P4, C4, C5}^2 x {K1, K2, K3}
inline RunReport run_reproduction(const SuiteConfig& cfg) {
  CertCache cache(cfg.engine, cfg.budget);
  CheckContext ctx{cache, cfg.jobs};
  std::vector<WorkItem> items;
  std::set<std::string> seen;
  auto add = [&](WorkItem it) {
    if (seen.insert(it.keys.front()).second) items.push_back(std::move(it));
  };

  for (const Graph& g : enumerate_labeled_connected(6))
    add(item_min_degree_bound(g, ctx));

  const char* pair_checks[] = {"thm5", "lem1-bound", "lem-th2", "lem-th4"};
  std::vector<Graph> small = enumerate_labeled_connected(4);
  for (const Graph& g : small)
    for (const Graph& h : small)
      for (const char* check : pair_checks) add(item_pair_check(check, g, h, ctx));

  Graph k1 = complete_graph(1);
  for (const Graph& b : enumerate_labeled_connected(5)) {
    add(item_pair_check("lem-k1", b, k1, ctx));
    add(item_pair_check("lem-k1", k1, b, ctx));
  }

  std::vector<Graph> five = enumerate_labeled_graphs(5, true);
  std::mt19937_64 rng(cfg.seed);
  for (int draw = 0; draw < 30; ++draw) {
    const Graph& a = five[rng() % five.size()];
    const Graph& b = small[rng() % small.size()];
    if (a.order() * b.order() <= cfg.product_order_cap)
      for (const char* check : pair_checks) {
        add(item_pair_check(check, a, b, ctx));
        add(item_pair_check(check, b, a, ctx));
      }
  }

  std::vector<Graph> satellites;
  for (int n = 1; n <= 3; ++n)
    for (Graph& h : enumerate_labeled_graphs(n, false)) satellites.push_back(std::move(h));
  for (const Graph& g : small)
    for (const Graph& h : satellites) add(item_corona(g, h, ctx));

  for (const Graph& g : small)
    for (const Graph& h : small) add(item_cartesian(g, h, ctx));

  for (std::vector<int> orders : {std::vector<int>{2, 2, 2}, {4, 4, 4}, {5, 4, 4}})
    add(item_direct(std::move(orders), ctx));

  std::vector<Graph> legs = {path_graph(4), cycle_graph(4), cycle_graph(5)};
  std::vector<Graph> companions = {complete_graph(1), complete_graph(2),
                                   complete_graph(3)};
  for (const Graph& g : legs)
    for (const Graph& h : legs)
      for (const Graph& k : companions) add(item_vizing(g, h, k, ctx));

  nlohmann::json digest = {{"scenario", "reproduce"},
                           {"cap", cfg.product_order_cap},
                           {"seed", cfg.seed},
                           {"engine", to_string(cfg.engine)},
                           {"budget", cfg.budget ? nlohmann::json(*cfg.budget)
                                                 : nlohmann::json()}};
  return run_work_items(items, cfg, digest.dump());
}

}  // namespace ocdom
