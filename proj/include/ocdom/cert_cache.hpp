#pragma once

#include <mutex>
#include <string>
#include <unordered_map>

#include "ocdom/graph6.hpp"
#include "ocdom/solvers.hpp"

namespace ocdom {

// Memoizes certificates keyed by graph6 encoding and kind. Safe to share
// across verification worker threads; the solver is deterministic, so a
// duplicated computation under contention returns the same certificate and
// first insert wins.
class CertCache {
 public:
  explicit CertCache(SolverId engine = SolverId::branch_and_bound,
                     std::optional<std::uint64_t> budget = {})
      : engine_(engine), opts_{budget} {}

  // The returned reference stays valid for the cache's lifetime: entries are
  // only ever inserted, and node-based maps keep element addresses stable.
  const DominationCertificate& get(const Graph& g, DominationKind kind) {
    std::string key = emit_graph6(g) + '|' + std::string(to_string(kind));
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    DominationCertificate cert = solve(g, kind, engine_, opts_);
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(cert)).first->second;
  }

  int value(const Graph& g, DominationKind kind) { return get(g, kind).value; }

  SolverId engine() const { return engine_; }

 private:
  SolverId engine_;
  SolveOptions opts_;
  std::mutex mu_;
  std::unordered_map<std::string, DominationCertificate> map_;
};

}  // namespace ocdom
