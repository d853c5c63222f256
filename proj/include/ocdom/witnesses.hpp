#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "ocdom/cert_cache.hpp"
#include "ocdom/products.hpp"

namespace ocdom {

enum class TheoremId {
  lex_formula,      // four-case formula for the lexicographic product
  lex_k1,           // order-1 factor collapses the lexicographic product
  corona_formula,   // corona value |V(G)| * domination number of H
  cartesian_bound,  // column witness upper bound for the box product
  direct_diagonal,  // diagonal witness in direct powers of complete graphs
};

inline std::string_view to_string(TheoremId t) {
  switch (t) {
    case TheoremId::lex_formula: return "lex-formula";
    case TheoremId::lex_k1: return "lex-k1";
    case TheoremId::corona_formula: return "corona-formula";
    case TheoremId::cartesian_bound: return "cartesian-bound";
    case TheoremId::direct_diagonal: return "direct-diagonal";
  }
  return "?";
}

inline TheoremId theorem_from_string(std::string_view s) {
  if (s == "lex-formula") return TheoremId::lex_formula;
  if (s == "lex-k1") return TheoremId::lex_k1;
  if (s == "corona-formula") return TheoremId::corona_formula;
  if (s == "cartesian-bound") return TheoremId::cartesian_bound;
  if (s == "direct-diagonal") return TheoremId::direct_diagonal;
  throw std::invalid_argument("unknown theorem id: " + std::string(s));
}

// A structural claim instantiated on concrete factors: the claimed value, a
// constructed witness in product coordinates when the construction applies,
// and whether the claim is an equality or only an upper bound. A prediction
// that cannot be formed at all (hypotheses of the statement unmet) is
// `refused`. `preconditions_met` is softer: the formula still produces a
// number, but an order-1 factor steps outside what the argument assumes, so
// the number may be wrong and downstream checks classify mismatches
// accordingly.
struct Prediction {
  TheoremId theorem;
  std::string detail;
  int value = -1;
  std::optional<VertexSet> witness;
  bool equality = true;
  bool preconditions_met = true;
  bool refused = false;
  std::string refusal_reason;

  static Prediction refuse(TheoremId t, std::string reason) {
    Prediction p;
    p.theorem = t;
    p.refused = true;
    p.refusal_reason = std::move(reason);
    return p;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"theorem", to_string(theorem)}, {"refused", refused}};
    if (refused) {
      j["refusal_reason"] = refusal_reason;
      return j;
    }
    j["detail"] = detail;
    j["value"] = value;
    j["equality"] = equality;
    j["preconditions_met"] = preconditions_met;
    j["witness"] = witness ? nlohmann::json(witness->ids()) : nlohmann::json();
    return j;
  }
};

// Outer-connected domination number of the lexicographic product G o H from
// factor invariants: 1 when both factors have a dominating vertex, 2 when
// only G does, gamma(G) when only H does, and the total domination number of
// G when neither does. Witnesses follow the constructions behind each case.
inline Prediction lex_formula_prediction(const Graph& g, const Graph& h,
                                         CertCache& cache) {
  if (g.order() == 0 || h.order() == 0)
    return Prediction::refuse(TheoremId::lex_formula, "empty factor");
  if (!g.is_connected() || !h.is_connected())
    return Prediction::refuse(TheoremId::lex_formula, "disconnected factor");

  DominationCertificate cg = cache.get(g, DominationKind::domination);
  DominationCertificate ch = cache.get(h, DominationKind::domination);
  int nh = h.order();
  int universe = g.order() * nh;
  Prediction p;
  p.theorem = TheoremId::lex_formula;

  if (cg.value == 1 && ch.value == 1) {
    p.detail = "case-1";
    p.value = 1;
    int x = *cg.witness.begin(), y = *ch.witness.begin();
    p.witness = VertexSet(universe, {pair_index(x, y, nh)});
    p.preconditions_met = g.order() >= 2 && nh >= 2;
  } else if (cg.value == 1) {
    p.detail = "case-2";
    p.value = 2;
    int x = *cg.witness.begin();
    int xn = g.neighbors(x).lowest();
    if (xn >= 0)
      p.witness = VertexSet(universe, {pair_index(x, 0, nh), pair_index(xn, 0, nh)});
    p.preconditions_met = g.order() >= 2;
  } else if (ch.value == 1) {
    p.detail = "case-3";
    p.value = cg.value;
    int y = *ch.witness.begin();
    VertexSet w(universe);
    for (int x : cg.witness) w.insert(pair_index(x, y, nh));
    p.witness = w;
    p.preconditions_met = nh >= 2;
  } else {
    p.detail = "case-4";
    p.value = cache.value(g, DominationKind::total_domination);
    VertexSet w(universe);
    for (int x : cache.get(g, DominationKind::total_domination).witness)
      w.insert(pair_index(x, 0, nh));
    p.witness = w;
  }
  return p;
}

// An order-1 factor makes the lexicographic product a copy of the other
// factor, ids included, so the certificate carries over verbatim.
inline Prediction lex_k1_prediction(const Graph& g, const Graph& h, CertCache& cache) {
  if (g.order() == 0 || h.order() == 0)
    return Prediction::refuse(TheoremId::lex_k1, "empty factor");
  if (g.order() != 1 && h.order() != 1)
    return Prediction::refuse(TheoremId::lex_k1, "neither factor has order 1");
  Prediction p;
  p.theorem = TheoremId::lex_k1;
  const Graph& base = h.order() == 1 ? g : h;
  p.detail = h.order() == 1 ? "order-1-second-factor" : "order-1-first-factor";
  DominationCertificate cert = cache.get(base, DominationKind::outer_connected);
  p.value = cert.value;
  p.witness = VertexSet::from_bits(base.order(), cert.witness.bits());
  return p;
}

// Corona G oc H: pick a minimum dominating set of H and repeat it inside
// every satellite copy; |V(G)| * gamma(H) vertices in total.
inline Prediction corona_formula_prediction(const Graph& g, const Graph& h,
                                            CertCache& cache) {
  if (g.order() == 0 || h.order() == 0)
    return Prediction::refuse(TheoremId::corona_formula, "empty factor");
  if (!g.is_connected())
    return Prediction::refuse(TheoremId::corona_formula, "disconnected base graph");
  DominationCertificate ch = cache.get(h, DominationKind::domination);
  int ng = g.order(), nh = h.order();
  Prediction p;
  p.theorem = TheoremId::corona_formula;
  p.detail = "satellite-transport";
  p.value = ng * ch.value;
  VertexSet w(ng + ng * nh);
  for (int x = 0; x < ng; ++x)
    for (int y : ch.witness) w.insert(ng + x * nh + y);
  p.witness = w;
  p.preconditions_met = ng >= 2;
  return p;
}

// Box product upper bound: an optimum outer-connected dominating set of G,
// blown up to full columns of G box H, stays valid. Upper bound only.
inline Prediction cartesian_bound_prediction(const Graph& g, const Graph& h,
                                             CertCache& cache) {
  if (g.order() == 0 || h.order() == 0)
    return Prediction::refuse(TheoremId::cartesian_bound, "empty factor");
  if (!g.is_connected() || !h.is_connected())
    return Prediction::refuse(TheoremId::cartesian_bound, "disconnected factor");
  DominationCertificate cg = cache.get(g, DominationKind::outer_connected);
  int nh = h.order();
  Prediction p;
  p.theorem = TheoremId::cartesian_bound;
  p.detail = "full-columns";
  p.value = cg.value * nh;
  p.equality = false;
  VertexSet w(g.order() * nh);
  for (int x : cg.witness)
    for (int v = 0; v < nh; ++v) w.insert(pair_index(x, v, nh));
  p.witness = w;
  return p;
}

// Direct product of t complete graphs: the diagonal tuples (j, j, ..., j)
// for j = 0..t form an outer-connected dominating set of size t+1, matching
// the lower bound, provided every factor has at least t+1 vertices.
inline Prediction direct_diagonal_prediction(std::span<const int> orders) {
  int t = static_cast<int>(orders.size());
  if (t < 3)
    return Prediction::refuse(TheoremId::direct_diagonal,
                              "needs at least three factors");
  long total = 1;
  for (int n : orders) {
    if (n < t + 1)
      return Prediction::refuse(TheoremId::direct_diagonal,
                                "factor order below t+1");
    total *= n;
    if (total > kMaxVertices)
      return Prediction::refuse(TheoremId::direct_diagonal,
                                "product order exceeds supported maximum");
  }
  long stride_sum = 0, stride = 1;
  for (int i = t - 1; i >= 0; --i) {
    stride_sum += stride;
    stride *= orders[i];
  }
  Prediction p;
  p.theorem = TheoremId::direct_diagonal;
  p.detail = "diagonal";
  p.value = t + 1;
  VertexSet w(static_cast<int>(total));
  for (int j = 0; j <= t; ++j) w.insert(static_cast<int>(j * stride_sum));
  p.witness = w;
  return p;
}

}  // namespace ocdom
