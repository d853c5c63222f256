#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ocdom/cert_cache.hpp"
#include "ocdom/checks.hpp"
#include "ocdom/generators.hpp"

using namespace ocdom;

namespace {

struct Fixture {
  CertCache cache;
  CheckContext ctx{cache, 1};
};

}  // namespace

TEST_CASE("verdict names round-trip") {
  CHECK(to_string(Verdict::pass) == "pass");
  CHECK(to_string(Verdict::refused_precondition) == "refused-precondition");
  CHECK(verdict_from_string("budget-exhausted") == Verdict::budget_exhausted);
  CHECK(verdict_from_string("discrepancy") == Verdict::discrepancy);
  CHECK_THROWS_AS(verdict_from_string("meh"), std::invalid_argument);
}

TEST_CASE("record keys identify check and instance") {
  Fixture f;
  VerificationRecord rec = check_min_degree_bound(path_graph(4), f.ctx);
  CHECK(rec.key() == "thm1-bound|Ch");
  VerificationRecord pair = check_lex_floor(path_graph(3), complete_graph(2), f.ctx);
  CHECK(pair.key() == "lem1-bound|Bg,A_");

  nlohmann::json j = rec.to_json();
  CHECK(j.at("check") == "thm1-bound");
  CHECK(j.at("verdict") == "pass");
  VerificationRecord back = VerificationRecord::from_json(j);
  CHECK(back.key() == rec.key());
  CHECK(back.verdict == rec.verdict);
  CHECK(back.data == rec.data);
}

TEST_CASE("minimum degree bound check") {
  Fixture f;
  VerificationRecord rec = check_min_degree_bound(path_graph(4), f.ctx);
  CHECK(rec.verdict == Verdict::pass);
  CHECK(rec.data.at("n") == 4);
  CHECK(rec.data.at("min_degree") == 1);
  CHECK(rec.data.at("gamma_oc") == 2);
  CHECK(rec.data.at("bound") == 3);

  // Tight on complete graphs minus nothing: gamma-oc(K4) = 1 = 4 - 3.
  VerificationRecord k4 = check_min_degree_bound(complete_graph(4), f.ctx);
  CHECK(k4.verdict == Verdict::pass);
  CHECK(k4.data.at("gamma_oc") == k4.data.at("bound"));
}

TEST_CASE("composition formula check classifies order-one mismatches") {
  Fixture f;
  CHECK(check_lex_formula(path_graph(4), path_graph(4), f.ctx).verdict ==
        Verdict::pass);

  // P5 o K1: predicted 2 vs exact 3, outside the formula's preconditions.
  VerificationRecord rec = check_lex_formula(path_graph(5), complete_graph(1), f.ctx);
  CHECK(rec.verdict == Verdict::discrepancy);
  CHECK(rec.klass == "implicit-precondition");
  CHECK(rec.data.at("predicted") == 2);
  CHECK(rec.data.at("exact") == 3);
  CHECK(rec.data.at("preconditions_met") == false);

  // Same shape but values coincide: still a pass.
  VerificationRecord ok = check_lex_formula(complete_graph(1), path_graph(4), f.ctx);
  CHECK(ok.verdict == Verdict::pass);
  CHECK(ok.data.at("preconditions_met") == false);
}

TEST_CASE("order-one transport check") {
  Fixture f;
  VerificationRecord rec = check_lex_k1(path_graph(5), complete_graph(1), f.ctx);
  CHECK(rec.verdict == Verdict::pass);
  CHECK(rec.data.at("predicted") == 3);
  CHECK(rec.data.at("exact") == 3);
  CHECK(check_lex_k1(path_graph(3), path_graph(3), f.ctx).verdict ==
        Verdict::refused_precondition);
}

TEST_CASE("total domination comparison refuses dominating-vertex second factors") {
  Fixture f;
  CHECK(check_lex_total_bound(path_graph(4), complete_graph(2), f.ctx).verdict ==
        Verdict::refused_precondition);
  VerificationRecord rec = check_lex_total_bound(path_graph(4), path_graph(4), f.ctx);
  CHECK(rec.verdict == Verdict::pass);
  CHECK(rec.data.at("gamma_t_g") == 2);
  CHECK(rec.data.at("gamma_lex") == 2);
}

TEST_CASE("gamma monotonicity check") {
  Fixture f;
  VerificationRecord rec = check_lex_gamma_monotone(path_graph(4), path_graph(4), f.ctx);
  CHECK(rec.verdict == Verdict::pass);
  CHECK(rec.data.at("gamma_g") == 2);
  CHECK(rec.data.at("gamma_lex") == 2);
}

TEST_CASE("degree floor bound records both degree readings") {
  Fixture f;
  // K1 o K2 = K2: bound 1*2 - (0+1) = 1 is met with equality.
  VerificationRecord tight = check_lex_floor(complete_graph(1), complete_graph(2), f.ctx);
  CHECK(tight.verdict == Verdict::pass);
  CHECK(tight.data.at("exact") == 1);
  CHECK(tight.data.at("bound") == 1);
  CHECK(tight.data.at("delta_sum_matches_product") == true);

  // K2 o K2 = K4: the product's min degree is 3, not 1+1.
  VerificationRecord k4 = check_lex_floor(complete_graph(2), complete_graph(2), f.ctx);
  CHECK(k4.verdict == Verdict::pass);
  CHECK(k4.data.at("exact") == 1);
  CHECK(k4.data.at("bound") == 2);
  CHECK(k4.data.at("delta_g") == 1);
  CHECK(k4.data.at("delta_h") == 1);
  CHECK(k4.data.at("delta_product") == 3);
  CHECK(k4.data.at("delta_sum_matches_product") == false);
}

TEST_CASE("corona checks split the equality from the printed size claim") {
  Fixture f;
  std::vector<VerificationRecord> recs =
      check_corona(complete_graph(3), path_graph(4), f.ctx);
  REQUIRE(recs.size() == 2);

  const VerificationRecord& thm = recs[0];
  CHECK(thm.check_id == "thm6-corona");
  CHECK(thm.verdict == Verdict::pass);
  CHECK(thm.data.at("exact") == 6);

  // The restated size |V(G)| * gamma(G) = 3 disagrees with the exact 6.
  const VerificationRecord& printed = recs[1];
  CHECK(printed.check_id == "cor-corona-size");
  CHECK(printed.verdict == Verdict::discrepancy);
  CHECK(printed.klass == "printed-corollary");
  CHECK(printed.data.at("printed_value") == 3);
  CHECK(printed.data.at("exact") == 6);
  CHECK(printed.data.at("matches") == false);

  // When gamma(G) happens to equal gamma(H) the printed claim survives.
  std::vector<VerificationRecord> same =
      check_corona(path_graph(2), path_graph(3), f.ctx);
  CHECK(same[0].verdict == Verdict::pass);
  CHECK(same[1].verdict == Verdict::pass);
  CHECK(same[1].data.at("matches") == true);

  // Order-one base: equality fails but only against a broken precondition.
  std::vector<VerificationRecord> tiny =
      check_corona(complete_graph(1), path_graph(4), f.ctx);
  CHECK(tiny[0].verdict == Verdict::discrepancy);
  CHECK(tiny[0].klass == "implicit-precondition");
}

TEST_CASE("cartesian checks validate the witness and the bound") {
  Fixture f;
  std::vector<VerificationRecord> recs =
      check_cartesian(complete_graph(3), complete_graph(2), f.ctx);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].check_id == "claim1-validity");
  CHECK(recs[0].verdict == Verdict::pass);
  CHECK(recs[0].data.at("witness_size") == 2);
  CHECK(recs[0].data.at("witness_valid") == true);
  CHECK(recs[1].check_id == "thm-cart-bound");
  CHECK(recs[1].verdict == Verdict::pass);
  CHECK(recs[1].data.at("exact") == 2);
  CHECK(recs[1].data.at("bound") == 2);
  CHECK(recs[1].data.at("tight") == true);

  std::vector<VerificationRecord> loose =
      check_cartesian(path_graph(4), complete_graph(2), f.ctx);
  CHECK(loose[1].verdict == Verdict::pass);
  CHECK(loose[1].data.at("exact") == 3);
  CHECK(loose[1].data.at("bound") == 4);
  CHECK(loose[1].data.at("tight") == false);
}

TEST_CASE("direct product checks scan below the floor and verify the diagonal") {
  Fixture f;
  std::vector<int> cube{2, 2, 2};
  std::vector<VerificationRecord> recs = check_direct(cube, f.ctx);
  REQUIRE(recs.size() == 2);

  CHECK(recs[0].check_id == "cor-direct-lb");
  CHECK(recs[0].verdict == Verdict::pass);
  CHECK(recs[0].data.at("t") == 3);
  CHECK(recs[0].data.at("found_size_at_most_t") == false);
  // 1 + 8 + 28 + 56 subsets of size <= 3 on 8 vertices.
  CHECK(recs[0].data.at("subsets_checked") == 93);
  CHECK(recs[0].data.at("gamma_exact") == 4);  // the matching needs one end each

  // The diagonal construction needs n_i >= t+1, so the cube refuses.
  CHECK(recs[1].check_id == "thm-direct-sharp");
  CHECK(recs[1].verdict == Verdict::refused_precondition);

  std::vector<VerificationRecord> pair_only = check_direct(std::vector<int>{3, 3}, f.ctx);
  CHECK(pair_only[0].verdict == Verdict::refused_precondition);  // t < 3
}

TEST_CASE("product-of-bounds comparison on the cartesian base") {
  Fixture f;
  VerificationRecord rec = check_vizing_equivalent(path_graph(4), path_graph(4),
                                                   complete_graph(1), f.ctx);
  CHECK(rec.verdict == Verdict::pass);
  CHECK(rec.klass.empty());
  CHECK(rec.data.at("lhs") == 4);  // gamma-oc(P4 o K1)^2 = 2 * 2
  CHECK(rec.data.at("rhs").get<int>() >= 4);
  CHECK(rec.data.at("gamma_form_holds") == true);

  // A K1 companion keeps the left side at outer-connected strength
  // (C4 o K1 = C4, C5 o K1 = C5), and 2 * 3 overshoots gamma-oc(C4 box C5) = 5.
  // The gamma form 2 * 2 <= 5 still holds, so this is a hypothesis gap, not a
  // counterexample, and it is classified accordingly.
  VerificationRecord gap = check_vizing_equivalent(cycle_graph(4), cycle_graph(5),
                                                   complete_graph(1), f.ctx);
  CHECK(gap.verdict == Verdict::discrepancy);
  CHECK(gap.klass == "implicit-precondition");
  CHECK(gap.data.at("lhs") == 6);
  CHECK(gap.data.at("rhs") == 5);
  CHECK(gap.data.at("gamma_form_holds") == true);
  CHECK(gap.data.at("witnesses").at("lhs_g") == nlohmann::json({0, 1}));
  CHECK(gap.data.at("witnesses").at("lhs_h") == nlohmann::json({0, 1, 2}));
  CHECK(gap.data.at("witnesses").at("rhs").size() == 5);

  // The same pair with a two-vertex companion collapses both sides to plain
  // domination numbers: 2 * 2 <= gamma(C4 box C5) = 5.
  VerificationRecord sound = check_vizing_equivalent(cycle_graph(4), cycle_graph(5),
                                                     complete_graph(2), f.ctx);
  CHECK(sound.verdict == Verdict::pass);
  CHECK(sound.data.at("lhs") == 4);
  CHECK(sound.data.at("rhs") == 5);

  // Factors with a dominating vertex are outside the statement.
  CHECK(check_vizing_equivalent(complete_graph(2), path_graph(4), complete_graph(1),
                                f.ctx)
            .verdict == Verdict::refused_precondition);
  // The companion factor must have a dominating vertex.
  CHECK(check_vizing_equivalent(path_graph(4), path_graph(4), path_graph(4), f.ctx)
            .verdict == Verdict::refused_precondition);
  CHECK(check_vizing_equivalent(Graph::from_edges(4, {{0, 1}, {2, 3}}), path_graph(4),
                                complete_graph(1), f.ctx)
            .verdict == Verdict::refused_precondition);
}

TEST_CASE("budget exhaustion is a verdict, not a crash") {
  CertCache cache(SolverId::branch_and_bound, std::uint64_t{1});
  CheckContext ctx{cache, 1};
  VerificationRecord rec = check_min_degree_bound(cycle_graph(6), ctx);
  CHECK(rec.verdict == Verdict::budget_exhausted);
  CHECK(rec.data.at("nodes_at_exhaustion").get<std::uint64_t>() >= 1);
}
