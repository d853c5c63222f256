// End-to-end acceptance run. Each criterion prints exactly one PASS/FAIL
// line; the exit code is the number of failures. Unlike the unit tests this
// exercises the full pipeline at its production scale: exhaustive corpora,
// the bundled reproduction scenario, and the parallel runner.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ocdom/ocdom.hpp"

using namespace ocdom;

namespace {

namespace fs = std::filesystem;

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << id << ": " << what;
  if (!ok && !note.empty()) std::cout << " [" << note << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<DominationKind> kinds_for(const Graph& g) {
  std::vector<DominationKind> ks = {DominationKind::domination,
                                    DominationKind::outer_connected};
  if (!g.has_isolated_vertex()) ks.push_back(DominationKind::total_domination);
  return ks;
}

// 1. Both engines produce identical values and identical canonical witnesses.
void criterion_solver_agreement() {
  std::string note;
  bool ok = true;
  auto compare = [&](const Graph& g) {
    for (DominationKind kind : kinds_for(g)) {
      DominationCertificate a = solve_baseline(g, kind);
      DominationCertificate b = solve_bnb(g, kind);
      if (a.value != b.value || !(a.witness == b.witness)) {
        ok = false;
        if (note.empty())
          note = "mismatch on " + emit_graph6(g) + " " + std::string(to_string(kind));
      }
    }
  };
  for (const Graph& g : enumerate_labeled_connected(5)) compare(g);
  std::mt19937_64 seeds(20250825);
  const double probs[] = {0.25, 0.4, 0.6};
  for (int i = 0; i < 200; ++i)
    compare(random_connected_graph(6 + i % 3, probs[i % 3], seeds()));
  report(1, "exact engines agree on value and canonical witness", ok, note);
}

// 2. gamma-oc <= n - min degree on every connected graph up to order 6.
void criterion_min_degree_bound(CertCache& cache) {
  long violations = 0, checked = 0;
  for (const Graph& g : enumerate_labeled_connected(6)) {
    int value = cache.value(g, DominationKind::outer_connected);
    if (value > g.order() - g.min_degree()) ++violations;
    ++checked;
  }
  report(2, "minimum-degree bound holds on all " + std::to_string(checked) +
                " connected graphs up to order 6",
         violations == 0, std::to_string(violations) + " violations");
}

// 3. The four-case composition formula is exact on every ordered pair of
//    connected graphs with 2..4 vertices; order-1 factors may only produce
//    mismatches that are classified implicit-precondition.
void criterion_composition_formula(CertCache& cache) {
  CheckContext ctx{cache, 1};
  std::vector<Graph> graphs;
  for (const Graph& g : enumerate_labeled_connected(4))
    if (g.order() >= 2) graphs.push_back(g);

  long bad = 0;
  std::string note;
  for (const Graph& g : graphs)
    for (const Graph& h : graphs) {
      VerificationRecord rec = check_lex_formula(g, h, ctx);
      if (rec.verdict != Verdict::pass) {
        ++bad;
        if (note.empty()) note = rec.key();
      }
    }

  Graph k1 = complete_graph(1);
  for (const Graph& g : enumerate_labeled_connected(4))
    for (VerificationRecord rec :
         {check_lex_formula(g, k1, ctx), check_lex_formula(k1, g, ctx)}) {
      bool tolerated = rec.verdict == Verdict::pass ||
                       (rec.verdict == Verdict::discrepancy &&
                        rec.klass == "implicit-precondition");
      if (!tolerated) {
        ++bad;
        if (note.empty()) note = rec.key();
      }
    }
  report(3, "composition formula exact on 1849 ordered pairs; order-1 cases "
            "only break their own preconditions",
         bad == 0, note);
}

// 4. Collapsing an order-1 factor transports the certificate exactly, for
//    every connected graph up to order 5 on either side.
void criterion_k1_collapse(CertCache& cache) {
  CheckContext ctx{cache, 1};
  Graph k1 = complete_graph(1);
  long bad = 0;
  std::string note;
  for (const Graph& g : enumerate_labeled_connected(5)) {
    for (VerificationRecord rec :
         {check_lex_k1(g, k1, ctx), check_lex_k1(k1, g, ctx)}) {
      if (rec.verdict != Verdict::pass) {
        ++bad;
        if (note.empty()) note = rec.key();
      }
    }
  }
  report(4, "order-1 collapse transports certificates on all 1544 pairs", bad == 0,
         note);
}

// 5. The size-minus-degrees bound holds on every ordered pair of connected
//    graphs with 2..4 vertices and is tight on (K1, K2).
void criterion_degree_floor(CertCache& cache) {
  CheckContext ctx{cache, 1};
  std::vector<Graph> graphs;
  for (const Graph& g : enumerate_labeled_connected(4))
    if (g.order() >= 2) graphs.push_back(g);
  long bad = 0;
  std::string note;
  for (const Graph& g : graphs)
    for (const Graph& h : graphs) {
      VerificationRecord rec = check_lex_floor(g, h, ctx);
      if (rec.verdict != Verdict::pass) {
        ++bad;
        if (note.empty()) note = rec.key();
      }
    }
  VerificationRecord tight =
      check_lex_floor(complete_graph(1), complete_graph(2), ctx);
  bool is_tight = tight.verdict == Verdict::pass && tight.data.at("exact") == 1 &&
                  tight.data.at("bound") == 1;
  if (!is_tight && note.empty()) note = "expected equality at 1 on (K1, K2)";
  report(5, "composition degree bound holds on 1849 pairs and is attained",
         bad == 0 && is_tight, note);
}

// 6. Corona equality with validated witnesses for bases of order 2..4 and
//    satellites up to order 3; the restated corollary size is demonstrably
//    wrong on K3 oc P4 and flagged as such.
void criterion_corona(CertCache& cache) {
  CheckContext ctx{cache, 1};
  std::vector<Graph> satellites;
  for (int n = 1; n <= 3; ++n)
    for (const Graph& h : enumerate_labeled_graphs(n, false)) satellites.push_back(h);

  long bad = 0;
  std::string note;
  for (const Graph& g : enumerate_labeled_connected(4)) {
    if (g.order() < 2) continue;
    for (const Graph& h : satellites) {
      std::vector<VerificationRecord> recs = check_corona(g, h, ctx);
      if (recs.at(0).verdict != Verdict::pass) {
        ++bad;
        if (note.empty()) note = recs.at(0).key();
      }
    }
  }

  std::vector<VerificationRecord> demo =
      check_corona(complete_graph(3), path_graph(4), ctx);
  bool printed_flagged = demo.at(1).verdict == Verdict::discrepancy &&
                         demo.at(1).klass == "printed-corollary" &&
                         demo.at(1).data.at("printed_value") == 3 &&
                         demo.at(1).data.at("exact") == 6;
  if (!printed_flagged && note.empty()) note = "printed corollary not flagged";
  report(6, "corona equality holds with valid witnesses on 473 pairs; the "
            "misprinted corollary size is flagged, never asserted",
         bad == 0 && printed_flagged, note);
}

// 7. Box-product witness validity and upper bound on every ordered pair of
//    connected graphs up to order 4, tight on (K3, K2).
void criterion_cartesian(CertCache& cache) {
  CheckContext ctx{cache, 1};
  std::vector<Graph> graphs = enumerate_labeled_connected(4);
  long bad = 0;
  std::string note;
  for (const Graph& g : graphs)
    for (const Graph& h : graphs)
      for (const VerificationRecord& rec : check_cartesian(g, h, ctx)) {
        if (rec.verdict != Verdict::pass) {
          ++bad;
          if (note.empty()) note = rec.key();
        }
      }
  std::vector<VerificationRecord> tight =
      check_cartesian(complete_graph(3), complete_graph(2), ctx);
  bool is_tight = tight.at(1).data.at("exact") == 2 && tight.at(1).data.at("tight") == true;
  if (!is_tight && note.empty()) note = "expected equality at 2 on (K3, K2)";
  report(7, "box-product witnesses validate and the bound holds on 1936 pairs, "
            "attained at (K3, K2)",
         bad == 0 && is_tight, note);
}

// 8. Direct powers: the exhaustive scan finds nothing of size <= 3 in the
//    (4,4,4) power (43745 subsets), the diagonal witness of size 4 validates,
//    and the (2,2,2) power has domination number 4.
void criterion_direct(CertCache& cache) {
  CheckContext ctx{cache, 2};
  std::vector<int> orders{4, 4, 4};
  std::vector<VerificationRecord> recs = check_direct(orders, ctx);
  bool lb_ok = recs.at(0).verdict == Verdict::pass &&
               recs.at(0).data.at("subsets_checked") == 43745 &&
               recs.at(0).data.at("found_size_at_most_t") == false;
  bool sharp_ok = recs.at(1).verdict == Verdict::pass &&
                  recs.at(1).data.at("witness") == nlohmann::json({0, 21, 42, 63}) &&
                  recs.at(1).data.at("exact_established") == true;
  int cube_gamma =
      cache.value(direct_power_complete(std::vector<int>{2, 2, 2}).graph,
                  DominationKind::domination);
  std::string note;
  if (!lb_ok) note = "size-3 scan";
  else if (!sharp_ok) note = "diagonal witness";
  else if (cube_gamma != 4) note = "cube gamma " + std::to_string(cube_gamma);
  report(8, "direct-power floor is exhaustive (43745 subsets) and the diagonal "
            "attains it; K2^x3 needs 4 dominators",
         lb_ok && sharp_ok && cube_gamma == 4, note);
}

// 9. The product inequality that mirrors the classic box-product conjecture is
//    never violated in conjecture-relevant form on the 27 scheduled triples:
//    the gamma form holds everywhere, every companion with >= 2 vertices
//    passes outright, and the only mismatches are the three K1 hypothesis
//    gaps, classified as such (zero critical records) and carrying witnesses.
void criterion_vizing(CertCache& cache) {
  CheckContext ctx{cache, 1};
  std::vector<Graph> legs = {path_graph(4), cycle_graph(4), cycle_graph(5)};
  std::vector<Graph> companions = {complete_graph(1), complete_graph(2),
                                   complete_graph(3)};
  long passed = 0;
  std::vector<std::string> gaps;
  bool gamma_form_everywhere = true;
  std::string note;
  for (const Graph& g : legs)
    for (const Graph& h : legs)
      for (const Graph& k : companions) {
        VerificationRecord rec = check_vizing_equivalent(g, h, k, ctx);
        if (rec.data.contains("gamma_form_holds") &&
            rec.data.at("gamma_form_holds") == false)
          gamma_form_everywhere = false;
        if (rec.verdict == Verdict::pass) {
          ++passed;
        } else if (rec.verdict == Verdict::discrepancy &&
                   rec.klass == "implicit-precondition" &&
                   rec.data.contains("witnesses")) {
          gaps.push_back(rec.key());
        } else if (note.empty()) {
          note = rec.key() + " -> " + std::string(to_string(rec.verdict)) +
                 (rec.klass.empty() ? "" : " (" + rec.klass + ")");
        }
      }
  std::sort(gaps.begin(), gaps.end());
  const std::vector<std::string> expected_gaps = {
      "vizing-equivalent|Cl,Dhc,@", "vizing-equivalent|Dhc,Cl,@",
      "vizing-equivalent|Dhc,Dhc,@"};
  if (note.empty() && gaps != expected_gaps) note = "unexpected gap set";
  report(9,
         "product inequality has no critical violations on the 27 triples "
         "(24 pass, 3 classified K1 gaps, gamma form everywhere)",
         passed == 24 && gaps == expected_gaps && gamma_form_everywhere, note);
}

// 10. The bundled scenario is deterministic: byte-identical output across
//     runs and job counts, full reuse on resume, and the graph6 codec is
//     bit-exact over the whole corpus it feeds on.
void criterion_reproduce() {
  fs::path dir = fs::temp_directory_path() / "ocdom_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  SuiteConfig one;
  one.out_path = (dir / "r1.jsonl").string();
  one.jobs = 1;
  RunReport first = run_reproduction(one);

  SuiteConfig par;
  par.out_path = (dir / "r2.jsonl").string();
  par.jobs = 4;
  RunReport second = run_reproduction(par);

  bool bytes_equal = slurp(one.out_path) == slurp(par.out_path);

  RunReport resumed = run_reproduction(one);
  bool fully_reused = resumed.reused > 0 && resumed.total_records() == first.total_records() &&
                      slurp(one.out_path) == slurp(par.out_path);

  bool no_critical = true;
  for (const nlohmann::json& rec : first.records)
    if (rec.contains("class") && rec.at("class") == "critical") no_critical = false;

  bool corpus_ok = first.per_check.at("thm1-bound").total() == 27476 &&
                   first.per_check.at("thm1-bound").discrepancy == 0 &&
                   first.per_check.at("vizing-equivalent").pass == 24 &&
                   first.per_check.at("vizing-equivalent").discrepancy == 3 &&
                   first.per_check.at("vizing-equivalent").refused == 0;

  bool codec_ok = true;
  for (int n = 0; n <= 5 && codec_ok; ++n)
    for (const Graph& g : enumerate_labeled_graphs(n, false)) {
      std::string tok = emit_graph6(g);
      if (!(parse_graph6(tok) == g) || emit_graph6(parse_graph6(tok)) != tok) {
        codec_ok = false;
        break;
      }
    }
  for (const Graph& g : enumerate_labeled_connected(6)) {
    if (!codec_ok) break;
    if (!(parse_graph6(emit_graph6(g)) == g)) codec_ok = false;
  }

  std::string note;
  if (!bytes_equal) note = "output differs across job counts";
  else if (!fully_reused) note = "resume recomputed or altered records";
  else if (!no_critical) note = "critical class present";
  else if (!corpus_ok) note = "unexpected per-check counts";
  else if (!codec_ok) note = "graph6 round-trip";
  report(10, "scenario output is byte-stable across runs and job counts, resumes "
             "with full reuse, and the codec round-trips the corpus",
         bytes_equal && fully_reused && no_critical && corpus_ok && codec_ok, note);

  fs::remove_all(dir);
}

}  // namespace

int main() {
  CertCache cache;  // shared so repeated factor solves amortize across criteria

  criterion_solver_agreement();
  criterion_min_degree_bound(cache);
  criterion_composition_formula(cache);
  criterion_k1_collapse(cache);
  criterion_degree_floor(cache);
  criterion_corona(cache);
  criterion_cartesian(cache);
  criterion_direct(cache);
  criterion_vizing(cache);
  criterion_reproduce();

  std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
  return failures;
}
