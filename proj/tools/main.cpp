// Command-line surface: exact domination solves, structural predictions,
// product construction, verification runs, corpus generation, and the
// bundled reproduction scenario. Discrepancies found by `verify` and
// `reproduce` are data, not failures; the exit code is nonzero only when the
// run itself could not complete.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ocdom/ocdom.hpp"

namespace {

using namespace ocdom;

SolverId solver_from_flag(const std::string& s) {
  if (s == "baseline") return SolverId::baseline;
  if (s == "bnb" || s == "branch-and-bound") return SolverId::branch_and_bound;
  throw CLI::ValidationError("--solver", "expected baseline or bnb");
}

Graph read_graph_input(const std::string& g6, const std::string& path) {
  if (!g6.empty()) return parse_graph6(g6);
  std::string text;
  if (!path.empty() && path != "-") {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  return parse_graph_text(text);
}

std::vector<int> parse_orders_csv(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw std::runtime_error("empty --orders list");
  return out;
}

// Default output location honors OCDOM_OUT_DIR when set.
std::string default_out(const char* name) {
  if (const char* dir = std::getenv("OCDOM_OUT_DIR"))
    return std::string(dir) + "/" + name;
  return name;
}

void print_report(const RunReport& report, const std::string& format,
                  const std::string& out_path) {
  if (format == "json" || !out_path.empty()) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    for (const nlohmann::json& rec : report.records) std::cout << rec.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph products, exact outer-connected domination, and a "
               "verification harness"};
  app.require_subcommand(1);

  // --- compute ---
  auto* compute = app.add_subcommand("compute", "solve gamma / gamma-t / gamma-oc");
  std::string c_kind = "gamma-oc", c_solver = "bnb", c_g6, c_input;
  std::optional<std::uint64_t> c_budget;
  compute->add_option("--kind", c_kind, "gamma|gamma-t|gamma-oc");
  compute->add_option("--solver", c_solver, "baseline|bnb");
  compute->add_option("--graph6", c_g6, "graph6 token");
  compute->add_option("--input", c_input, "graph file (graph6 or JSON), - for stdin");
  compute->add_option("--budget", c_budget, "node budget");

  // --- predict ---
  auto* predict = app.add_subcommand("predict", "structural value/witness predictions");
  std::string p_theorem = "lex", p_solver = "bnb";
  std::vector<std::string> p_g6;
  std::string p_orders;
  std::optional<std::uint64_t> p_budget;
  predict->add_option("--theorem", p_theorem,
                      "lex|lex-k1|corona|cartesian|direct-diagonal");
  predict->add_option("--graph6", p_g6, "factor graphs (repeat twice)");
  predict->add_option("--orders", p_orders, "complete factor orders, e.g. 4,4,4");
  predict->add_option("--solver", p_solver, "baseline|bnb");
  predict->add_option("--budget", p_budget, "node budget");

  // --- product ---
  auto* product = app.add_subcommand("product", "build a product graph");
  std::string pr_kind = "cartesian", pr_orders, pr_format = "json";
  std::vector<std::string> pr_g6;
  product->add_option("--kind", pr_kind, "cartesian|lex|corona|direct|direct-power");
  product->add_option("--graph6", pr_g6, "factor graphs (repeat twice)");
  product->add_option("--orders", pr_orders, "direct-power orders, e.g. 4,4,4");
  product->add_option("--format", pr_format, "json|graph6|dot");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "run checks on instances or a corpus");
  std::string v_check = "all", v_input, v_random, v_out, v_format = "jsonl";
  std::vector<std::string> v_g6, v_orders;
  int v_max_n = 4, v_jobs = 1, v_cap = 20, v_sample = 32;
  std::uint64_t v_seed = 2025;
  std::optional<std::uint64_t> v_budget;
  std::optional<int> v_min_order, v_max_order;
  std::optional<bool> v_connected, v_gamma_one;
  verify->add_option("--check", v_check, "check id or 'all'");
  verify->add_option("--graph6", v_g6, "inline instance graphs");
  verify->add_option("--input", v_input, "graph6 file corpus");
  verify->add_option("--max-n", v_max_n, "exhaustive connected corpus bound");
  verify->add_option("--random", v_random, "random corpus as n,count,edge_prob");
  verify->add_option("--orders", v_orders, "direct-power orders (repeatable)");
  verify->add_option("--jobs", v_jobs, "worker threads");
  verify->add_option("--seed", v_seed, "sampling seed");
  verify->add_option("--budget", v_budget, "per-solve node budget");
  verify->add_option("--cap", v_cap, "product order cap for sweeps");
  verify->add_option("--sample", v_sample, "pairs sampled above the cap");
  verify->add_option("--min-order", v_min_order, "corpus filter");
  verify->add_option("--max-order", v_max_order, "corpus filter");
  verify->add_flag("--connected,!--no-connected", v_connected,
                   "keep only connected graphs (negate for disconnected)");
  verify->add_flag("--gamma-one,!--no-gamma-one", v_gamma_one,
                   "keep only graphs with a dominating vertex (negatable)");
  verify->add_option("--out", v_out, "JSONL output path");
  verify->add_option("--format", v_format, "jsonl|json");

  // --- corpus ---
  auto* corpus_cmd = app.add_subcommand("corpus", "emit a graph corpus");
  std::string co_input, co_random, co_format = "graph6";
  int co_max_n = 4;
  std::uint64_t co_seed = 1;
  std::optional<int> co_min_order, co_max_order;
  std::optional<bool> co_connected, co_gamma_one;
  corpus_cmd->add_option("--max-n", co_max_n, "exhaustive connected corpus bound");
  corpus_cmd->add_option("--input", co_input, "graph6 file corpus");
  corpus_cmd->add_option("--random", co_random, "random corpus as n,count,edge_prob");
  corpus_cmd->add_option("--seed", co_seed, "random corpus seed");
  corpus_cmd->add_option("--min-order", co_min_order, "filter");
  corpus_cmd->add_option("--max-order", co_max_order, "filter");
  corpus_cmd->add_flag("--connected,!--no-connected", co_connected,
                       "keep only connected graphs (negate for disconnected)");
  corpus_cmd->add_flag("--gamma-one,!--no-gamma-one", co_gamma_one,
                       "keep only graphs with a dominating vertex (negatable)");
  corpus_cmd->add_option("--format", co_format, "graph6|json");

  // --- reproduce ---
  auto* reproduce = app.add_subcommand("reproduce", "run the bundled scenario");
  std::string r_out = default_out("reproduce.jsonl");
  int r_jobs = 1, r_cap = 20;
  std::uint64_t r_seed = 2025;
  std::optional<std::uint64_t> r_budget;
  reproduce->add_option("--out", r_out, "JSONL output path");
  reproduce->add_option("--jobs", r_jobs, "worker threads");
  reproduce->add_option("--seed", r_seed, "sampling seed");
  reproduce->add_option("--budget", r_budget, "per-solve node budget");
  reproduce->add_option("--cap", r_cap, "product order cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      Graph g = read_graph_input(c_g6, c_input);
      DominationCertificate cert = solve(g, domination_kind_from_string(c_kind),
                                         solver_from_flag(c_solver), {c_budget});
      std::cout << cert.to_json().dump(2) << "\n";
      return 0;
    }

    if (*predict) {
      CertCache cache(solver_from_flag(p_solver), p_budget);
      Prediction pred;
      if (p_theorem == "direct-diagonal") {
        pred = direct_diagonal_prediction(parse_orders_csv(p_orders));
      } else {
        if (p_g6.size() != 2)
          throw std::runtime_error("predict needs exactly two --graph6 factors");
        Graph g = parse_graph6(p_g6[0]), h = parse_graph6(p_g6[1]);
        if (p_theorem == "lex") pred = lex_formula_prediction(g, h, cache);
        else if (p_theorem == "lex-k1") pred = lex_k1_prediction(g, h, cache);
        else if (p_theorem == "corona") pred = corona_formula_prediction(g, h, cache);
        else if (p_theorem == "cartesian") pred = cartesian_bound_prediction(g, h, cache);
        else throw std::runtime_error("unknown --theorem: " + p_theorem);
      }
      std::cout << pred.to_json().dump(2) << "\n";
      return 0;
    }

    if (*product) {
      ProductInstance inst;
      if (pr_kind == "direct-power") {
        inst = direct_power_complete(parse_orders_csv(pr_orders));
      } else {
        if (pr_g6.size() != 2)
          throw std::runtime_error("product needs exactly two --graph6 factors");
        inst = build_product(product_kind_from_string(pr_kind),
                             parse_graph6(pr_g6[0]), parse_graph6(pr_g6[1]));
      }
      if (pr_format == "graph6") {
        std::cout << emit_graph6(inst.graph) << "\n";
      } else if (pr_format == "dot") {
        std::cout << graph_to_dot(inst.graph);
      } else {
        nlohmann::json j = {{"graph", graph_to_json(inst.graph)},
                            {"index_map", inst.index_map_json()}};
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }

    if (*corpus_cmd) {
      CorpusSpec spec;
      if (!co_input.empty()) {
        spec.mode = CorpusSpec::Mode::file;
        spec.path = co_input;
      } else if (!co_random.empty()) {
        std::vector<int> parts = parse_orders_csv(co_random);
        spec.mode = CorpusSpec::Mode::random;
        spec.n = parts.at(0);
        spec.count = parts.at(1);
        spec.edge_prob = parts.size() > 2 ? parts[2] / 100.0 : 0.5;
        spec.seed = co_seed;
      } else {
        spec.max_n = co_max_n;
      }
      spec.min_order = co_min_order;
      spec.max_order = co_max_order;
      spec.require_connected = co_connected;
      spec.gamma_is_one = co_gamma_one;
      if (co_format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Graph& g : spec.graphs()) arr.push_back(graph_to_json(g));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const Graph& g : spec.graphs()) std::cout << emit_graph6(g) << "\n";
      }
      return 0;
    }

    if (*verify) {
      SuiteConfig cfg;
      cfg.out_path = v_out;
      cfg.jobs = v_jobs;
      cfg.budget = v_budget;
      cfg.seed = v_seed;
      cfg.product_order_cap = v_cap;
      cfg.sample_above_cap = v_sample;
      std::vector<std::vector<int>> orders;
      for (const std::string& o : v_orders) orders.push_back(parse_orders_csv(o));
      std::vector<std::string> checks = {v_check};

      RunReport report;
      if (!v_g6.empty()) {
        // Inline instances: apply each requested check to the given graphs.
        CertCache cache(SolverId::branch_and_bound, v_budget);
        CheckContext ctx{cache, v_jobs};
        std::vector<Graph> graphs;
        for (const std::string& s : v_g6) graphs.push_back(parse_graph6(s));
        if (checks[0] == "all") checks = all_check_ids();
        std::vector<WorkItem> items;
        std::set<std::string> seen;
        auto add = [&](WorkItem it) {
          if (seen.insert(it.keys.front()).second) items.push_back(std::move(it));
        };
        for (const std::string& check : checks) {
          if (check == "thm1-bound")
            for (const Graph& g : graphs) add(item_min_degree_bound(g, ctx));
          else if (check == "thm5" || check == "lem-k1" || check == "lem1-bound" ||
                   check == "lem-th2" || check == "lem-th4") {
            if (graphs.size() == 2) add(item_pair_check(check, graphs[0], graphs[1], ctx));
          } else if (check == "thm6-corona" || check == "cor-corona-size") {
            if (graphs.size() == 2) add(item_corona(graphs[0], graphs[1], ctx));
          } else if (check == "claim1-validity" || check == "thm-cart-bound") {
            if (graphs.size() == 2) add(item_cartesian(graphs[0], graphs[1], ctx));
          } else if (check == "vizing-equivalent") {
            if (graphs.size() == 3)
              add(item_vizing(graphs[0], graphs[1], graphs[2], ctx));
          } else if (check == "cor-direct-lb" || check == "thm-direct-sharp") {
            for (const std::vector<int>& o : orders) add(item_direct(o, ctx));
          }
        }
        nlohmann::json digest = {{"inline", v_g6}, {"checks", checks}};
        report = run_work_items(items, cfg, digest.dump());
      } else {
        CorpusSpec spec;
        if (!v_input.empty()) {
          spec.mode = CorpusSpec::Mode::file;
          spec.path = v_input;
        } else if (!v_random.empty()) {
          std::vector<int> parts = parse_orders_csv(v_random);
          spec.mode = CorpusSpec::Mode::random;
          spec.n = parts.at(0);
          spec.count = parts.at(1);
          spec.edge_prob = parts.size() > 2 ? parts[2] / 100.0 : 0.5;
          spec.seed = v_seed;
        } else {
          spec.max_n = v_max_n;
        }
        spec.min_order = v_min_order;
        spec.max_order = v_max_order;
        spec.require_connected = v_connected;
        spec.gamma_is_one = v_gamma_one;
        report = run_suite(spec, checks, cfg, orders);
      }
      print_report(report, v_format, v_out);
      return 0;
    }

    if (*reproduce) {
      SuiteConfig cfg;
      cfg.out_path = r_out;
      cfg.jobs = r_jobs;
      cfg.budget = r_budget;
      cfg.seed = r_seed;
      cfg.product_order_cap = r_cap;
      RunReport report = run_reproduction(cfg);
      std::cout << report.to_json().dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
