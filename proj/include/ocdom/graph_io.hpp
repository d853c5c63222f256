#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ocdom/graph.hpp"
#include "ocdom/graph6.hpp"

namespace ocdom {

// {"n": 4, "edges": [[0,1],[1,2],[2,3]]} with u < v and edges sorted.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw std::invalid_argument("graph json: expected object with \"n\"");
  Graph g(j.at("n").get<int>());
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

inline std::string graph_to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// Accepts a graph6 token or a JSON object; used by the CLI so inputs can be
// given in either format.
inline Graph parse_graph_text(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (text[i] == '{'))
    return graph_from_json(nlohmann::json::parse(text));
  return parse_graph6(text);
}

// One graph6 token per line; blank lines and '#' comment lines are skipped.
inline std::vector<Graph> load_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    out.push_back(parse_graph6(std::string_view(line).substr(a, b - a + 1)));
  }
  return out;
}

inline std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph6_lines(in);
}

}  // namespace ocdom
