#include "champagne/catalog.hpp"

#include <stdexcept>

namespace champagne {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_minus(int m, const Graph& base) {
  if (base.order() > m) throw std::invalid_argument("complete_minus: base larger than K_m");
  Graph g = Graph::complete(m);
  for (auto [u, v] : base.edge_list()) g.remove_edge(u, v);
  return g;
}

namespace {

// Pentagon 1..5 with centre 6 joined to 2 and 5.
Graph h6() {
  return Graph::from_edges_one_based(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 6}, {5, 6}});
}

// Triangle 1,2,3 with pendant paths 1-4-7, 2-5-7, 3-6-7.
Graph h7() {
  return Graph::from_edges_one_based(
      7, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 7}});
}

// Edge lists as drawn, hub vertex last.
Graph k6_minus_c5() {
  return Graph::from_edges_one_based(
      6, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}});
}

Graph k6_minus_h6() {
  return Graph::from_edges_one_based(
      6, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 6}, {3, 6}, {4, 6}});
}

Graph k7_minus_h7() {
  return Graph::from_edges_one_based(7, {{1, 5},
                                         {1, 6},
                                         {1, 7},
                                         {2, 4},
                                         {2, 6},
                                         {2, 7},
                                         {3, 4},
                                         {3, 5},
                                         {3, 7},
                                         {4, 5},
                                         {5, 6},
                                         {6, 4}});
}

std::vector<NamedGraph> build_catalog() {
  std::vector<NamedGraph> out;
  for (int m = 1; m <= 8; ++m) out.push_back({"K" + std::to_string(m), Graph::complete(m)});
  out.push_back({"K3,2", complete_bipartite(3, 2)});
  for (int n = 3; n <= 7; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  out.push_back({"H6", h6()});
  out.push_back({"H7", h7()});
  out.push_back({"K6-C5", k6_minus_c5()});
  out.push_back({"K6-H6", k6_minus_h6()});
  out.push_back({"K7-H7", k7_minus_h7()});
  out.push_back({"K7-C5", complete_minus(7, cycle_graph(5))});
  out.push_back({"K7-H6", complete_minus(7, h6())});
  out.push_back({"K8-H7", complete_minus(8, h7())});
  return out;
}

}  // namespace

const std::vector<NamedGraph>& catalog() {
  static const std::vector<NamedGraph> entries = build_catalog();
  return entries;
}

std::optional<Graph> find_catalog_graph(std::string_view name) {
  for (const auto& entry : catalog()) {
    if (entry.name == name) return entry.graph;
  }
  return std::nullopt;
}

Graph catalog_graph(std::string_view name) {
  if (auto g = find_catalog_graph(name)) return *g;
  throw std::invalid_argument("unknown catalog graph: " + std::string(name));
}

}  // namespace champagne
