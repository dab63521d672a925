#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "champagne/graph.hpp"

namespace champagne {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Named small graphs used by the non-realizability argument.
///
/// Vertex labels follow the usual drawings of these graphs: drawn vertex i is
/// internal vertex i - 1. Names are K1..K8, K3,2, C3..C7, H6, H7, K6-C5,
/// K6-H6, K7-H7, K7-C5, K7-H6 and K8-H7, where "Km-X" is the complement of
/// X inside K_m (X padded with universal vertices).
const std::vector<NamedGraph>& catalog();

std::optional<Graph> find_catalog_graph(std::string_view name);
/// Throws std::invalid_argument for an unknown name.
Graph catalog_graph(std::string_view name);

Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
/// Complement of `base` inside K_m, where base occupies vertices 0..|base|-1.
Graph complete_minus(int m, const Graph& base);

}  // namespace champagne
