#include "champagne/graph_io.hpp"

#include <cstdio>

namespace champagne {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  const int slots = slot_count(n);
  std::string out(1, static_cast<char>(n + 63));
  for (int start = 0; start < slots; start += 6) {
    int chunk = 0;
    for (int b = 0; b < 6; ++b) {
      const int s = start + b;
      chunk = (chunk << 1) | ((s < slots && g.edges().test(s)) ? 1 : 0);
    }
    out.push_back(static_cast<char>(chunk + 63));
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty string");
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 0 || n > kMaxVertices) throw ParseError("graph6: order outside [0, 16]");
  const int slots = slot_count(n);
  const std::size_t expected = 1 + static_cast<std::size_t>((slots + 5) / 6);
  if (text.size() != expected) throw ParseError("graph6: wrong length for order " + std::to_string(n));

  EdgeBits bits;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int chunk = static_cast<unsigned char>(text[i]) - 63;
    if (chunk < 0 || chunk > 63) throw ParseError("graph6: character out of range");
    for (int b = 0; b < 6; ++b) {
      const int s = static_cast<int>(i - 1) * 6 + b;
      if (!((chunk >> (5 - b)) & 1)) continue;
      if (s >= slots) throw ParseError("graph6: nonzero padding bits");
      bits.set(s);
    }
  }
  return Graph(n, bits);
}

void to_json(nlohmann::json& j, const Graph& g) {
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
  j = nlohmann::json{{"n", g.order()}, {"edges", std::move(edges)}};
}

void from_json(const nlohmann::json& j, Graph& g) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph JSON needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) throw ParseError("graph JSON: \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxVertices) throw ParseError("graph JSON: n outside [0, 16]");
  if (!j["edges"].is_array()) throw ParseError("graph JSON: \"edges\" must be an array");
  Graph out(n);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("graph JSON: each edge must be [u, v]");
    }
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("graph JSON: bad edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    }
    out.add_edge(u, v);
  }
  g = out;
}

std::string to_hex(const EdgeBits& bits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx",
                static_cast<unsigned long long>(bits.words()[0]),
                static_cast<unsigned long long>(bits.words()[1]));
  return buf;
}

}  // namespace champagne
