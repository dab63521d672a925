#include "champagne/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace champagne {

int EdgeBits::count() const noexcept {
  return std::popcount(words_[0]) + std::popcount(words_[1]);
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in [0, 16], got " + std::to_string(n));
  }
  n_ = static_cast<std::uint8_t>(n);
}

Graph::Graph(int n, const EdgeBits& edges) : Graph(n) {
  // Slots at or above n(n-1)/2 occupy the low-order end of the words.
  const int slots = slot_count(n);
  const auto valid = [](int bits) -> std::uint64_t {
    if (bits <= 0) return 0;
    if (bits >= 64) return ~std::uint64_t{0};
    return ~(~std::uint64_t{0} >> bits);
  };
  const auto& w = edges.words();
  if ((w[0] & ~valid(slots)) || (w[1] & ~valid(slots - 64))) {
    throw std::invalid_argument("edge bit set beyond slot range of order");
  }
  edges_ = edges;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_edges_one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

Graph Graph::from_rows(int n, const AdjacencyRows& rows) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    VertexMask lower = rows[v] & static_cast<VertexMask>((1U << v) - 1U);
    while (lower) {
      const int u = std::countr_zero(lower);
      lower &= lower - 1;
      g.edges_.set(pair_slot(u, v));
    }
  }
  return g;
}

Graph Graph::complete(int n) { return complement(Graph(n)); }

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  edges_.set(pair_slot(u, v));
}

void Graph::remove_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  edges_.reset(pair_slot(u, v));
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adjacent(u, v) ? 1 : 0;
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degrees;
  degrees.reserve(n_);
  const auto r = rows();
  for (int v = 0; v < n_; ++v) degrees.push_back(std::popcount(r[v]));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

int Graph::triangle_count() const {
  const auto r = rows();
  int t = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!((r[u] >> v) & 1U)) continue;
      const VertexMask common = r[u] & r[v] & static_cast<VertexMask>(~((2U << v) - 1U));
      t += std::popcount(common);
    }
  }
  return t;
}

AdjacencyRows Graph::rows() const noexcept {
  AdjacencyRows r{};
  for (int v = 1; v < n_; ++v) {
    const int base = v * (v - 1) / 2;
    for (int u = 0; u < v; ++u) {
      if (edges_.test(base + u)) {
        r[u] |= static_cast<VertexMask>(1U << v);
        r[v] |= static_cast<VertexMask>(1U << u);
      }
    }
  }
  return r;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_permutation_of(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::uint32_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) return false;
    seen |= 1U << p;
  }
  return true;
}

Graph complement(const Graph& g) {
  EdgeBits bits = g.edges();
  for (int s = 0; s < slot_count(g.order()); ++s) bits.flip(s);
  return Graph(g.order(), bits);
}

Graph induced_subgraph(const Graph& g, VertexMask subset) {
  subset &= g.all_vertices();
  std::array<int, kMaxVertices> old_label{};
  int k = 0;
  for (VertexMask m = subset; m; m &= m - 1) old_label[k++] = std::countr_zero(m);
  Graph h(k);
  for (int j = 1; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(old_label[i], old_label[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph switching(const Graph& g, int w) {
  if (w < 0 || w >= g.order()) throw std::invalid_argument("switching vertex out of range");
  EdgeBits bits = g.edges();
  for (int v = 0; v < g.order(); ++v) {
    if (v != w) bits.flip(pair_slot(v, w));
  }
  return Graph(g.order(), bits);
}

Graph cone(const Graph& g) {
  if (g.order() >= kMaxVertices) throw std::invalid_argument("cone would exceed 16 vertices");
  const int apex = g.order();
  EdgeBits bits = g.edges();
  for (int v = 0; v < apex; ++v) bits.set(pair_slot(v, apex));
  return Graph(apex + 1, bits);
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (!is_permutation_of(perm, g.order())) {
    throw std::invalid_argument("permute: not a bijection on the vertex set");
  }
  Graph h(g.order());
  for (auto [u, v] : g.edge_list()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (auto [u, v] : a.edge_list()) h.add_edge(u, v);
  for (auto [u, v] : b.edge_list()) h.add_edge(u + a.order(), v + a.order());
  return h;
}

}  // namespace champagne
