#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace champagne {

inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxSlots = kMaxVertices * (kMaxVertices - 1) / 2;

using VertexMask = std::uint16_t;
using AdjacencyRows = std::array<VertexMask, kMaxVertices>;

/// Slot of the unordered pair {u, v}, u < v, in the edge bitset.
///
/// Pairs are ordered column by column: {0,1}, {0,2}, {1,2}, {0,3}, ...
/// Vertex v's pairs with all lower vertices form the contiguous block
/// starting at v(v-1)/2, so adding a vertex appends a block. This is also
/// the bit order of graph6.
constexpr int pair_slot(int u, int v) noexcept {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

constexpr int slot_count(int n) noexcept { return n * (n - 1) / 2; }

/// Fixed-width bitset over the 120 pair slots.
///
/// Slot i lives in word i / 64 at bit 63 - (i % 64), so comparing the two
/// words as unsigned integers is the lexicographic order of the slot
/// sequence (slot 0 first, non-edge before edge).
class EdgeBits {
 public:
  constexpr EdgeBits() = default;

  constexpr bool test(int slot) const noexcept {
    return (words_[slot >> 6] >> (63 - (slot & 63))) & 1U;
  }
  constexpr void set(int slot) noexcept {
    words_[slot >> 6] |= std::uint64_t{1} << (63 - (slot & 63));
  }
  constexpr void reset(int slot) noexcept {
    words_[slot >> 6] &= ~(std::uint64_t{1} << (63 - (slot & 63)));
  }
  constexpr void flip(int slot) noexcept {
    words_[slot >> 6] ^= std::uint64_t{1} << (63 - (slot & 63));
  }

  int count() const noexcept;
  constexpr const std::array<std::uint64_t, 2>& words() const noexcept { return words_; }

  friend constexpr auto operator<=>(const EdgeBits&, const EdgeBits&) = default;
  friend constexpr bool operator==(const EdgeBits&, const EdgeBits&) = default;

 private:
  std::array<std::uint64_t, 2> words_{};
};

/// Simple undirected graph on at most 16 labeled vertices.
///
/// Also read as a red/blue coloring of K_n: an edge is red, a non-edge blue.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws std::invalid_argument if n > 16.
  explicit Graph(int n);
  Graph(int n, const EdgeBits& edges);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  /// Edge list with 1-based labels, as vertices are numbered in figures.
  static Graph from_edges_one_based(int n, std::initializer_list<std::pair<int, int>> edges);
  static Graph from_rows(int n, const AdjacencyRows& rows);
  static Graph complete(int n);

  int order() const noexcept { return n_; }
  const EdgeBits& edges() const noexcept { return edges_; }

  bool adjacent(int u, int v) const noexcept { return u != v && edges_.test(pair_slot(u, v)); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int edge_count() const noexcept { return edges_.count(); }
  int degree(int v) const noexcept;
  std::vector<int> degree_sequence() const;  // sorted ascending
  int triangle_count() const;
  VertexMask all_vertices() const noexcept {
    return static_cast<VertexMask>((1U << n_) - 1U);
  }

  AdjacencyRows rows() const noexcept;
  std::vector<std::pair<int, int>> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint8_t n_ = 0;
  EdgeBits edges_;
};

/// Vertex relabeling: `image[v]` is the new label of old vertex v.
using Permutation = std::vector<int>;

bool is_permutation_of(std::span<const int> perm, int n);

Graph complement(const Graph& g);
/// Subgraph induced by `subset`, relabeled in increasing order of old labels.
Graph induced_subgraph(const Graph& g, VertexMask subset);
/// Complements every pair incident to w.
Graph switching(const Graph& g, int w);
/// Adds a vertex n adjacent to all existing vertices.
Graph cone(const Graph& g);
/// Edge {perm[u], perm[v]} present iff {u, v} present in g.
/// Throws std::invalid_argument unless perm is a bijection on {0..n-1}.
Graph permute(const Graph& g, std::span<const int> perm);
/// Disjoint union, second graph's vertices shifted after the first's.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace champagne
