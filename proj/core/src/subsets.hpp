#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "champagne/graph.hpp"

namespace champagne::detail {

/// Calls `visit(vertices, r)` for every r-subset of `pool`, vertices in
/// increasing order. Stops early and returns true once `visit` does.
template <class Visit>
bool for_each_subset(VertexMask pool, int r, Visit&& visit) {
  std::array<int, kMaxVertices> items{};
  int m = 0;
  for (VertexMask p = pool; p; p &= p - 1) items[m++] = std::countr_zero(p);
  if (r > m) return false;
  std::array<int, kMaxVertices> chosen{};
  std::array<int, kMaxVertices> idx{};
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < r; ++i) chosen[i] = items[idx[i]];
    if (visit(chosen, r)) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Induced subgraph on `vertices[0..p)` as a local code: bit j(j-1)/2 + i
/// holds adjacency of the i-th and j-th listed vertex (i < j).
inline std::uint32_t local_code(const AdjacencyRows& rows, const std::array<int, kMaxVertices>& vertices,
                                int p) {
  std::uint32_t code = 0;
  int slot = 0;
  for (int j = 1; j < p; ++j) {
    const VertexMask row = rows[vertices[j]];
    for (int i = 0; i < j; ++i, ++slot) {
      code |= static_cast<std::uint32_t>((row >> vertices[i]) & 1U) << slot;
    }
  }
  return code;
}

}  // namespace champagne::detail
