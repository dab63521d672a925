#include "champagne/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace champagne {
namespace {

// Builds the least code position by position. Position k is filled by an
// unplaced vertex whose adjacency to positions 0..k-1 (read as a row with
// position 0 in the top bit) is smallest, because that row is exactly the
// next block of slots in the code. Only ties branch. Two tied vertices that
// are twins (equal neighborhoods apart from each other) give isomorphic
// subtrees, so only the first is explored.
class Canonizer {
 public:
  Canonizer(int n, const AdjacencyRows& rows) : n_(n), adj_(rows) {
    best_row_.fill(0xFFFF);  // above any real row value
  }

  void run() {
    if (n_ == 0) return;
    key_[0].fill(0);
    search(0, /*strictly_less=*/true, static_cast<VertexMask>((1U << n_) - 1U));
  }

  EdgeBits code() const {
    EdgeBits bits;
    for (int k = 1; k < n_; ++k) {
      for (int i = 0; i < k; ++i) {
        if ((best_row_[k] >> (15 - i)) & 1U) bits.set(pair_slot(i, k));
      }
    }
    return bits;
  }

  Permutation witness() const {
    Permutation image(n_);
    for (int k = 0; k < n_; ++k) image[best_perm_[k]] = k;
    return image;
  }

 private:
  void search(int k, bool strictly_less, VertexMask unplaced) {
    if (k == n_) {
      if (strictly_less) {
        best_row_ = row_;
        best_perm_ = perm_;
        ++generation_;
      }
      return;
    }

    const auto& key = key_[k];
    std::uint16_t least = 0xFFFF;
    for (VertexMask m = unplaced; m; m &= m - 1) {
      least = std::min(least, key[std::countr_zero(m)]);
    }

    bool child_less = strictly_less;
    if (!strictly_less) {
      if (least > best_row_[k]) return;
      child_less = least < best_row_[k];
    }

    VertexMask tried = 0;
    for (VertexMask m = unplaced; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (key[v] != least) continue;
      if (has_twin_in(v, tried)) continue;
      tried |= static_cast<VertexMask>(1U << v);

      perm_[k] = static_cast<std::uint8_t>(v);
      row_[k] = least;
      if (k + 1 < n_) {
        auto& next = key_[k + 1];
        const std::uint16_t bit = static_cast<std::uint16_t>(1U << (15 - k));
        for (VertexMask r = unplaced; r; r &= r - 1) {
          const int u = std::countr_zero(r);
          next[u] = static_cast<std::uint16_t>(key[u] | (((adj_[v] >> u) & 1U) ? bit : 0));
        }
      }

      const auto before = generation_;
      search(k + 1, child_less, static_cast<VertexMask>(unplaced & ~(1U << v)));
      if (generation_ != before) {
        // The new best runs through this node, so every prefix on the
        // current path now equals it.
        strictly_less = false;
        child_less = false;
      }
    }
  }

  bool has_twin_in(int v, VertexMask tried) const {
    for (VertexMask m = tried; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      const VertexMask others = static_cast<VertexMask>(~((1U << u) | (1U << v)));
      if (((adj_[u] ^ adj_[v]) & others) == 0) return true;
    }
    return false;
  }

  int n_;
  AdjacencyRows adj_;
  std::array<std::array<std::uint16_t, kMaxVertices>, kMaxVertices> key_{};
  std::array<std::uint16_t, kMaxVertices> row_{};
  std::array<std::uint16_t, kMaxVertices> best_row_{};
  std::array<std::uint8_t, kMaxVertices> perm_{};
  std::array<std::uint8_t, kMaxVertices> best_perm_{};
  unsigned long generation_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Canonizer c(g.order(), g.rows());
  c.run();
  return {c.code(), c.witness()};
}

EdgeBits canonical_code(int n, const AdjacencyRows& rows) {
  Canonizer c(n, rows);
  c.run();
  return c.code();
}

CanonicalForm canonical_form_brute_force(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("brute-force canonical form is limited to n <= 8");
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{permute(g, perm).edges(), perm};
  while (std::next_permutation(perm.begin(), perm.end())) {
    EdgeBits code = permute(g, perm).edges();
    if (code < best.code) best = {code, perm};
  }
  return best;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_code(g) == canonical_code(h);
}

}  // namespace champagne
