#pragma once

#include "champagne/graph.hpp"

namespace champagne {

/// Lexicographically least edge bitset over all relabelings of a graph.
struct CanonicalForm {
  EdgeBits code;
  /// Relabeling achieving the minimum: permute(g, witness).edges() == code.
  Permutation witness;
};

CanonicalForm canonical_form(const Graph& g);

/// Code only; the search hot path skips building the witness.
EdgeBits canonical_code(int n, const AdjacencyRows& rows);
inline EdgeBits canonical_code(const Graph& g) { return canonical_code(g.order(), g.rows()); }

/// Reference implementation: minimum over all n! relabelings.
/// Throws std::invalid_argument for n > 8.
CanonicalForm canonical_form_brute_force(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace champagne
