#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "champagne/forbidden.hpp"
#include "champagne/graph.hpp"

// Reference implementations kept apart from the library's fast paths.
namespace champagne::testing {

Graph random_graph(int n, std::mt19937_64& rng, double density = 0.5);
Permutation random_permutation(int n, std::mt19937_64& rng);

/// Labeled graph whose slot s is bit s of `code`.
Graph graph_from_slot_mask(int n, std::uint64_t code);

/// Isomorphism by trying every bijection on plain adjacency; n <= 8.
bool naive_isomorphic(const Graph& g, const Graph& h);

/// Induced containment by trying every injective placement of the pattern.
bool naive_contains_induced(const Graph& g, const Graph& pattern);

/// is_forbidden rebuilt from the family entries and contains_induced.
bool oracle_is_forbidden(const Graph& g, const ForbiddenFamily& family);

/// Sorted canonical codes of every clean labeled coloring of K_n, for
/// n = 1..n_max (index n - 1), by enumerating all 2^(n(n-1)/2) colorings.
/// Codes come from the brute-force canonizer up to n = 6 and from the
/// refined one at n = 7. Requires n_max <= 7.
std::vector<std::vector<EdgeBits>> oracle_levels(const ForbiddenFamily& family, int n_max);

}  // namespace champagne::testing
