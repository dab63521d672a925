#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "champagne/graph.hpp"

namespace champagne {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 encoding. Its bit order coincides with the edge-bitset slot order.
std::string to_graph6(const Graph& g);
/// Throws ParseError on malformed input or n > 16.
Graph from_graph6(std::string_view text);

/// {"n": int, "edges": [[u, v], ...]} with 0-based labels, u < v, sorted.
void to_json(nlohmann::json& j, const Graph& g);
/// Throws ParseError on a malformed object.
void from_json(const nlohmann::json& j, Graph& g);

/// Edge bitset as a hex string of the two words, high word first.
std::string to_hex(const EdgeBits& bits);

}  // namespace champagne
