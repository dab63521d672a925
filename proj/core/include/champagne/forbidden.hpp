#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "champagne/graph.hpp"

namespace champagne {

/// Which color class a pattern is forbidden in. Red is the graph itself,
/// blue its complement.
enum class Scope { both, red, blue };

std::string_view to_string(Scope scope);
/// Accepts "both", "red", "blue". Throws ParseError otherwise.
Scope parse_scope(std::string_view text);

struct FamilyEntry {
  std::string name;
  Graph pattern;
  Scope scope = Scope::both;
  EdgeBits canonical;
};

/// Patterns whose monochromatic induced copies are forbidden.
///
/// Besides the entries, the family keeps, for every pattern order p, the set
/// of all labeled p-vertex graphs that are a forbidden copy: every
/// relabeling of a red-scope pattern and every relabeling of the complement
/// of a blue-scope pattern. A p-subset of a coloring is then forbidden iff
/// its induced local code is in that set.
class ForbiddenFamily {
 public:
  ForbiddenFamily() = default;
  /// Throws std::invalid_argument unless every pattern has 2..8 vertices.
  explicit ForbiddenFamily(std::vector<FamilyEntry> entries);

  /// {K4, K3,2, K6-C5, K6-H6, K7-H7}, all in both colors.
  static ForbiddenFamily standard();
  /// Red K_red and blue K_blue.
  static ForbiddenFamily ramsey(int red_clique, int blue_clique);

  const std::vector<FamilyEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Distinct pattern orders, ascending.
  std::span<const int> orders() const noexcept { return orders_; }
  /// Whether a p-vertex induced coloring with this local code is forbidden.
  bool is_forbidden_code(int p, std::uint32_t local_code) const;
  bool all_scopes_both() const noexcept;

 private:
  struct CodeTable {
    std::vector<std::uint64_t> bitmap;  // orders up to 7
    std::vector<std::uint32_t> sorted;  // order 8
    bool contains(std::uint32_t code) const;
  };

  std::vector<FamilyEntry> entries_;
  std::vector<int> orders_;
  std::vector<CodeTable> tables_;  // indexed by order
};

FamilyEntry make_entry(std::string name, const Graph& pattern, Scope scope);

/// Family file: [{"pattern": <graph JSON or catalog name>, "scope": "both"|"red"|"blue"}, ...].
/// Throws ParseError on malformed input.
ForbiddenFamily family_from_json(const nlohmann::json& j);
ForbiddenFamily load_family(const std::filesystem::path& path);
nlohmann::json family_to_json(const ForbiddenFamily& family);

/// Induced containment by subset enumeration, filtered by the degree
/// multiset of each subset, confirmed by canonical code.
bool contains_induced(const Graph& g, const Graph& pattern);

bool is_forbidden(const Graph& g, const ForbiddenFamily& family);

/// Same answer as is_forbidden when g minus v_new is not forbidden; only
/// subsets containing v_new are examined.
bool is_forbidden_incremental(const Graph& g, const ForbiddenFamily& family, int v_new);

/// One bit per neighborhood N of a new vertex k attached to a k-vertex
/// parent: bit N is set iff that extension has a forbidden subset through
/// the new vertex. Word w holds masks 64w..64w+63.
std::vector<std::uint64_t> forbidden_extensions(int k, const AdjacencyRows& parent,
                                                const ForbiddenFamily& family);

}  // namespace champagne
