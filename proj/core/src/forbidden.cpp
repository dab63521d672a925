#include "champagne/forbidden.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "champagne/canonical.hpp"
#include "champagne/catalog.hpp"
#include "champagne/graph_io.hpp"
#include "subsets.hpp"

namespace champagne {
namespace {

constexpr int kMinPatternOrder = 2;
constexpr int kMaxPatternOrder = 8;
constexpr int kMaxBitmapOrder = 7;  // 2^21 bits; order 8 would need 2^28

std::uint32_t local_code_of(const Graph& g) {
  std::uint32_t code = 0;
  for (int s = 0; s < slot_count(g.order()); ++s) {
    if (g.edges().test(s)) code |= std::uint32_t{1} << s;
  }
  return code;
}

// Every labeled copy of g, as local codes.
std::vector<std::uint32_t> labeled_copies(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> codes;
  do {
    codes.push_back(local_code_of(permute(g, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::uint64_t column_word(int vertex, int word) {
  static constexpr std::uint64_t kLow[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  if (vertex < 6) return kLow[vertex];
  return ((word >> (vertex - 6)) & 1) ? ~std::uint64_t{0} : 0;
}

}  // namespace

std::string_view to_string(Scope scope) {
  switch (scope) {
    case Scope::both: return "both";
    case Scope::red: return "red";
    case Scope::blue: return "blue";
  }
  return "both";
}

Scope parse_scope(std::string_view text) {
  if (text == "both") return Scope::both;
  if (text == "red") return Scope::red;
  if (text == "blue") return Scope::blue;
  throw ParseError("unknown scope \"" + std::string(text) + "\" (expected both, red or blue)");
}

bool ForbiddenFamily::CodeTable::contains(std::uint32_t code) const {
  if (!bitmap.empty()) return (bitmap[code >> 6] >> (code & 63)) & 1U;
  return std::binary_search(sorted.begin(), sorted.end(), code);
}

FamilyEntry make_entry(std::string name, const Graph& pattern, Scope scope) {
  return FamilyEntry{std::move(name), pattern, scope, canonical_code(pattern)};
}

ForbiddenFamily::ForbiddenFamily(std::vector<FamilyEntry> entries) : entries_(std::move(entries)) {
  tables_.resize(kMaxPatternOrder + 1);
  for (const auto& e : entries_) {
    const int p = e.pattern.order();
    if (p < kMinPatternOrder || p > kMaxPatternOrder) {
      throw std::invalid_argument("pattern \"" + e.name + "\" has " + std::to_string(p) +
                                  " vertices; patterns need 2..8");
    }
    orders_.push_back(p);

    std::vector<std::uint32_t> codes;
    if (e.scope != Scope::blue) codes = labeled_copies(e.pattern);
    if (e.scope != Scope::red) {
      auto blue = labeled_copies(complement(e.pattern));
      codes.insert(codes.end(), blue.begin(), blue.end());
    }

    auto& table = tables_[p];
    if (p <= kMaxBitmapOrder) {
      const std::size_t bits = std::size_t{1} << slot_count(p);
      table.bitmap.resize(std::max<std::size_t>(1, bits / 64));
      for (auto c : codes) table.bitmap[c >> 6] |= std::uint64_t{1} << (c & 63);
    } else {
      table.sorted.insert(table.sorted.end(), codes.begin(), codes.end());
      std::sort(table.sorted.begin(), table.sorted.end());
      table.sorted.erase(std::unique(table.sorted.begin(), table.sorted.end()), table.sorted.end());
    }
  }
  std::sort(orders_.begin(), orders_.end());
  orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());
}

ForbiddenFamily ForbiddenFamily::standard() {
  std::vector<FamilyEntry> entries;
  for (const char* name : {"K4", "K3,2", "K6-C5", "K6-H6", "K7-H7"}) {
    entries.push_back(make_entry(name, catalog_graph(name), Scope::both));
  }
  return ForbiddenFamily(std::move(entries));
}

ForbiddenFamily ForbiddenFamily::ramsey(int red_clique, int blue_clique) {
  std::vector<FamilyEntry> entries;
  entries.push_back(make_entry("K" + std::to_string(red_clique), Graph::complete(red_clique), Scope::red));
  entries.push_back(
      make_entry("K" + std::to_string(blue_clique), Graph::complete(blue_clique), Scope::blue));
  return ForbiddenFamily(std::move(entries));
}

bool ForbiddenFamily::is_forbidden_code(int p, std::uint32_t local_code) const {
  if (p < kMinPatternOrder || p > kMaxPatternOrder) return false;
  const auto& table = tables_[p];
  if (table.bitmap.empty() && table.sorted.empty()) return false;
  return table.contains(local_code);
}

bool ForbiddenFamily::all_scopes_both() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const FamilyEntry& e) { return e.scope == Scope::both; });
}

ForbiddenFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("family JSON must be an array of entries");
  std::vector<FamilyEntry> entries;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("pattern")) {
      throw ParseError("family entry needs a \"pattern\"");
    }
    Scope scope = Scope::both;
    if (item.contains("scope")) {
      if (!item["scope"].is_string()) throw ParseError("family entry \"scope\" must be a string");
      scope = parse_scope(item["scope"].get<std::string>());
    }
    const auto& pattern = item["pattern"];
    Graph g;
    std::string name;
    if (pattern.is_string()) {
      name = pattern.get<std::string>();
      auto found = find_catalog_graph(name);
      if (!found) throw ParseError("unknown catalog pattern \"" + name + "\"");
      g = *found;
    } else {
      g = pattern.get<Graph>();
      name = item.value("name", to_graph6(g));
    }
    if (g.order() < kMinPatternOrder || g.order() > kMaxPatternOrder) {
      throw ParseError("pattern \"" + name + "\" must have 2..8 vertices");
    }
    entries.push_back(make_entry(std::move(name), g, scope));
  }
  return ForbiddenFamily(std::move(entries));
}

ForbiddenFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("family file " + path.string() + ": " + e.what());
  }
  return family_from_json(j);
}

nlohmann::json family_to_json(const ForbiddenFamily& family) {
  auto out = nlohmann::json::array();
  for (const auto& e : family.entries()) {
    out.push_back({{"name", e.name},
                   {"scope", to_string(e.scope)},
                   {"pattern", e.pattern},
                   {"graph6", to_graph6(e.pattern)}});
  }
  return out;
}

bool contains_induced(const Graph& g, const Graph& pattern) {
  const int p = pattern.order();
  if (p > g.order()) return false;
  if (p == 0) return true;
  const auto want_degrees = pattern.degree_sequence();
  const auto want_code = canonical_code(pattern);
  const auto rows = g.rows();
  return detail::for_each_subset(g.all_vertices(), p, [&](const auto& vs, int r) {
    VertexMask s = 0;
    for (int i = 0; i < r; ++i) s |= static_cast<VertexMask>(1U << vs[i]);
    std::array<int, kMaxVertices> degrees{};
    for (int i = 0; i < r; ++i) degrees[i] = std::popcount(static_cast<unsigned>(rows[vs[i]] & s));
    std::sort(degrees.begin(), degrees.begin() + r);
    if (!std::equal(want_degrees.begin(), want_degrees.end(), degrees.begin())) return false;
    return canonical_code(induced_subgraph(g, s)) == want_code;
  });
}

bool is_forbidden(const Graph& g, const ForbiddenFamily& family) {
  const auto rows = g.rows();
  for (int p : family.orders()) {
    if (p > g.order()) break;
    const bool hit = detail::for_each_subset(g.all_vertices(), p, [&](const auto& vs, int r) {
      return family.is_forbidden_code(r, detail::local_code(rows, vs, r));
    });
    if (hit) return true;
  }
  return false;
}

bool is_forbidden_incremental(const Graph& g, const ForbiddenFamily& family, int v_new) {
  if (v_new < 0 || v_new >= g.order()) throw std::invalid_argument("v_new out of range");
  const auto rows = g.rows();
  const VertexMask others = static_cast<VertexMask>(g.all_vertices() & ~(1U << v_new));
  for (int p : family.orders()) {
    if (p > g.order()) break;
    const bool hit = detail::for_each_subset(others, p - 1, [&](const auto& vs, int r) {
      // Insert v_new at its sorted position so the local code matches
      // induced_subgraph's increasing relabeling.
      std::array<int, kMaxVertices> with{};
      int w = 0;
      bool placed = false;
      for (int i = 0; i < r; ++i) {
        if (!placed && v_new < vs[i]) {
          with[w++] = v_new;
          placed = true;
        }
        with[w++] = vs[i];
      }
      if (!placed) with[w++] = v_new;
      return family.is_forbidden_code(w, detail::local_code(rows, with, w));
    });
    if (hit) return true;
  }
  return false;
}

std::vector<std::uint64_t> forbidden_extensions(int k, const AdjacencyRows& parent,
                                                const ForbiddenFamily& family) {
  if (k < 0 || k >= kMaxVertices) throw std::invalid_argument("forbidden_extensions: bad parent order");
  const std::size_t masks = std::size_t{1} << k;
  const std::size_t words = std::max<std::size_t>(1, masks / 64);
  std::vector<std::uint64_t> bad(words, 0);
  const VertexMask pool = static_cast<VertexMask>((1U << k) - 1U);

  for (int p : family.orders()) {
    const int r = p - 1;
    if (r > k) break;
    const int offset = slot_count(r);  // slots of the new vertex (local index r)
    detail::for_each_subset(pool, r, [&](const auto& vs, int) {
      const std::uint32_t base = detail::local_code(parent, vs, r);
      for (std::uint32_t m = 0; m < (1U << r); ++m) {
        if (!family.is_forbidden_code(p, base | (m << offset))) continue;
        // Mark every neighborhood N that meets the subset exactly in m.
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t acc = ~std::uint64_t{0};
          for (int i = 0; i < r; ++i) {
            const std::uint64_t col = column_word(vs[i], static_cast<int>(w));
            acc &= ((m >> i) & 1U) ? col : ~col;
          }
          bad[w] |= acc;
        }
      }
      return false;
    });
  }
  if (masks < 64) bad[0] &= (std::uint64_t{1} << masks) - 1;
  return bad;
}

}  // namespace champagne
