#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "champagne/catalog.hpp"
#include "champagne/forbidden.hpp"
#include "champagne/graph_io.hpp"
#include "champagne/search.hpp"
#include "oracles.hpp"

using namespace champagne;
using champagne::testing::naive_contains_induced;
using champagne::testing::oracle_is_forbidden;
using champagne::testing::random_graph;
using champagne::testing::random_permutation;

namespace {

/// Random graph on n vertices whose subgraph without v_new is clean.
Graph clean_prefix_graph(int n, int v_new, const ForbiddenFamily& family, std::mt19937_64& rng) {
  Graph base;
  do {
    base = random_graph(n - 1, rng, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
  } while (is_forbidden(base, family));
  Graph g = cone(base);
  for (int u = 0; u < n - 1; ++u) {
    if (rng() & 1U) g.remove_edge(u, n - 1);
  }
  // Move the new vertex to position v_new.
  Permutation p(n);
  for (int v = 0; v < n - 1; ++v) p[v] = v < v_new ? v : v + 1;
  p[n - 1] = v_new;
  return permute(g, p);
}

ForbiddenFamily random_scoped_family(std::mt19937_64& rng) {
  std::vector<FamilyEntry> entries;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) {
    const int p = 3 + static_cast<int>(rng() % 4);
    const auto scope = static_cast<Scope>(rng() % 3);
    entries.push_back(make_entry("random", random_graph(p, rng), scope));
  }
  return ForbiddenFamily(std::move(entries));
}

}  // namespace

TEST_CASE("induced containment", "[forbidden]") {
  CHECK(contains_induced(Graph::complete(5), Graph::complete(4)));
  CHECK_FALSE(contains_induced(cycle_graph(7), cycle_graph(5)));
  CHECK_FALSE(naive_contains_induced(cycle_graph(7), cycle_graph(5)));
  CHECK_FALSE(contains_induced(catalog_graph("K6-C5"), catalog_graph("K3,2")));
  CHECK_FALSE(naive_contains_induced(catalog_graph("K6-C5"), catalog_graph("K3,2")));
  CHECK_FALSE(contains_induced(Graph(3), Graph(4)));
  // Induced, not ordinary: K4 contains a 4-cycle but not an induced one.
  CHECK_FALSE(contains_induced(Graph::complete(4), cycle_graph(4)));
  CHECK(contains_induced(cycle_graph(7), Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})));
}

TEST_CASE("induced containment agrees with the placement oracle", "[forbidden]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3'000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int p = 2 + static_cast<int>(rng() % std::min(n - 1, 6));
    const Graph g = random_graph(n, rng, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
    const Graph pattern = random_graph(p, rng);
    REQUIRE(contains_induced(g, pattern) == naive_contains_induced(g, pattern));
  }
}

TEST_CASE("forbidden colorings under the standard family", "[forbidden]") {
  const auto family = ForbiddenFamily::standard();
  CHECK(family.entries().size() == 5);
  CHECK(family.all_scopes_both());
  CHECK(is_forbidden(Graph(4), family));
  CHECK_FALSE(is_forbidden(cycle_graph(5), family));
  CHECK_FALSE(oracle_is_forbidden(cycle_graph(5), family));
  CHECK(is_forbidden(catalog_graph("K7-H7"), family));
  CHECK(is_forbidden(catalog_graph("H7"), family));  // blue K7-H7
  CHECK_FALSE(is_forbidden(Graph(3), family));
  CHECK_FALSE(is_forbidden(Graph(0), family));
}

TEST_CASE("scoped entries", "[forbidden]") {
  const auto r34 = ForbiddenFamily::ramsey(3, 4);
  CHECK(is_forbidden(Graph::complete(3), r34));
  CHECK_FALSE(is_forbidden(Graph(3), r34));
  CHECK(is_forbidden(Graph(4), r34));
  CHECK_FALSE(is_forbidden(cycle_graph(5), r34));
  CHECK_FALSE(r34.all_scopes_both());

  const auto edge = ForbiddenFamily::ramsey(2, 2);
  CHECK(is_forbidden(Graph::complete(2), edge));
  CHECK(is_forbidden(Graph(2), edge));
}

TEST_CASE("table lookup agrees with the containment oracle", "[forbidden]") {
  std::mt19937_64 rng(32);
  const std::vector<ForbiddenFamily> fixed{ForbiddenFamily::standard(), ForbiddenFamily::ramsey(3, 4),
                                           ForbiddenFamily::ramsey(4, 3)};
  for (int trial = 0; trial < 3'000; ++trial) {
    const ForbiddenFamily family = trial % 4 == 3 ? random_scoped_family(rng) : fixed[trial % 3];
    const int n = static_cast<int>(rng() % 11);
    const Graph g = random_graph(n, rng, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    REQUIRE(is_forbidden(g, family) == oracle_is_forbidden(g, family));
  }
}

TEST_CASE("incremental check", "[forbidden]") {
  const auto family = ForbiddenFamily::standard();
  CHECK(is_forbidden_incremental(cone(Graph::complete(3)), family, 3));
  // An isolated vertex next to C5 is blue K6-C5.
  CHECK(is_forbidden_incremental(disjoint_union(cycle_graph(5), Graph(1)), family, 5));
  CHECK(oracle_is_forbidden(disjoint_union(cycle_graph(5), Graph(1)), family));
  const Graph clean = from_graph6("E@LG");
  CHECK_FALSE(oracle_is_forbidden(clean, family));
  CHECK_FALSE(is_forbidden_incremental(clean, family, 5));
  CHECK_THROWS_AS(is_forbidden_incremental(Graph(3), family, 3), std::invalid_argument);
}

TEST_CASE("incremental check equals the full check on clean prefixes", "[forbidden][property]") {
  std::mt19937_64 rng(33);
  const std::vector<ForbiddenFamily> families{ForbiddenFamily::standard(), ForbiddenFamily::ramsey(3, 4)};
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto& family = families[trial % 2];
    const int n = 1 + static_cast<int>(rng() % 8);
    const int v_new = static_cast<int>(rng() % n);
    const Graph g = clean_prefix_graph(n, v_new, family, rng);
    REQUIRE(is_forbidden_incremental(g, family, v_new) == is_forbidden(g, family));
  }
}

TEST_CASE("extension bitmap equals per-child incremental checks", "[forbidden][property]") {
  std::mt19937_64 rng(34);
  const std::vector<ForbiddenFamily> families{ForbiddenFamily::standard(), ForbiddenFamily::ramsey(3, 4)};
  // Clean parents are rare among random graphs on 8 or 9 vertices, so draw
  // them from the search levels and relabel.
  std::vector<std::vector<FeasibleLevel>> levels(2);
  for (int f = 0; f < 2; ++f) {
    levels[f].push_back(FeasibleLevel::initial());
    while (levels[f].back().count() > 0) levels[f].push_back(extend_level(levels[f].back(), families[f]));
  }
  for (int trial = 0; trial < 300; ++trial) {
    const auto& family = families[trial % 2];
    const auto& ladder = levels[trial % 2];
    const int k = static_cast<int>(rng() % ladder.size());
    Graph parent(0);
    if (k > 0 && ladder[k - 1].count() > 0) {
      const auto& level = ladder[k - 1];
      parent = permute(level.graphs[rng() % level.count()], random_permutation(k, rng));
    } else if (k > 0) {
      continue;
    }
    const auto bad = forbidden_extensions(k, parent.rows(), family);
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      Graph child = cone(parent);
      for (int u = 0; u < k; ++u) {
        if (!((mask >> u) & 1U)) child.remove_edge(u, k);
      }
      const bool flagged = (bad[mask / 64] >> (mask % 64)) & 1U;
      REQUIRE(flagged == is_forbidden_incremental(child, family, k));
    }
    if (k < 6) REQUIRE(bad[0] >> (1U << k) == 0);
  }
}

TEST_CASE("color symmetry for both-color families", "[forbidden][property]") {
  std::mt19937_64 rng(35);
  const auto family = ForbiddenFamily::standard();
  for (int trial = 0; trial < 5'000; ++trial) {
    const Graph g = random_graph(static_cast<int>(rng() % 13), rng);
    REQUIRE(is_forbidden(g, family) == is_forbidden(complement(g), family));
  }
}

TEST_CASE("forbidden is monotone under induced subgraphs", "[forbidden][property]") {
  std::mt19937_64 rng(36);
  const std::vector<ForbiddenFamily> families{ForbiddenFamily::standard(), ForbiddenFamily::ramsey(3, 4)};
  for (int trial = 0; trial < 3'000; ++trial) {
    const auto& family = families[trial % 2];
    const Graph g = random_graph(static_cast<int>(rng() % 13), rng);
    const auto subset = static_cast<VertexMask>(rng() & g.all_vertices());
    if (is_forbidden(induced_subgraph(g, subset), family)) REQUIRE(is_forbidden(g, family));
  }
}

TEST_CASE("the standard family is an antichain", "[forbidden]") {
  const auto family = ForbiddenFamily::standard();
  const auto& entries = family.entries();
  for (const auto& a : entries) {
    for (const auto& b : entries) {
      if (&a == &b) continue;
      INFO(a.name << " inside " << b.name);
      CHECK_FALSE(naive_contains_induced(b.pattern, a.pattern));
      CHECK_FALSE(naive_contains_induced(complement(b.pattern), a.pattern));
      CHECK_FALSE(contains_induced(b.pattern, a.pattern));
      CHECK_FALSE(contains_induced(complement(b.pattern), a.pattern));
    }
  }
}

TEST_CASE("family files", "[forbidden]") {
  const auto parsed = family_from_json(nlohmann::json::parse(R"([
    {"pattern": "K3", "scope": "red"},
    {"pattern": {"n": 4, "edges": []}, "scope": "blue", "name": "empty4"},
    {"pattern": "C5"}
  ])"));
  REQUIRE(parsed.entries().size() == 3);
  CHECK(parsed.entries()[0].scope == Scope::red);
  CHECK(parsed.entries()[1].name == "empty4");
  CHECK(parsed.entries()[2].scope == Scope::both);
  CHECK(std::vector<int>(parsed.orders().begin(), parsed.orders().end()) == std::vector<int>{3, 4, 5});

  const auto round_trip = family_from_json(family_to_json(ForbiddenFamily::standard()));
  REQUIRE(round_trip.entries().size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(round_trip.entries()[i].pattern == ForbiddenFamily::standard().entries()[i].pattern);
  }

  CHECK_THROWS_AS(family_from_json(nlohmann::json::object()), ParseError);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"([{"scope": "red"}])")), ParseError);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"([{"pattern": "K3", "scope": "green"}])")),
                  ParseError);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"([{"pattern": "nope"}])")), ParseError);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"([{"pattern": "K1"}])")), ParseError);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"([{"pattern": {"n": 9, "edges": []}}])")),
                  ParseError);
  CHECK_THROWS_AS(load_family("/nonexistent/family.json"), ParseError);
  CHECK_THROWS_AS(ForbiddenFamily({make_entry("big", Graph(9), Scope::both)}), std::invalid_argument);
  CHECK(parse_scope("blue") == Scope::blue);
  CHECK(to_string(Scope::red) == "red");
}
