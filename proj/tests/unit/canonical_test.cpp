#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "champagne/canonical.hpp"
#include "champagne/catalog.hpp"
#include "champagne/graph.hpp"
#include "champagne/graph_io.hpp"
#include "oracles.hpp"

using namespace champagne;
using champagne::testing::naive_isomorphic;
using champagne::testing::random_graph;
using champagne::testing::random_permutation;

TEST_CASE("canonical code is invariant under relabeling", "[canonical]") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10'000; ++trial) {
    const int n = static_cast<int>(rng() % 17);
    const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const Graph g = random_graph(n, rng, density);
    const Graph h = permute(g, random_permutation(n, rng));
    REQUIRE(canonical_form(g).code == canonical_form(h).code);
  }
}

TEST_CASE("canonical witness reproduces the code and preserves invariants", "[canonical]") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 2'000; ++trial) {
    const int n = static_cast<int>(rng() % 17);
    const Graph g = random_graph(n, rng, 0.4);
    const CanonicalForm cf = canonical_form(g);
    REQUIRE(is_permutation_of(cf.witness, n));
    const Graph image = permute(g, cf.witness);
    REQUIRE(image.edges() == cf.code);
    REQUIRE(image.degree_sequence() == g.degree_sequence());
    REQUIRE(image.edge_count() == g.edge_count());
    REQUIRE(image.triangle_count() == g.triangle_count());
    REQUIRE(canonical_code(g) == cf.code);
  }
}

TEST_CASE("refined canonical form equals the brute-force minimum", "[canonical]") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3'000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, rng, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    REQUIRE(canonical_form(g).code == canonical_form_brute_force(g).code);
  }
  // Every labeled graph on 5 vertices.
  for (std::uint64_t c = 0; c < (1U << 10); ++c) {
    const Graph g = champagne::testing::graph_from_slot_mask(5, c);
    REQUIRE(canonical_form(g).code == canonical_form_brute_force(g).code);
  }
  CHECK_THROWS_AS(canonical_form_brute_force(Graph(9)), std::invalid_argument);
}

TEST_CASE("brute-force minimum is the lexicographic minimum over relabelings", "[canonical]") {
  // Triangle plus isolated vertex: the least code puts the isolated vertex
  // first, so slots {0,1} {0,2} {1,2} {0,3} {1,3} {2,3} read 001011.
  const Graph g = Graph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}});
  EdgeBits want;
  for (int s : {2, 4, 5}) want.set(s);
  CHECK(canonical_form_brute_force(g).code == want);
  CHECK(canonical_form(g).code == want);
}

TEST_CASE("isomorphism classes", "[canonical]") {
  CHECK(is_isomorphic(Graph::complete(4), Graph::complete(4)));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)));
  CHECK(canonical_form(cycle_graph(5)).code == canonical_form(complement(cycle_graph(5))).code);

  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph star = complete_bipartite(1, 3);
  CHECK(canonical_form(p4).code != canonical_form(star).code);

  // Numbers of isomorphism classes of graphs on n vertices.
  const std::vector<std::size_t> classes{1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    std::set<EdgeBits> codes;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << slot_count(n)); ++c) {
      codes.insert(canonical_code(champagne::testing::graph_from_slot_mask(n, c)));
    }
    CHECK(codes.size() == classes[n]);
  }
}

TEST_CASE("is_isomorphic agrees with the permutation oracle", "[canonical]") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 1'000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int edges = static_cast<int>(rng() % (slot_count(n) + 1));
    // Same edge count makes the negative cases non-trivial.
    auto with_edges = [&](int m) {
      Graph g(n);
      std::vector<int> slots(slot_count(n));
      std::iota(slots.begin(), slots.end(), 0);
      std::shuffle(slots.begin(), slots.end(), rng);
      EdgeBits bits;
      for (int i = 0; i < m; ++i) bits.set(slots[i]);
      return Graph(n, bits);
    };
    const Graph g = with_edges(edges);
    const Graph h = with_edges(edges);
    REQUIRE(is_isomorphic(g, h) == naive_isomorphic(g, h));
  }
}

TEST_CASE("graph6 round trip", "[io]") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(from_graph6("Dhc") == cycle_graph(5));
  CHECK(from_graph6(">>graph6<<C~\n") == Graph::complete(4));

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 2'000; ++trial) {
    const Graph g = random_graph(static_cast<int>(rng() % 17), rng);
    REQUIRE(from_graph6(to_graph6(g)) == g);
    const nlohmann::json j = g;
    REQUIRE(j.get<Graph>() == g);
    REQUIRE(nlohmann::json::parse(j.dump()).get<Graph>() == g);
  }

  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("C"), ParseError);      // truncated
  CHECK_THROWS_AS(from_graph6("C~~"), ParseError);    // too long
  CHECK_THROWS_AS(from_graph6("Bp"), ParseError);     // padding bit set
  CHECK_THROWS_AS(from_graph6("Q"), ParseError);      // 18 vertices
  CHECK_THROWS_AS(from_graph6("C\x7f"), ParseError);  // out of range
}

TEST_CASE("graph JSON", "[io]") {
  const nlohmann::json j = Graph::from_edges(3, {{2, 0}});
  CHECK(j == nlohmann::json::parse(R"({"n": 3, "edges": [[0, 2]]})"));
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"n": 3, "edges": [[0, 3]]})").get<Graph>(), ParseError);
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"n": 3, "edges": [[1, 1]]})").get<Graph>(), ParseError);
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"edges": []})").get<Graph>(), ParseError);
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"n": 20, "edges": []})").get<Graph>(), ParseError);
  CHECK(to_hex(Graph::from_edges(2, {{0, 1}}).edges()) == "80000000000000000000000000000000");
}
