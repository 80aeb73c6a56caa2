#include <doctest.h>

#include "critgraph/critical.hpp"
#include "critgraph/error.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/graph.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace critgraph;

namespace {

std::vector<std::pair<int, int>> as_pairs(const std::vector<VertexCut>& cuts) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : cuts) out.emplace_back(c.vertices.at(0), c.vertices.at(1));
  return out;
}

Graph diamonds_on_pair() {
  return Graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

}  // namespace

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  try {
    Graph(65, std::vector<Edge>{});
    FAIL("expected a scale guard");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ScaleGuard);
  }
  const Graph g(4, {{2, 1}, {0, 3}, {0, 1}});
  REQUIRE(g.size() == 3);
  CHECK(g.edge(0) == Edge(0, 1));
  CHECK(g.edge(1) == Edge(0, 3));
  CHECK(g.edge(2) == Edge(1, 2));
  CHECK(g.edge_id(2, 1) == 2);
  CHECK_FALSE(g.find_edge(2, 3).has_value());
  CHECK_THROWS_AS(g.edge_id(2, 3), Error);
  CHECK(g.degree(0) == 2);
  CHECK(g.min_degree() == 1);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("signed graph parity map") {
  const Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(SignedGraph(c4, {1, 1, 1}), Error);
  CHECK_THROWS_AS(SignedGraph(c4, {1, 1, 1, 2}), Error);
  const SignedGraph lifted = SignedGraph::lift(c4);
  CHECK(lifted.is_plain());
  for (EdgeId e = 0; e < c4.size(); ++e) CHECK(lifted.parity(e) == 1);
  const SignedGraph mixed(c4, {1, 1, 1, 0});
  CHECK_FALSE(mixed.is_plain());
}

TEST_CASE("t value") {
  CHECK(t_value(complete_graph(4)) == 3);
  CHECK(t_value(cycle_graph(5)) == 1);
  const Graph w = wheel(6, 1).graph;
  CHECK(w.size() == 10);
  CHECK(t_value(w) == 5);
  try {
    t_value(Graph(4, {{0, 1}, {2, 3}}));
    FAIL("expected DisconnectedInput");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::DisconnectedInput);
  }
}

TEST_CASE("vertex connectivity") {
  CHECK(connectivity(complete_graph(4)) == 3);
  CHECK(connectivity(cycle_graph(5)) == 2);
  CHECK(connectivity(petersen_graph()) == 3);
  CHECK(connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(connectivity(path_graph(4)) == 1);
  CHECK_THROWS_AS(connectivity(Graph(1, std::vector<Edge>{})), Error);
  CHECK(is_k_connected(petersen_graph(), 3));
  CHECK_FALSE(is_k_connected(petersen_graph(), 4));
}

TEST_CASE("two cuts") {
  CHECK(two_cuts(complete_graph(4)).empty());
  const auto glued = as_pairs(two_cuts(diamonds_on_pair()));
  CHECK(std::find(glued.begin(), glued.end(), std::pair{0, 1}) != glued.end());
  CHECK(glued == oracle::two_cuts(diamonds_on_pair()));
  // P4: exactly the pairs whose removal leaves two nonempty pieces
  const auto p4 = as_pairs(two_cuts(path_graph(4)));
  CHECK(p4 == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {1, 3}});
  CHECK(p4 == oracle::two_cuts(path_graph(4)));
  CHECK_THROWS_AS(two_cuts(cycle_graph(3)), Error);
}

TEST_CASE("signed bipartiteness") {
  const auto c4 = is_bipartite_signed(SignedGraph::lift(cycle_graph(4)));
  REQUIRE(c4.has_value());
  CHECK(c4->a == std::vector<Vertex>{0, 2});
  CHECK(c4->b == std::vector<Vertex>{1, 3});
  CHECK_FALSE(is_bipartite_signed(SignedGraph::lift(cycle_graph(3))).has_value());
  CHECK_FALSE(is_bipartite_signed(SignedGraph(cycle_graph(4), {1, 1, 1, 0})).has_value());
  // all-even parities: everything on one side
  const auto even = is_bipartite_signed(SignedGraph(cycle_graph(3), {0, 0, 0}));
  REQUIRE(even.has_value());
  CHECK(even->b.empty());
  // isolated vertices land in A
  const auto iso = is_bipartite_signed(SignedGraph::lift(Graph(3, {{0, 1}})));
  REQUIRE(iso.has_value());
  CHECK(std::find(iso->a.begin(), iso->a.end(), 2) != iso->a.end());
}

TEST_CASE("subgraph helpers") {
  const Graph k4 = complete_graph(4);
  const Subgraph s = induced_subgraph(k4, bit(1) | bit(2) | bit(3));
  CHECK(s.graph.order() == 3);
  CHECK(s.graph.size() == 3);
  CHECK(s.to_host == std::vector<Vertex>{1, 2, 3});
  CHECK(s.from_host[0] == -1);
  const std::vector<EdgeId> drop{k4.edge_id(0, 1)};
  const Graph minus = remove_edges(k4, drop);
  CHECK(minus.size() == 5);
  CHECK_FALSE(minus.has_edge(0, 1));
  CHECK(add_edge(minus, 0, 1) == k4);
  CHECK(components(Graph(5, {{0, 1}, {3, 4}})).size() == 3);
  CHECK(is_connected(k4, 0));
}

TEST_CASE("graph-core properties over connected graphs up to 7 vertices") {
  CorpusSpec spec;
  spec.max_n = 7;
  spec.family = Family::all_connected;
  int seen = 0;
  for_each_corpus_graph(spec, [&](const Graph& g) {
    ++seen;
    const int t = t_value(g);
    CHECK(t >= 0);
    CHECK((t == 0) == (g.size() == g.order() - 1));
    const SignedGraph sg = SignedGraph::lift(g);
    CHECK(is_bipartite_signed(sg).has_value() == oracle::bipartite(sg));
    CHECK(is_bipartite_signed(sg).has_value() == oracle::colorable(g, 2));
    if (g.order() >= 2) CHECK(connectivity(g) == oracle::connectivity(g));
    if (g.order() >= 4) {
      const auto cuts = two_cuts(g);
      CHECK(as_pairs(cuts) == oracle::two_cuts(g));
      CHECK(cuts.empty() == (connectivity(g) >= 3));
    }
  });
  CHECK(seen == 996);
}

TEST_CASE("signed bipartiteness agrees with the bipartition oracle") {
  // every parity assignment of a few small graphs
  for (const Graph& g : {complete_graph(4), cycle_graph(5), wheel(6, 1).graph, complete_bipartite(2, 3)}) {
    for (std::uint32_t bits = 0; bits < (1u << g.size()); bits += 7) {
      std::vector<std::uint8_t> parity(static_cast<std::size_t>(g.size()));
      for (int i = 0; i < g.size(); ++i) parity[static_cast<std::size_t>(i)] = (bits >> i) & 1;
      const SignedGraph sg(g, parity);
      const auto bp = is_bipartite_signed(sg);
      CHECK(bp.has_value() == oracle::bipartite(sg));
      if (bp) {
        std::vector<int> side(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : bp->b) side[static_cast<std::size_t>(v)] = 1;
        for (EdgeId e = 0; e < g.size(); ++e) {
          const bool across = side[static_cast<std::size_t>(g.edge(e).u)] != side[static_cast<std::size_t>(g.edge(e).v)];
          CHECK(sg.parity(e) == (across ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("4-critical graphs have t at least e/3 and n/2") {
  for (const Graph& g : corpus(CorpusSpec{8, Family::four_critical, 4, {}})) {
    const int t = t_value(g);
    CHECK(3 * t >= g.size());
    CHECK(2 * g.size() >= 3 * g.order());
  }
}
