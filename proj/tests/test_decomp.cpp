#include <doctest.h>

#include <algorithm>
#include <random>

#include "critgraph/cycles.hpp"
#include "critgraph/decomp.hpp"
#include "critgraph/error.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace critgraph;

namespace {

Graph random_connected(std::mt19937& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (std::find(edges.begin(), edges.end(), Edge(u, v)) == edges.end() && extra(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

std::set<oracle::EdgeKey> block_keys(const Graph& g, const BlockTree& tree) {
  std::set<oracle::EdgeKey> out;
  for (const Block& b : tree.blocks) {
    if (!b.edges.empty()) out.insert(oracle::edge_key(g, b.edges));
  }
  return out;
}

// Block-tree incidence is a tree: connected with #nodes - 1 edges.
bool incidence_is_tree(const BlockTree& tree) {
  const std::size_t nodes = tree.blocks.size() + tree.cut_vertices.size();
  std::size_t links = 0;
  for (const auto& cuts : tree.block_cuts) links += cuts.size();
  return links + 1 == nodes;
}

}  // namespace

TEST_CASE("block tree examples") {
  const BlockTree k4 = block_tree(complete_graph(4));
  CHECK(k4.blocks.size() == 1);
  CHECK(k4.cut_vertices.empty());
  CHECK(k4.blocks[0].kind() == Block::Kind::two_connected);

  const BlockTree bow = block_tree(testing::bowtie());
  CHECK(bow.blocks.size() == 2);
  CHECK(bow.cut_vertices == std::vector<Vertex>{2});
  CHECK(bow.end_blocks().size() == 2);

  const BlockTree p4 = block_tree(path_graph(4));
  CHECK(p4.blocks.size() == 3);
  CHECK(p4.cut_vertices == std::vector<Vertex>{1, 2});
  for (const Block& b : p4.blocks) CHECK(b.kind() == Block::Kind::edge);

  const BlockTree single = block_tree(Graph(1, std::vector<Edge>{}));
  REQUIRE(single.blocks.size() == 1);
  CHECK(single.blocks[0].kind() == Block::Kind::isolated_vertex);

  CHECK_THROWS_AS(block_tree(Graph(3, {{0, 1}})), Error);
}

TEST_CASE("t additivity examples") {
  const TAdditivity bow = t_additivity_check(testing::bowtie());
  CHECK(bow.t_total == 2);
  CHECK(bow.per_block == std::vector<int>{1, 1});
  CHECK(bow.holds());

  const TAdditivity tree = t_additivity_check(path_graph(5));
  CHECK(tree.t_total == 0);
  CHECK(std::all_of(tree.per_block.begin(), tree.per_block.end(), [](int t) { return t == 0; }));

  // K4 on 0..3 with a triangle glued at vertex 3
  const Graph k4_tri(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  const TAdditivity kt = t_additivity_check(k4_tri);
  CHECK(kt.t_total == 4);
  CHECK(kt.per_block == std::vector<int>{3, 1});
}

TEST_CASE("t additivity and block structure on random connected graphs") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.35)(rng);
    const Graph g = random_connected(rng, n, p);
    const TAdditivity add = t_additivity_check(g);
    REQUIRE(add.holds());
    CHECK(add.t_total == t_value(g));
    const BlockTree tree = block_tree(g);
    CHECK(incidence_is_tree(tree));
    CHECK(tree.cut_vertices == oracle::cut_vertices(g));
    if (n <= 8) CHECK(block_keys(g, tree) == oracle::block_edge_sets(g));
    std::vector<int> hits(static_cast<std::size_t>(g.size()), 0);
    for (const Block& b : tree.blocks) {
      for (EdgeId e : b.edges) ++hits[static_cast<std::size_t>(e)];
      if (b.kind() == Block::Kind::two_connected) CHECK(is_two_connected(induced_subgraph(g, vertices_to_mask(b.vertices)).graph));
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("block path examples") {
  const Graph bow = testing::bowtie();
  const BlockTree tree = block_tree(bow);
  const auto path = block_path(bow, tree, 0, 4);
  REQUIRE(path.size() == 3);
  CHECK(path[0].kind == BlockPathItem::Kind::block);
  CHECK(path[1] == BlockPathItem{BlockPathItem::Kind::cut_vertex, 2});
  CHECK(path[2].kind == BlockPathItem::Kind::block);
  CHECK(path[0].value != path[2].value);

  const auto inside = block_path(complete_graph(4), 0, 3);
  CHECK(inside.size() == 1);

  // chain of three triangles 0-1-2, 2-3-4, 4-5-6
  const Graph chain(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {4, 6}});
  const auto long_path = block_path(chain, 0, 6);
  REQUIRE(long_path.size() == 5);
  CHECK(long_path[1].value == 2);
  CHECK(long_path[3].value == 4);

  // a on the cut vertex: the path starts at a block containing it
  CHECK(block_path(chain, 2, 6).size() == 3);
  CHECK_THROWS_AS(block_path(bow, 1, 1), Error);
}

TEST_CASE("ear decomposition examples") {
  const Graph k4 = complete_graph(4);
  const EarDecomposition dk4 = ear_decomposition(k4);
  CHECK(dk4.ears.size() == 3);
  CHECK(dk4.ears[0].closed);
  CHECK(dk4.ears[0].vertices.size() == 3);
  CHECK_FALSE(validate_ear_decomposition(k4, dk4).has_value());

  const EarDecomposition dc5 = ear_decomposition(cycle_graph(5));
  CHECK(dc5.ears.size() == 1);

  const Wheel w = wheel(6, 1);
  const SignedGraph sw = SignedGraph::lift(w.graph);
  const Cycle rim = make_cycle(sw, std::vector<Vertex>{0, 1, 2, 3, 4});
  const EarDecomposition dw = ear_decomposition(w.graph, rim);
  REQUIRE(dw.ears.size() == 5);
  CHECK(dw.ears[0].edges == rim.edges);
  for (std::size_t i = 1; i < dw.ears.size(); ++i) {
    const auto& vs = dw.ears[i].vertices;
    CHECK(std::find(vs.begin(), vs.end(), 5) != vs.end());
  }
  CHECK_FALSE(validate_ear_decomposition(w.graph, dw).has_value());
}

TEST_CASE("ear decomposition errors") {
  try {
    ear_decomposition(path_graph(4));
    FAIL("expected NotTwoConnected");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotTwoConnected);
  }
  const Graph k4 = complete_graph(4);
  const SignedGraph sk4 = SignedGraph::lift(k4);
  // a 4-cycle of K4 has chords
  try {
    ear_decomposition(k4, make_cycle(sk4, std::vector<Vertex>{0, 1, 2, 3}));
    FAIL("expected BadAnchor");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::BadAnchor);
  }
  // removing the triangle isolates 3 and 4
  const Graph sep(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  const SignedGraph ssep = SignedGraph::lift(sep);
  CHECK(is_two_connected(sep));
  CHECK_THROWS_AS(ear_decomposition(sep, make_cycle(ssep, std::vector<Vertex>{0, 1, 2})), Error);
}

TEST_CASE("ear decompositions of all 2-connected graphs up to 8 vertices") {
  int checked = 0;
  for_each_corpus_graph(CorpusSpec{8, Family::all_connected, 4, {}}, [&](const Graph& g) {
    if (g.order() < 3 || !is_two_connected(g)) return;
    const EarDecomposition dec = ear_decomposition(g);
    const auto problem = validate_ear_decomposition(g, dec);
    CHECK_MESSAGE(!problem, io::to_graph6(g));
    CHECK(static_cast<int>(dec.ears.size()) == t_value(g));
    ++checked;
  });
  CHECK(checked == 1 + 3 + 10 + 56 + 468 + 7123);
}

TEST_CASE("anchored ear decompositions on 3-connected non-bipartite graphs") {
  int checked = 0;
  for_each_corpus_graph(CorpusSpec{7, Family::three_connected_nonbipartite, 4, {}}, [&](const Graph& g) {
    const SignedGraph sg = SignedGraph::lift(g);
    for (const Cycle& anchor : all_nonseparating_induced_odd_cycles(sg, 0)) {
      const EarDecomposition dec = ear_decomposition(g, anchor);
      REQUIRE(dec.ears.size() == static_cast<std::size_t>(t_value(g)));
      CHECK(dec.ears[0].edges == anchor.edges);
      const VertexMask on = anchor.vertex_mask();
      for (std::size_t i = 2; i < dec.ears.size(); ++i) {
        CHECK(((on & bit(dec.ears[i].front())) == 0 || (on & bit(dec.ears[i].back())) == 0));
      }
      CHECK_FALSE(validate_ear_decomposition(g, dec).has_value());
      ++checked;
    }
  });
  CHECK(checked > 100);
}

TEST_CASE("paths inside a block are at least t(B) + 1") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected(rng, std::uniform_int_distribution<int>(3, 8)(rng), 0.3);
    const SignedGraph sg = SignedGraph::lift(g);
    for (const Block& b : block_tree(g).blocks) {
      if (b.kind() == Block::Kind::isolated_vertex) continue;
      const Subgraph sub = induced_subgraph(g, vertices_to_mask(b.vertices));
      const SignedGraph sb = induced_signed(sg, sub);
      for (Vertex x = 0; x < sub.graph.order(); ++x) {
        for (Vertex y = x + 1; y < sub.graph.order(); ++y) {
          const auto brute = oracle::paths(sb, x, y);
          CHECK(static_cast<int>(brute.size()) >= b.t() + 1);
          CHECK(enumerate_paths(sb, x, y).size() == brute.size());
        }
      }
    }
  }
}
