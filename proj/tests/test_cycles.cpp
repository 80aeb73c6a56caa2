#include <doctest.h>

#include <random>

#include "critgraph/cycles.hpp"
#include "critgraph/error.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace critgraph;
using testing::keys;
using testing::lift;

namespace {

VertexMask mask_of(const oracle::EdgeKey& key) {
  VertexMask m = 0;
  for (auto [u, v] : key) m |= bit(u) | bit(v);
  return m;
}

// Non-separating induced odd cycles by filtering the brute-force cycle list.
std::set<oracle::EdgeKey> brute_nonsep(const SignedGraph& sg, VertexMask avoid) {
  const Graph& g = sg.graph();
  std::set<oracle::EdgeKey> out;
  for (const auto& [key, parity] : oracle::cycles_dfs(sg)) {
    if (parity != 1) continue;
    const VertexMask on = mask_of(key);
    if (on & avoid) continue;
    int inside = 0;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if ((on & bit(g.edge(e).u)) && (on & bit(g.edge(e).v))) ++inside;
    }
    if (inside != static_cast<int>(key.size())) continue;
    std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
    for (Vertex v = 0; v < g.order(); ++v) removed[static_cast<std::size_t>(v)] = (on & bit(v)) != 0;
    if (!oracle::connected_without(g, removed)) continue;
    out.insert(key);
  }
  return out;
}

SignedGraph random_parities(const Graph& g, std::mt19937& rng) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(g.size()));
  for (auto& x : p) x = static_cast<std::uint8_t>(rng() & 1);
  return SignedGraph(g, std::move(p));
}

}  // namespace

TEST_CASE("cycle enumeration examples") {
  const CycleSet k4 = enumerate_cycles(lift(complete_graph(4)));
  CHECK(k4.size() == 7);
  CHECK(k4.odd_count() == 4);
  CHECK(f_count(complete_graph(4)) == 4);
  CHECK(enumerate_cycles(lift(cycle_graph(6))).odd_count() == 0);
  CHECK(f_count(cycle_graph(5)) == 1);
  CHECK(f_count(wheel(6, 1).graph) == 11);
  CHECK(f_count(path_graph(5)) == 0);

  const SignedGraph pet = lift(petersen_graph());
  std::size_t odd = 0;
  for (const auto& [key, parity] : oracle::cycles_dfs(pet)) odd += static_cast<std::size_t>(parity);
  CHECK(f_count(petersen_graph()) == odd);

  // canonical form: start at the smallest vertex, second vertex below the last
  for (const Cycle& c : k4) {
    CHECK(c.vertices.front() == *std::min_element(c.vertices.begin(), c.vertices.end()));
    CHECK(c.vertices[1] < c.vertices.back());
    CHECK(std::is_sorted(c.edges.begin(), c.edges.end()));
  }
  CHECK(std::is_sorted(k4.begin(), k4.end(), cycle_less));
}

TEST_CASE("parity filter and counts agree") {
  const SignedGraph sg(complete_graph(5), {1, 0, 1, 1, 0, 0, 1, 1, 0, 1});
  const CycleSet all = enumerate_cycles(sg);
  const CycleCounts counts = count_cycles(sg);
  CHECK(counts.odd == all.odd_count());
  CHECK(counts.even == all.even_count());
  CHECK(enumerate_cycles(sg, 1).size() == all.odd_count());
  CHECK(enumerate_cycles(sg, 0).size() == all.even_count());
  CHECK(counts.total() == 37);  // K5 has 10 + 15 + 12 cycles
}

TEST_CASE("make_cycle") {
  const SignedGraph k4 = lift(complete_graph(4));
  const Cycle c = make_cycle(k4, std::vector<Vertex>{3, 1, 0});
  CHECK(c.vertices == std::vector<Vertex>{0, 1, 3});
  CHECK(c.parity == 1);
  const Cycle d = make_cycle(k4, std::vector<Vertex>{2, 0, 1, 3});
  CHECK(d.vertices == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(d.parity == 0);
  CHECK_THROWS_AS(make_cycle(lift(cycle_graph(5)), std::vector<Vertex>{0, 1, 3}), Error);
  CHECK_THROWS_AS(make_cycle(k4, std::vector<Vertex>{0, 1}), Error);
  CHECK_THROWS_AS(make_cycle(k4, std::vector<Vertex>{0, 1, 0, 2}), Error);
}

TEST_CASE("path enumeration examples") {
  const PathSet k4 = enumerate_paths(lift(complete_graph(4)), 0, 3);
  REQUIRE(k4.size() == 5);
  std::vector<std::size_t> by_length(4, 0);
  for (const Path& p : k4.paths) {
    ++by_length[p.length()];
    CHECK(p.vertices.front() == 0);
    CHECK(p.vertices.back() == 3);
    CHECK(p.direct == (p.length() == 1));
  }
  CHECK(by_length == std::vector<std::size_t>{0, 1, 2, 2});
  CHECK(k4.count(1, false) == 3);
  CHECK(k4.count(1, true) == 2);
  CHECK(k4.count(0, true) == 2);
  const PathCounts pc = count_paths(lift(complete_graph(4)), 0, 3, ~VertexMask{0} >> 60);
  CHECK(pc.odd == 2);
  CHECK(pc.even == 2);

  const PathSet c5 = enumerate_paths(lift(cycle_graph(5)), 0, 2);
  REQUIRE(c5.size() == 2);
  CHECK(c5.paths[0].parity != c5.paths[1].parity);

  const SignedGraph k33 = lift(complete_bipartite(3, 3));
  const PathSet same_side = enumerate_paths(k33, 0, 1);
  CHECK(same_side.size() == 3 + 6);
  for (const Path& p : same_side.paths) CHECK(p.parity == 0);

  CHECK_THROWS_AS(enumerate_paths(k33, 2, 2), Error);
  CHECK(enumerate_paths(lift(Graph(4, {{0, 1}, {2, 3}})), 0, 3).size() == 0);
}

TEST_CASE("paths restricted to a vertex set") {
  const SignedGraph w = lift(wheel(6, 1).graph);
  const VertexMask rim = bit(0) | bit(1) | bit(2) | bit(3) | bit(4);
  const PathCounts on_rim = count_paths(w, 0, 2, rim);
  CHECK(on_rim.odd + on_rim.even == 2);
  const PathCounts everywhere = count_paths(w, 0, 2, rim | bit(5));
  CHECK(everywhere.odd + everywhere.even == enumerate_paths(w, 0, 2).size());
}

TEST_CASE("cycles through a vertex") {
  const SignedGraph k4 = lift(complete_graph(4));
  const CycleSet tri = cycles_through_vertex(k4, 0, 1);
  CHECK(tri.size() == 3);
  for (const Cycle& c : tri) CHECK(c.length() == 3);
  CHECK(cycles_through_vertex(k4, 0, 0).size() == 3);

  CHECK(cycles_through_vertex(lift(complete_bipartite(1, 4)), 0, 1).empty());

  const SignedGraph w = lift(wheel(6, 1).graph);
  const LocalEdgeColoring uniform(6, 0);
  CHECK(cycles_through_vertex(w, 5, 1, uniform).empty());
  CHECK(cycles_through_vertex(w, 5, 1).size() == 10);
  const LocalEdgeColoring mixed{0, 1, 0, 1, 2, 0};
  std::size_t expected = 0;
  for (const Cycle& c : cycles_through_vertex(w, 5, 1)) {
    const auto at = std::find(c.vertices.begin(), c.vertices.end(), 5) - c.vertices.begin();
    const std::size_t len = c.vertices.size();
    const Vertex a = c.vertices[(static_cast<std::size_t>(at) + 1) % len];
    const Vertex b = c.vertices[(static_cast<std::size_t>(at) + len - 1) % len];
    if (mixed[static_cast<std::size_t>(a)] != mixed[static_cast<std::size_t>(b)]) ++expected;
  }
  CHECK(cycles_through_vertex(w, 5, 1, mixed).size() == expected);
  CHECK(expected > 0);
}

TEST_CASE("cycles through an edge") {
  const SignedGraph c5 = lift(cycle_graph(5));
  CHECK(cycles_through_edge(c5, Edge(0, 1), 1).size() == 1);
  const SignedGraph k4 = lift(complete_graph(4));
  CHECK(cycles_through_edge(k4, Edge(0, 1), 1).size() == 2);
  CHECK(cycles_through_edge(k4, Edge(0, 1), 0).size() == 2);
  CHECK_THROWS_AS(cycles_through_edge(c5, Edge(0, 2), 1), Error);

  const Section8Graph s8 = section8_construction(3);
  const CycleSet through = cycles_through_edge(s8.graph, s8.graph.graph().edge(s8.special_edge), 1);
  CHECK(through.size() == enumerate_cycles(s8.graph, 1).size());
}

TEST_CASE("non-separating induced odd cycles: examples") {
  const SignedGraph k4 = lift(complete_graph(4));
  const Cycle c = nonseparating_induced_odd_cycle(k4);
  CHECK(c.length() == 3);
  CHECK(c.parity == 1);

  const SignedGraph w = lift(wheel(6, 1).graph);
  const Cycle rim = nonseparating_induced_odd_cycle(w, AvoidSpec::avoid_vertex(5));
  CHECK(rim.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});

  const SignedGraph pet = lift(petersen_graph());
  const Cycle five = nonseparating_induced_odd_cycle(pet, AvoidSpec::avoid_vertex(0));
  CHECK(five.length() == 5);
  CHECK((five.vertex_mask() & bit(0)) == 0);
  CHECK(is_induced_cycle(pet.graph(), five));
  CHECK(is_connected(pet.graph(), ~five.vertex_mask() & ((VertexMask{1} << 10) - 1)));

  // avoiding a connected subgraph of the Petersen graph
  const Cycle off = nonseparating_induced_odd_cycle(pet, AvoidSpec::avoid_subgraph({0, 1}));
  CHECK((off.vertex_mask() & (bit(0) | bit(1))) == 0);
}

TEST_CASE("non-separating search hypotheses") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& err) {
      return err.kind();
    }
    return ErrorKind::TooSmall;
  };
  // C5 is not 3-connected
  CHECK(kind_of([] { nonseparating_induced_odd_cycle(lift(cycle_graph(5))); }) == ErrorKind::HypothesisViolated);
  // K33 minus a vertex is bipartite
  CHECK(kind_of([] { nonseparating_induced_odd_cycle(lift(complete_bipartite(3, 3)), AvoidSpec::avoid_vertex(0)); }) ==
        ErrorKind::HypothesisViolated);
  CHECK(kind_of([] {
          nonseparating_induced_odd_cycle(lift(complete_bipartite(3, 3)), AvoidSpec::avoid_vertex(0), false);
        }) == ErrorKind::NotFound);
  CHECK(kind_of([] { nonseparating_induced_odd_cycle(lift(complete_graph(4)), AvoidSpec::avoid_subgraph({0, 2})); }) ==
        ErrorKind::HypothesisViolated);
}

TEST_CASE("non-separating odd cycles agree with brute force on 3-connected graphs") {
  int graphs = 0;
  for_each_corpus_graph(CorpusSpec{7, Family::three_connected, 4, {}}, [&](const Graph& g) {
    const SignedGraph sg = lift(g);
    for (Vertex v = -1; v < g.order(); ++v) {
      const VertexMask avoid = v < 0 ? 0 : bit(v);
      std::set<oracle::EdgeKey> found;
      for (const Cycle& c : all_nonseparating_induced_odd_cycles(sg, avoid)) found.insert(oracle::edge_key(g, c.edges));
      CHECK_MESSAGE(found == brute_nonsep(sg, avoid), io::to_graph6(g));
      if (v >= 0 && !is_bipartite_signed(sg, ~bit(v) & ((VertexMask{1} << g.order()) - 1))) {
        const Cycle c = nonseparating_induced_odd_cycle(sg, AvoidSpec::avoid_vertex(v));
        CHECK(found.count(oracle::edge_key(g, c.edges)) == 1);
      }
    }
    ++graphs;
  });
  CHECK(graphs > 100);
}

TEST_CASE("enumerator agrees with two oracles on connected graphs up to 7 vertices") {
  std::mt19937 rng(99);
  int graphs = 0;
  for_each_corpus_graph(CorpusSpec{7, Family::all_connected, 4, {}}, [&](const Graph& g) {
    for (int round = 0; round < 2; ++round) {
      const SignedGraph sg = round == 0 ? lift(g) : random_parities(g, rng);
      const auto mine = keys(sg, enumerate_cycles(sg));
      CHECK(mine == oracle::cycles_dfs(sg));
      CHECK(mine == oracle::cycles_xor(sg));
      const CycleCounts counts = count_cycles(sg);
      CHECK(counts.total() == mine.size());
      if (g.order() >= 2) {
        const auto brute = oracle::paths(sg, 0, g.order() - 1);
        const PathSet ps = enumerate_paths(sg, 0, g.order() - 1);
        CHECK(ps.size() == brute.size());
        std::size_t odd = 0;
        for (const auto& p : brute) odd += static_cast<std::size_t>(p.second);
        CHECK(ps.count(1, false) == odd);
      }
    }
    ++graphs;
  });
  CHECK(graphs == 996);
}

TEST_CASE("budget limits raise instead of truncating") {
  Budget tiny;
  tiny.max_items = 3;
  try {
    enumerate_cycles(lift(complete_graph(5)), std::nullopt, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK_THROWS_AS(count_cycles(lift(complete_graph(6)), tiny), Error);
  CHECK_THROWS_AS(enumerate_paths(lift(complete_graph(6)), 0, 1, std::nullopt, tiny), Error);
  const Budget late = Budget{}.with_time_limit(std::chrono::milliseconds(0));
  CHECK_THROWS_AS(count_cycles(lift(complete_graph(10)), late), Error);
}
