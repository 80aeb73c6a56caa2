// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "critgraph/critical.hpp"
#include "critgraph/error.hpp"
#include "critgraph/cycles.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/structure3.hpp"
#include "critgraph/verify.hpp"
#include "oracles.hpp"

using namespace critgraph;

namespace {

// Wall-clock limits, in milliseconds.
constexpr double kInstantMs = 1000.0;
constexpr double kSecondsMs = 60'000.0;
constexpr double kMinutesMs = 900'000.0;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

SweepSummary run_sweep(int max_n, Family family, std::vector<std::string> checks) {
  SweepOptions o;
  o.corpus = CorpusSpec{max_n, family, 4, {}};
  o.checks = std::move(checks);
  o.jobs = jobs();
  return sweep(o);
}

std::string describe(const SweepSummary& s) {
  return std::to_string(s.graphs) + " graphs, pass " + std::to_string(s.totals.pass) + ", fail " +
         std::to_string(s.totals.fail) + ", skipped " + std::to_string(s.totals.skipped) + ", error " +
         std::to_string(s.totals.error);
}

Outcome k4_equality() {
  const CheckReport r = run_check("thm1.5", complete_graph(4));
  const std::uint64_t f = f_count(complete_graph(4));
  const int t = t_value(complete_graph(4));
  return {r.passed() && r.equality && f == 4 && 2 * t - 2 == 4 && r.measured == 4,
          "f=" + std::to_string(f) + ", 2t-2=" + std::to_string(2 * t - 2) + ", equality=" + (r.equality ? "yes" : "no")};
}

Outcome odd_wheels() {
  const std::vector<std::uint64_t> expected{4, 11, 22};
  bool ok = true;
  std::string detail;
  std::size_t i = 0;
  for (int n : {4, 6, 8}) {
    const Graph g = wheel(n, 1).graph;
    const bool critical = certify_k_critical(g, 4).has_value();
    const std::uint64_t f = f_count(g);
    ok = ok && critical && f == expected[i] && f == static_cast<std::uint64_t>((n - 1) * (n - 2) / 2 + 1);
    detail += "W(" + std::to_string(n) + ",1): f=" + std::to_string(f) + (critical ? " critical; " : " NOT critical; ");
    ++i;
  }
  return {ok, detail};
}

Outcome clean_sweep(int max_n, Family family, std::vector<std::string> checks, std::uint64_t min_pass) {
  const SweepSummary s = run_sweep(max_n, family, std::move(checks));
  return {s.totals.fail == 0 && s.totals.error == 0 && s.totals.pass >= min_pass, describe(s)};
}

Outcome anchored_fixtures() {
  std::vector<AnchoredInstance> two_connected;
  const SignedGraph pet = SignedGraph::lift(petersen_graph());
  two_connected.push_back(build_anchored(pet, make_cycle(pet, std::vector<Vertex>{0, 1, 2, 3, 4})));
  const std::vector<Graph> hs{cycle_graph(3), cycle_graph(4), cycle_graph(5), complete_graph(4),
                              complete_graph(5), wheel(5, 1).graph, complete_bipartite(2, 3), petersen_graph()};
  for (int len : {3, 5, 7, 9}) {
    for (const Graph& h : hs) {
      for (int per : {2, 3}) {
        try {
          const AnchoredFixture fx = two_connected_fixture(len, h, per, "two-connected");
          AnchoredInstance inst = build_anchored(fx.host, fx.anchor);
          if (h_is_two_connected(inst)) two_connected.push_back(std::move(inst));
        } catch (const Error&) {
          // parameters that do not give a 3-connected host
        }
      }
    }
  }

  using G = Gadget;
  const std::vector<std::vector<G>> shapes{{G::triangle, G::triangle}, {G::edge, G::edge},     {G::k4, G::c4},
                                           {G::triangle, G::k4, G::c4}, {G::edge, G::triangle}, {G::c4, G::c4, G::c4},
                                           {G::k4, G::k4},              {G::triangle, G::edge, G::k4}};
  std::vector<AnchoredInstance> multi_end;
  for (int len : {5, 7}) {
    for (const auto& shape : shapes) {
      for (bool chain : {false, true}) {
        try {
          const AnchoredFixture fx =
              chain ? chain_fixture(len, shape, 2, "chain") : end_block_fixture(len, shape, 2, "end-blocks");
          AnchoredInstance inst = build_anchored(fx.host, fx.anchor);
          if (end_block_count(inst) >= 2) multi_end.push_back(std::move(inst));
        } catch (const Error&) {
        }
      }
    }
  }

  bool ok = two_connected.size() >= 20 && multi_end.size() >= 10;
  std::size_t good31 = 0;
  std::size_t good33 = 0;
  for (const AnchoredInstance& inst : two_connected) {
    if (basic_cycles(inst).basic.size() >= lemma_3_1_bound(inst)) ++good31;
  }
  for (const AnchoredInstance& inst : multi_end) {
    if (static_cast<std::int64_t>(basic_cycles(inst).basic.size()) >= lemma_3_3_bound(inst)) ++good33;
  }
  ok = ok && good31 == two_connected.size() && good33 == multi_end.size();
  return {ok, "lemma 3.1: " + std::to_string(good31) + "/" + std::to_string(two_connected.size()) +
                  " fixtures; lemma 3.3: " + std::to_string(good33) + "/" + std::to_string(multi_end.size()) +
                  " fixtures"};
}

Outcome apex_construction() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 5; ++n) {
    const Section8Graph s = section8_construction(n);
    const CycleSet odd = enumerate_cycles(s.graph, 1);
    const int t = t_value(s.graph.graph());
    const bool through = std::all_of(odd.begin(), odd.end(), [&](const Cycle& c) { return c.contains_edge(s.special_edge); });
    const bool report = run_check("construction8", s.graph).passed();
    ok = ok && through && report && odd.size() <= static_cast<std::size_t>(2 * t);
    detail += "n=" + std::to_string(n) + ": " + std::to_string(odd.size()) + "<=" + std::to_string(2 * t) + "; ";
  }
  return {ok, detail};
}

Outcome oracle_equivalence() {
  std::size_t graphs = 0;
  std::size_t agree = 0;
  std::size_t cycles = 0;
  for_each_corpus_graph(CorpusSpec{7, Family::all_connected, 4, {}}, [&](const Graph& g) {
    const SignedGraph sg = SignedGraph::lift(g);
    std::set<oracle::CycleKey> mine;
    for (const Cycle& c : enumerate_cycles(sg)) mine.emplace(oracle::edge_key(g, c.edges), c.parity);
    const auto dfs = oracle::cycles_dfs(sg);
    const auto xr = oracle::cycles_xor(sg);
    ++graphs;
    cycles += mine.size();
    if (mine == dfs && dfs == xr) ++agree;
  });
  return {graphs == 996 && agree == graphs,
          std::to_string(agree) + "/" + std::to_string(graphs) + " graphs agree, " + std::to_string(cycles) + " cycles"};
}

Outcome two_cut_certification() {
  const SweepSummary s = run_sweep(8, Family::four_critical, {"lemma2.1"});
  double worst = 0.0;
  std::size_t with_cut = 0;
  for (const CheckReport& r : s.reports) {
    worst = std::max(worst, r.elapsed_ms);
    if (r.status == CheckStatus::pass) ++with_cut;
  }
  // every graph with a 2-cut must pass; graphs without one are skipped
  std::size_t expected = 0;
  for (const Graph& g : corpus(CorpusSpec{8, Family::four_critical, 4, {}})) expected += two_cuts(g).empty() ? 0 : 1;
  const bool ok = s.totals.fail == 0 && s.totals.error == 0 && with_cut == expected && expected >= 1 &&
                  worst <= kSecondsMs;
  return {ok, describe(s) + "; graphs with a 2-cut: " + std::to_string(expected)};
}

struct Criterion {
  int id;
  std::string name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "f(K4) = 2t(K4) - 2 = 4 with equality", kInstantMs, k4_equality},
      {2, "odd wheels W(4,1), W(6,1), W(8,1)", kInstantMs, odd_wheels},
      {3, "4-critical n<=8: thm1.5, thm1.3, ky, thm1.2", kMinutesMs,
       [] { return clean_sweep(8, Family::four_critical, {"thm1.5", "thm1.3", "ky", "thm1.2"}, 36); }},
      {4, "3-connected non-bipartite n<=8: lemma4.1, thm1.4, even cycles", kMinutesMs,
       [] { return clean_sweep(8, Family::three_connected_nonbipartite, {"lemma4.1", "thm1.4", "even_cycles"}, 7611); }},
      {5, "3-connected n<=8: lemma5.2", kMinutesMs,
       [] { return clean_sweep(8, Family::three_connected, {"lemma5.2"}, 2537); }},
      {6, "anchored fixtures: lemma 3.1 and lemma 3.3", kSecondsMs, anchored_fixtures},
      {7, "apex over C_2n for n = 2..5", kSecondsMs, apex_construction},
      {8, "cycle enumerators agree on connected n<=7", kMinutesMs, oracle_equivalence},
      {9, "lemma 2.1 on 4-critical n<=8 with a 2-cut", kMinutesMs, two_cut_certification},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& err) {
      out = {false, std::string("exception: ") + err.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = out.ok && ms <= c.limit_ms;
    if (!ok) ++failures;
    std::printf("%s  [%d] %s (%.0f ms, limit %.0f ms): %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), ms,
                c.limit_ms, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
