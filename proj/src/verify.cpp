#include "critgraph/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <thread>

#include "critgraph/critical.hpp"
#include "critgraph/cycles.hpp"
#include "critgraph/decomp.hpp"
#include "critgraph/error.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/structure3.hpp"

namespace critgraph {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::error: return "error";
  }
  return "unknown";
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::at_least: return ">=";
    case Relation::at_most: return "<=";
    case Relation::equal: return "==";
  }
  return "?";
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorKind::BadParameters, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

nlohmann::json to_json(const CheckReport& r, bool include_timing) {
  nlohmann::json j;
  j["graph"] = r.graph_id;
  j["hash"] = r.hash;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["bound"] = r.bound.str();
  j["relation"] = to_string(r.relation);
  j["measured"] = r.measured;
  j["equality"] = r.equality;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  j["witness"] = r.witness;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "thm1.2",   "thm1.3",   "thm1.4",   "thm1.5",   "ky",       "lemma2.1", "lemma2.4",     "prop2.5",
      "lemma3.1", "lemma3.2", "lemma3.3", "lemma4.1", "lemma5.1", "lemma5.2", "even_cycles", "construction8",
  };
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string graph_id(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  if (sg.is_plain()) return canonical_graph6(g);
  const CanonicalForm cf = canonical_form(g);
  std::vector<Vertex> inverse(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) inverse[static_cast<std::size_t>(cf.label[static_cast<std::size_t>(v)])] = v;
  std::string bits;
  for (const Edge& e : cf.graph.edges()) {
    bits.push_back(sg.parity(inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]) ? '1' : '0');
  }
  return cf.graph6 + ":" + bits;
}

namespace {

using Int = __int128;

constexpr std::int64_t clamp64(Int v) {
  constexpr Int hi = std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(v > hi ? hi : v);
}

Int binomial(std::uint64_t n, int r) {
  if (r < 0 || static_cast<std::uint64_t>(r) > n) return 0;
  Int out = 1;
  for (int i = 1; i <= r; ++i) {
    out = out * static_cast<Int>(n - static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(i)) / i;
    if (out > (Int{1} << 100)) return out;
  }
  return out;
}

// Sets status and equality from measured, bound and relation.
void judge(CheckReport& r) {
  const Int lhs = static_cast<Int>(r.measured) * r.bound.den;
  const Int rhs = r.bound.num;
  r.equality = lhs == rhs;
  bool ok = false;
  switch (r.relation) {
    case Relation::at_least: ok = lhs >= rhs; break;
    case Relation::at_most: ok = lhs <= rhs; break;
    case Relation::equal: ok = lhs == rhs; break;
  }
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
}

struct Skip {
  std::string reason;
};

struct Context {
  const SignedGraph& sg;
  const Graph& g;
  const Budget& budget;
};

void require(bool cond, const char* reason) {
  if (!cond) throw Skip{reason};
}

void require_plain(const Context& c) { require(c.sg.is_plain(), "check applies to plain graphs"); }

bool four_critical(const Graph& g) { return g.order() >= 4 && g.min_degree() >= 3 && is_k_critical(g, 4); }

bool three_connected(const Graph& g) { return g.order() >= 4 && is_k_connected(g, 3); }

// k if g is k-critical with k >= 4, else 0.
int criticality(const Graph& g) {
  if (g.order() < 4 || !is_connected(g)) return 0;
  const int k = chromatic_number(g);
  return k >= 4 && is_k_critical(g, k) ? k : 0;
}

void check_thm1_2(const Context& c, CheckReport& r) {
  require_plain(c);
  const int k = criticality(c.g);
  require(k != 0, "not k-critical for any k >= 4");
  const CriticalFamily family = gallai_family(c.g, k);
  std::uint64_t f = 0;
  bool exact = true;
  try {
    f = k == 4 ? f_count(c.g, c.budget) : f_s_count(c.g, k - 1, c.budget);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BudgetExceeded) throw;
    f = family.size();
    exact = false;
  }
  r.measured = clamp64(binomial(f, k - 2));
  r.bound = Rational(c.g.size());
  r.relation = Relation::at_least;
  judge(r);
  const bool family_bound = binomial(family.size(), k - 2) >= c.g.size();
  r.witness = {{"k", k},
               {"f_k_minus_1", f},
               {"exact_count", exact},
               {"family_size", family.size()},
               {"family_bound_holds", family_bound},
               {"separation_holds", family.separation_holds},
               {"lists_distinct", family.lists_distinct}};
  if (!family.separation_holds || !family.lists_distinct) {
    r.status = CheckStatus::fail;
    r.message = "critical subgraph family does not separate the edges";
  }
}

void odd_square_bound(const Context& c, CheckReport& r) {
  const std::int64_t t = t_value(c.g);
  r.measured = static_cast<std::int64_t>(f_count(c.g, c.budget));
  r.bound = Rational(t * t, 50);
  r.relation = Relation::at_least;
  r.witness = {{"t", t}, {"f", r.measured}};
  judge(r);
}

void check_thm1_3(const Context& c, CheckReport& r) {
  require_plain(c);
  require(four_critical(c.g), "not 4-critical");
  odd_square_bound(c, r);
}

void check_thm1_4(const Context& c, CheckReport& r) {
  require_plain(c);
  require(three_connected(c.g), "not 3-connected");
  require(!is_bipartite_signed(c.sg), "bipartite");
  odd_square_bound(c, r);
}

void linear_odd_bound(const Context& c, CheckReport& r) {
  const std::int64_t t = t_value(c.g);
  r.measured = static_cast<std::int64_t>(f_count(c.g, c.budget));
  r.bound = Rational(2 * t - 2);
  r.relation = Relation::at_least;
  r.witness = {{"t", t}, {"f", r.measured}};
  judge(r);
}

void check_thm1_5(const Context& c, CheckReport& r) {
  require_plain(c);
  require(four_critical(c.g), "not 4-critical");
  linear_odd_bound(c, r);
}

void check_lemma4_1(const Context& c, CheckReport& r) {
  require_plain(c);
  require(three_connected(c.g), "not 3-connected");
  require(!is_bipartite_signed(c.sg), "bipartite");
  linear_odd_bound(c, r);
}

void check_ky(const Context& c, CheckReport& r) {
  require_plain(c);
  require(four_critical(c.g), "not 4-critical");
  r.measured = c.g.size();
  r.bound = Rational(5 * static_cast<std::int64_t>(c.g.order()) - 2, 3);
  r.relation = Relation::at_least;
  r.witness = {{"n", c.g.order()}, {"e", c.g.size()}};
  judge(r);
}

void check_lemma2_1(const Context& c, CheckReport& r) {
  require_plain(c);
  const int k = criticality(c.g);
  require(k != 0, "not k-critical for any k >= 4");
  const auto cuts = two_cuts(c.g);
  require(!cuts.empty(), "no 2-cut");
  nlohmann::json splits = nlohmann::json::array();
  std::int64_t certified = 0;
  for (const VertexCut& cut : cuts) {
    const TwoCutSplit s = two_cut_split_certified(c.g, k, {cut.vertices[0], cut.vertices[1]});
    if (s.certified()) ++certified;
    splits.push_back({{"cut", cut.vertices},
                      {"case", s.case_id},
                      {"uv_nonadjacent", s.uv_nonadjacent},
                      {"no_common_neighbor", s.no_common_neighbor},
                      {"join_critical", s.join_critical},
                      {"contract_critical", s.contract_critical},
                      {"t", {s.t_graph, s.t_join, s.t_contract}}});
  }
  r.measured = certified;
  r.bound = Rational(static_cast<std::int64_t>(cuts.size()));
  r.relation = Relation::equal;
  r.witness = {{"k", k}, {"splits", splits}};
  judge(r);
}

void check_lemma2_4(const Context& c, CheckReport& r) {
  require(c.g.order() >= 2 && is_connected(c.g), "needs a connected graph on at least 2 vertices");
  const BlockTree tree = block_tree(c.g);
  std::int64_t worst_slack = std::numeric_limits<std::int64_t>::max();
  std::size_t pairs = 0;
  for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
    const Block& block = tree.blocks[b];
    if (block.kind() == Block::Kind::isolated_vertex) continue;
    const VertexMask within = vertices_to_mask(block.vertices);
    for (std::size_t i = 0; i < block.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < block.vertices.size(); ++j) {
        const Vertex x = block.vertices[i];
        const Vertex y = block.vertices[j];
        const PathCounts pc = count_paths(c.sg, x, y, within, c.budget);
        const auto count = static_cast<std::int64_t>(pc.odd + pc.even + (c.g.has_edge(x, y) ? 1 : 0));
        const std::int64_t need = block.t() + 1;
        ++pairs;
        if (count - need < worst_slack) {
          worst_slack = count - need;
          r.measured = count;
          r.bound = Rational(need);
          r.witness = {{"block", block.vertices}, {"x", x}, {"y", y}, {"t_block", block.t()}};
        }
      }
    }
  }
  r.witness["pairs_checked"] = pairs;
  r.relation = Relation::at_least;
  judge(r);
}

void check_prop2_5(const Context& c, CheckReport& r) {
  require(c.g.order() >= 1 && is_connected(c.g), "needs a connected graph");
  const TAdditivity add = t_additivity_check(c.g);
  r.measured = std::accumulate(add.per_block.begin(), add.per_block.end(), std::int64_t{0});
  r.bound = Rational(add.t_total);
  r.relation = Relation::equal;
  r.witness = {{"per_block", add.per_block}};
  judge(r);
}

// Shared driver for the anchored-structure checks: runs `measure` on every
// non-separating induced odd cycle and keeps the smallest slack.
template <typename Measure>
void over_anchors(const Context& c, CheckReport& r, const char* none_reason, Measure&& measure) {
  require(three_connected(c.g), "not 3-connected");
  require(!is_bipartite_signed(c.sg), "bipartite");
  const auto anchors = all_nonseparating_induced_odd_cycles(c.sg, 0, c.budget);
  std::optional<Int> worst;
  std::size_t used = 0;
  for (const Cycle& anchor : anchors) {
    const AnchoredInstance inst = build_anchored(c.sg, anchor, c.budget);
    std::int64_t measured = 0;
    std::int64_t bound = 0;
    nlohmann::json detail;
    if (!measure(inst, measured, bound, detail)) continue;
    ++used;
    const Int slack = static_cast<Int>(measured) - bound;
    if (!worst || slack < *worst) {
      worst = slack;
      r.measured = measured;
      r.bound = Rational(bound);
      detail["anchor"] = anchor.vertices;
      r.witness = detail;
    }
  }
  require(used > 0, none_reason);
  r.witness["anchors_checked"] = used;
  r.relation = Relation::at_least;
  judge(r);
}

void check_lemma3_1(const Context& c, CheckReport& r) {
  over_anchors(c, r, "no anchor leaves H 2-connected",
               [&](const AnchoredInstance& inst, std::int64_t& measured, std::int64_t& bound, nlohmann::json& d) {
                 if (!h_is_two_connected(inst)) return false;
                 measured = static_cast<std::int64_t>(basic_cycles(inst, c.budget).basic.size());
                 bound = static_cast<std::int64_t>(lemma_3_1_bound(inst));
                 d = {{"t", inst.t}, {"m", inst.m}};
                 return true;
               });
}

void check_lemma3_3(const Context& c, CheckReport& r) {
  over_anchors(c, r, "no anchor leaves H with two end-blocks",
               [&](const AnchoredInstance& inst, std::int64_t& measured, std::int64_t& bound, nlohmann::json& d) {
                 if (h_is_two_connected(inst) || inst.h.graph.order() < 2) return false;
                 const int k = end_block_count(inst);
                 if (k < 2) return false;
                 measured = static_cast<std::int64_t>(basic_cycles(inst, c.budget).basic.size());
                 bound = lemma_3_3_bound(inst);
                 d = {{"t", inst.t}, {"m", inst.m}, {"k", k}};
                 return true;
               });
}

void check_lemma3_2(const Context& c, CheckReport& r) {
  over_anchors(c, r, "H has fewer than two vertices for every anchor",
               [&](const AnchoredInstance& inst, std::int64_t& measured, std::int64_t& bound, nlohmann::json& d) {
                 const auto& to_host = inst.h.to_host;
                 if (to_host.size() < 2) return false;
                 std::optional<Int> worst;
                 for (std::size_t i = 0; i < to_host.size(); ++i) {
                   for (std::size_t j = i + 1; j < to_host.size(); ++j) {
                     const BlockPathBound b = lemma_3_2_bound(inst, to_host[i], to_host[j], c.budget);
                     const Int slack = static_cast<Int>(b.path_count) - static_cast<Int>(b.lower_bound);
                     if (!worst || slack < *worst) {
                       worst = slack;
                       measured = static_cast<std::int64_t>(b.path_count);
                       bound = static_cast<std::int64_t>(b.lower_bound);
                       d = {{"a", to_host[i]}, {"b", to_host[j]}, {"blocks_on_path", b.block_path.size() / 2 + 1}};
                     }
                   }
                 }
                 return true;
               });
}

// Three internally disjoint paths from x starting with x-a, x-b, x-c and
// ending on distinct vertices of `target`.
bool fan_to_cycle(const Graph& g, Vertex x, const std::array<Vertex, 3>& first, VertexMask target) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!e.touches(x)) edges.push_back(e);
  }
  for (Vertex y : first) edges.emplace_back(x, y);
  for (Vertex v : mask_to_vertices(target)) edges.emplace_back(v, n);
  const Graph aux(n + 1, std::move(edges));
  return local_connectivity(aux, x, n, 3) >= 3;
}

void check_lemma5_1(const Context& c, CheckReport& r) {
  require(three_connected(c.g), "not 3-connected");
  require(!is_bipartite_signed(c.sg), "bipartite");
  require(c.g.order() < kMaxVertices, "too many vertices for the fan search");
  const std::int64_t t = t_value(c.g);
  std::optional<std::int64_t> worst;
  std::size_t admitted_vertices = 0;
  for (Vertex x = 0; x < c.g.order(); ++x) {
    if (is_bipartite_signed(c.sg, c.g.all_vertices() & ~bit(x))) continue;
    const auto ds = all_nonseparating_induced_odd_cycles(c.sg, bit(x), c.budget);
    const auto nbrs = c.g.neighbors(x);
    const std::size_t d = nbrs.size();
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        for (std::size_t e = b + 1; e < d; ++e) {
          for (const Cycle& dc : ds) {
            if (fan_to_cycle(c.g, x, {nbrs[a], nbrs[b], nbrs[e]}, dc.vertex_mask())) {
              triples.push_back({a, b, e});
              break;
            }
          }
        }
      }
    }
    if (triples.empty()) continue;
    ++admitted_vertices;
    // count[p][i][j]: cycles of parity p through x using edges x-nbrs[i], x-nbrs[j].
    std::vector<std::vector<std::vector<std::int64_t>>> count(
        2, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
    std::vector<int> index(static_cast<std::size_t>(c.g.order()), -1);
    for (std::size_t i = 0; i < d; ++i) index[static_cast<std::size_t>(nbrs[i])] = static_cast<int>(i);
    for (int p = 0; p < 2; ++p) {
      for (const Cycle& cyc : cycles_through_vertex(c.sg, x, p, std::nullopt, c.budget)) {
        const auto& vs = cyc.vertices;
        const auto pos = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), x) - vs.begin());
        const int i = index[static_cast<std::size_t>(vs[(pos + 1) % vs.size()])];
        const int j = index[static_cast<std::size_t>(vs[(pos + vs.size() - 1) % vs.size()])];
        ++count[static_cast<std::size_t>(p)][static_cast<std::size_t>(std::min(i, j))][static_cast<std::size_t>(std::max(i, j))];
      }
    }
    for (const auto& tri : triples) {
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < d; ++i) {
        if (i != tri[0] && i != tri[1] && i != tri[2]) free.push_back(i);
      }
      std::vector<int> colour(d, 0);
      colour[tri[1]] = 1;
      colour[tri[2]] = 2;
      std::size_t total = 1;
      for (std::size_t i = 0; i < free.size(); ++i) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t f : free) {
          colour[f] = static_cast<int>(rest % 3);
          rest /= 3;
        }
        for (int p = 0; p < 2; ++p) {
          std::int64_t through = 0;
          for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
              if (colour[i] != colour[j]) through += count[static_cast<std::size_t>(p)][i][j];
            }
          }
          if (!worst || through < *worst) {
            worst = through;
            std::vector<int> shown(static_cast<std::size_t>(c.g.order()), -1);
            for (std::size_t i = 0; i < d; ++i) shown[static_cast<std::size_t>(nbrs[i])] = colour[i];
            r.witness = {{"x", x},
                         {"first_edges", {nbrs[tri[0]], nbrs[tri[1]], nbrs[tri[2]]}},
                         {"parity", p},
                         {"coloring", shown}};
          }
        }
      }
    }
  }
  require(worst.has_value(), "no vertex admits three disjoint paths to a suitable cycle");
  r.measured = *worst;
  r.bound = Rational(t);
  r.relation = Relation::at_least;
  r.witness["admitted_vertices"] = admitted_vertices;
  judge(r);
}

void check_lemma5_2(const Context& c, CheckReport& r) {
  require_plain(c);
  require(three_connected(c.g), "not 3-connected");
  const std::int64_t t = t_value(c.g);
  std::vector<bool> nonbip(static_cast<std::size_t>(c.g.order()));
  for (Vertex v = 0; v < c.g.order(); ++v) {
    nonbip[static_cast<std::size_t>(v)] = !is_bipartite_signed(c.sg, c.g.all_vertices() & ~bit(v));
  }
  std::optional<std::int64_t> worst;
  std::size_t pairs = 0;
  for (Vertex x = 0; x < c.g.order(); ++x) {
    for (Vertex y = x + 1; y < c.g.order(); ++y) {
      if (!nonbip[static_cast<std::size_t>(x)] || !nonbip[static_cast<std::size_t>(y)]) continue;
      ++pairs;
      const PathCounts pc = count_paths(c.sg, x, y, c.g.all_vertices(), c.budget);
      for (int p = 0; p < 2; ++p) {
        const auto n = static_cast<std::int64_t>(p ? pc.odd : pc.even);
        if (!worst || n < *worst) {
          worst = n;
          r.witness = {{"x", x}, {"y", y}, {"parity", p}};
        }
      }
    }
  }
  require(pairs > 0, "no pair with both vertex-deleted subgraphs non-bipartite");
  r.measured = *worst;
  r.bound = Rational(t - 1);
  r.relation = Relation::at_least;
  r.witness["pairs_checked"] = pairs;
  judge(r);
}

void check_even_cycles(const Context& c, CheckReport& r) {
  require_plain(c);
  require(c.g.order() >= 4 && is_connected(c.g), "needs a connected graph on at least 4 vertices");
  require(three_connected(c.g) || four_critical(c.g), "neither 3-connected nor 4-critical");
  const std::int64_t t = t_value(c.g);
  r.measured = static_cast<std::int64_t>(count_cycles(c.sg, c.budget).even);
  r.bound = Rational(t * t, 50);
  r.relation = Relation::at_least;
  r.witness = {{"t", t}, {"even", r.measured}};
  judge(r);
}

void check_construction8(const Context& c, CheckReport& r) {
  const auto match = match_section8(c.sg);
  require(match.has_value(), "not an apex over an even cycle with the construction's parities");
  const CycleSet odd = enumerate_cycles(c.sg, 1, c.budget);
  const bool all_special = std::all_of(odd.begin(), odd.end(),
                                       [&](const Cycle& cyc) { return cyc.contains_edge(match->special_edge); });
  const std::int64_t t = t_value(c.g);
  r.measured = static_cast<std::int64_t>(odd.size());
  r.bound = Rational(2 * t);
  r.relation = Relation::at_most;
  r.witness = {{"apex", match->apex}, {"special", match->special}, {"t", t}, {"all_through_special", all_special}};
  judge(r);
  if (!all_special) {
    r.status = CheckStatus::fail;
    r.message = "some odd cycle avoids the special edge";
  }
}

using CheckFn = void (*)(const Context&, CheckReport&);

CheckFn lookup(const std::string& name) {
  static const std::map<std::string, CheckFn> table{
      {"thm1.2", check_thm1_2},     {"thm1.3", check_thm1_3},         {"thm1.4", check_thm1_4},
      {"thm1.5", check_thm1_5},     {"ky", check_ky},                 {"lemma2.1", check_lemma2_1},
      {"lemma2.4", check_lemma2_4}, {"prop2.5", check_prop2_5},       {"lemma3.1", check_lemma3_1},
      {"lemma3.2", check_lemma3_2}, {"lemma3.3", check_lemma3_3},     {"lemma4.1", check_lemma4_1},
      {"lemma5.1", check_lemma5_1}, {"lemma5.2", check_lemma5_2},     {"even_cycles", check_even_cycles},
      {"construction8", check_construction8},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::UnknownCheck, "unknown check '" + name + "'");
  return it->second;
}

std::size_t check_rank(const std::string& name) {
  const auto& names = check_names();
  return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
}

}  // namespace

CheckReport run_check(const std::string& name, const SignedGraph& sg, const Budget& budget) {
  const CheckFn fn = lookup(name);
  CheckReport r;
  r.check = name;
  r.graph_id = graph_id(sg);
  r.hash = graph_hash(sg.graph());
  auto reset = [&] {
    CheckReport blank;
    blank.check = r.check;
    blank.graph_id = r.graph_id;
    blank.hash = r.hash;
    r = std::move(blank);
  };
  const auto start = std::chrono::steady_clock::now();
  try {
    fn(Context{sg, sg.graph(), budget}, r);
  } catch (const Skip& skip) {
    reset();
    r.status = CheckStatus::skipped;
    r.message = skip.reason;
  } catch (const Error& err) {
    reset();
    if (err.kind() == ErrorKind::HypothesisViolated) {
      r.status = CheckStatus::skipped;
    } else {
      r.status = CheckStatus::error;
    }
    r.message = std::string(to_string(err.kind())) + ": " + err.what();
  } catch (const std::exception& err) {
    reset();
    r.status = CheckStatus::error;
    r.message = std::string("internal: ") + err.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CheckReport run_check(const std::string& name, const Graph& g, const Budget& budget) {
  return run_check(name, SignedGraph::lift(g), budget);
}

void StatusCounts::add(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: ++pass; break;
    case CheckStatus::fail: ++fail; break;
    case CheckStatus::skipped: ++skipped; break;
    case CheckStatus::error: ++error; break;
  }
}

nlohmann::json SweepSummary::summary_json() const {
  auto counts = [](const StatusCounts& c) {
    return nlohmann::json{{"pass", c.pass}, {"fail", c.fail}, {"skipped", c.skipped}, {"error", c.error}};
  };
  nlohmann::json j{{"graphs", graphs}, {"totals", counts(totals)}};
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [name, c] : per_check) per[name] = counts(c);
  j["per_check"] = per;
  return j;
}

SweepSummary sweep_graphs(const std::vector<SignedGraph>& graphs, const SweepOptions& options) {
  for (const std::string& name : options.checks) lookup(name);
  std::vector<std::vector<CheckReport>> results(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      Budget budget = options.budget;
      if (options.time_limit_ms > 0) budget = budget.with_time_limit(std::chrono::milliseconds(options.time_limit_ms));
      for (const std::string& name : options.checks) results[i].push_back(run_check(name, graphs[i], budget));
    }
  };
  const int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (jobs == 1 || graphs.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  SweepSummary summary;
  summary.graphs = graphs.size();
  std::vector<std::pair<std::size_t, CheckReport>> flat;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (CheckReport& r : results[i]) flat.emplace_back(i, std::move(r));
  }
  std::stable_sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
    if (a.second.graph_id != b.second.graph_id) return a.second.graph_id < b.second.graph_id;
    if (a.first != b.first) return a.first < b.first;
    return check_rank(a.second.check) < check_rank(b.second.check);
  });
  for (auto& [index, r] : flat) {
    summary.totals.add(r.status);
    summary.per_check[r.check].add(r.status);
    summary.reports.push_back(std::move(r));
  }
  return summary;
}

SweepSummary sweep(const SweepOptions& options) {
  for (const std::string& name : options.checks) lookup(name);
  std::vector<SignedGraph> graphs;
  for_each_corpus_graph(options.corpus, [&](const Graph& g) { graphs.push_back(SignedGraph::lift(g)); });
  return sweep_graphs(graphs, options);
}

void write_jsonl(std::ostream& out, const std::vector<CheckReport>& reports, bool include_timing) {
  for (const CheckReport& r : reports) out << to_json(r, include_timing).dump() << '\n';
}

}  // namespace critgraph
