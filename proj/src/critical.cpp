#include "critgraph/critical.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "critgraph/cycles.hpp"
#include "critgraph/error.hpp"

namespace critgraph {

namespace {

class ColoringSearch {
 public:
  ColoringSearch(std::span<const VertexMask> adj, int k)
      : adj_(adj), n_(static_cast<int>(adj.size())), k_(k), full_(k >= 64 ? ~0ULL : (bit(k) - 1)),
        color_(static_cast<std::size_t>(n_), -1) {}

  std::optional<std::vector<int>> run() {
    if (n_ == 0) return std::vector<int>{};
    if (k_ <= 0) return std::nullopt;
    std::vector<VertexMask> forbid(static_cast<std::size_t>(n_), 0);
    if (!solve(0, forbid, 0)) return std::nullopt;
    return color_;
  }

 private:
  bool solve(int colored, const std::vector<VertexMask>& forbid, int used) {
    if (colored == n_) return true;
    VertexMask uncolored = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[static_cast<std::size_t>(v)] < 0) uncolored |= bit(v);
    }
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (VertexMask m = uncolored; m; m &= m - 1) {
      const Vertex v = std::countr_zero(m);
      const int sat = std::popcount(forbid[static_cast<std::size_t>(v)]);
      const int deg = std::popcount(adj_[static_cast<std::size_t>(v)] & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    // Colors above `used` are interchangeable; try only the first fresh one.
    const VertexMask allowed = full_ & (used >= 63 ? ~0ULL : (bit(used + 1) - 1));
    VertexMask avail = allowed & ~forbid[static_cast<std::size_t>(pick)];
    const VertexMask nbr = adj_[static_cast<std::size_t>(pick)] & uncolored & ~bit(pick);
    while (avail) {
      const int c = std::countr_zero(avail);
      avail &= avail - 1;
      std::vector<VertexMask> next = forbid;
      bool dead = false;
      for (VertexMask m = nbr; m; m &= m - 1) {
        const Vertex w = std::countr_zero(m);
        next[static_cast<std::size_t>(w)] |= bit(c);
        if ((next[static_cast<std::size_t>(w)] & full_) == full_) dead = true;
      }
      if (dead) continue;
      color_[static_cast<std::size_t>(pick)] = c;
      if (solve(colored + 1, next, std::max(used, c + 1))) return true;
      color_[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  }

  std::span<const VertexMask> adj_;
  int n_;
  int k_;
  VertexMask full_;
  std::vector<int> color_;
};

std::vector<VertexMask> rows_of(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<VertexMask> rows(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    rows[static_cast<std::size_t>(ed.u)] |= bit(ed.v);
    rows[static_cast<std::size_t>(ed.v)] |= bit(ed.u);
  }
  return rows;
}

int greedy_clique(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (Vertex start = 0; start < g.order(); ++start) {
    VertexMask cand = g.neighbor_mask(start);
    int size = 1;
    while (cand) {
      Vertex pick = -1;
      int best_deg = -1;
      for (VertexMask m = cand; m; m &= m - 1) {
        const Vertex v = std::countr_zero(m);
        const int d = std::popcount(g.neighbor_mask(v) & cand);
        if (d > best_deg) {
          best_deg = d;
          pick = v;
        }
      }
      ++size;
      cand &= g.neighbor_mask(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

bool colorable(std::span<const VertexMask> rows, int k) { return ColoringSearch(rows, k).run().has_value(); }

}  // namespace

std::optional<std::vector<int>> find_coloring(std::span<const VertexMask> adjacency, int k) {
  return ColoringSearch(adjacency, k).run();
}

std::optional<std::vector<int>> find_coloring(const Graph& g, int k) { return find_coloring(g.adjacency(), k); }

int chromatic_number(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::TooSmall, "chromatic number of the empty graph");
  for (int k = greedy_clique(g);; ++k) {
    if (find_coloring(g, k)) return k;
  }
}

std::optional<CriticalityCertificate> certify_k_critical(const Graph& g, int k) {
  if (k < 3) throw Error(ErrorKind::BadParameters, "criticality is certified for k >= 3");
  if (g.order() == 0) return std::nullopt;
  CriticalityCertificate cert;
  cert.k = k;
  cert.min_degree = g.min_degree();
  cert.min_degree_ok = cert.min_degree >= k - 1;
  if (!cert.min_degree_ok) return std::nullopt;
  if (find_coloring(g, k - 1)) return std::nullopt;
  auto full = find_coloring(g, k);
  if (!full) return std::nullopt;
  cert.coloring = std::move(*full);
  std::vector<VertexMask> rows(g.adjacency().begin(), g.adjacency().end());
  for (const Edge& e : g.edges()) {
    rows[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
    rows[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
    auto witness = find_coloring(rows, k - 1);
    rows[static_cast<std::size_t>(e.u)] |= bit(e.v);
    rows[static_cast<std::size_t>(e.v)] |= bit(e.u);
    if (!witness) return std::nullopt;
    cert.edge_witnesses.push_back(std::move(*witness));
  }
  return cert;
}

bool is_k_critical(const Graph& g, int k) { return certify_k_critical(g, k).has_value(); }

EdgeSubset minimal_critical_subgraph(const Graph& g, EdgeSubset edges, int s) {
  std::sort(edges.begin(), edges.end());
  std::vector<VertexMask> rows = rows_of(g, edges);
  if (colorable(rows, s - 1)) throw std::logic_error("edge set is already (s-1)-colorable");
  EdgeSubset kept;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    rows[static_cast<std::size_t>(ed.u)] &= ~bit(ed.v);
    rows[static_cast<std::size_t>(ed.v)] &= ~bit(ed.u);
    if (colorable(rows, s - 1)) {
      rows[static_cast<std::size_t>(ed.u)] |= bit(ed.v);
      rows[static_cast<std::size_t>(ed.v)] |= bit(ed.u);
      kept.push_back(e);
    }
  }
  return kept;
}

CriticalFamily gallai_family(const Graph& g, int k) {
  auto cert = certify_k_critical(g, k);
  if (!cert) throw Error(ErrorKind::NotCritical, "graph is not " + std::to_string(k) + "-critical");
  CriticalFamily family;
  family.k = k;
  family.degenerate = (k == 3);
  std::vector<EdgeSubset> raw_lists;
  std::set<EdgeSubset> pool;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    std::vector<int> coloring = cert->edge_witnesses[static_cast<std::size_t>(e)];
    const int cu = coloring[static_cast<std::size_t>(ed.u)];
    if (cu != coloring[static_cast<std::size_t>(ed.v)]) {
      throw std::logic_error("a (k-1)-coloring of G - e separates the ends of e");
    }
    // Put the class of e's ends first.
    for (int& c : coloring) {
      if (c == cu) c = 0;
      else if (c == 0) c = cu;
    }
    family.colorings.push_back(coloring);
    for (int cls = 1; cls <= k - 2; ++cls) {
      EdgeSubset kept;
      for (EdgeId f = 0; f < g.size(); ++f) {
        const Edge& fe = g.edge(f);
        if (coloring[static_cast<std::size_t>(fe.u)] != cls && coloring[static_cast<std::size_t>(fe.v)] != cls) kept.push_back(f);
      }
      EdgeSubset member = minimal_critical_subgraph(g, std::move(kept), k - 1);
      if (!std::binary_search(member.begin(), member.end(), e)) {
        throw std::logic_error("critical subgraph of G - A_i misses e");
      }
      raw_lists.push_back(member);
      pool.insert(std::move(member));
    }
  }
  family.members.assign(pool.begin(), pool.end());
  auto index_of = [&](const EdgeSubset& s) {
    return static_cast<int>(std::lower_bound(family.members.begin(), family.members.end(), s) - family.members.begin());
  };
  const auto per_edge = static_cast<std::size_t>(k - 2);
  family.separation_holds = true;
  std::set<std::vector<int>> seen_lists;
  for (EdgeId e = 0; e < g.size(); ++e) {
    std::vector<int> list;
    for (std::size_t i = 0; i < per_edge; ++i) list.push_back(index_of(raw_lists[static_cast<std::size_t>(e) * per_edge + i]));
    std::vector<int> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) family.separation_holds = false;
    for (EdgeId f = 0; f < g.size() && family.separation_holds; ++f) {
      if (f == e) continue;
      const bool missed = std::any_of(list.begin(), list.end(), [&](int m) {
        const EdgeSubset& mem = family.members[static_cast<std::size_t>(m)];
        return !std::binary_search(mem.begin(), mem.end(), f);
      });
      if (!missed) family.separation_holds = false;
    }
    seen_lists.insert(sorted);
    family.lists.push_back(std::move(list));
  }
  family.lists_distinct = seen_lists.size() == static_cast<std::size_t>(g.size());
  return family;
}

namespace {

class CriticalSubgraphCounter {
 public:
  CriticalSubgraphCounter(const Graph& g, int s, const Budget& budget)
      : g_(g), s_(s), meter_(budget), rows_(static_cast<std::size_t>(g.order()), 0),
        inc_(static_cast<std::size_t>(g.order()), 0), rem_(static_cast<std::size_t>(g.order()), 0) {
    for (Vertex v = 0; v < g.order(); ++v) rem_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  std::uint64_t run() {
    search(0, true);
    return count_;
  }

 private:
  bool feasible(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return inc_[i] == 0 || inc_[i] + rem_[i] >= s_ - 1;
  }

  bool degrees_final_ok() const {
    bool any = false;
    for (Vertex v = 0; v < g_.order(); ++v) {
      const int d = inc_[static_cast<std::size_t>(v)];
      if (d == 0) continue;
      any = true;
      if (d < s_ - 1) return false;
    }
    return any;
  }

  void consider_current() {
    if (!degrees_final_ok()) return;
    VertexMask support = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (inc_[static_cast<std::size_t>(v)] > 0) support |= bit(v);
    }
    if (!is_connected(g_, support)) return;
    std::vector<VertexMask> rows = rows_;
    if (colorable(rows, s_ - 1)) return;
    for (Vertex u = 0; u < g_.order(); ++u) {
      for (VertexMask m = rows_[static_cast<std::size_t>(u)] & ~((bit(u) << 1) - 1); m; m &= m - 1) {
        const Vertex w = std::countr_zero(m);
        rows[static_cast<std::size_t>(u)] &= ~bit(w);
        rows[static_cast<std::size_t>(w)] &= ~bit(u);
        const bool ok = colorable(rows, s_ - 1);
        rows[static_cast<std::size_t>(u)] |= bit(w);
        rows[static_cast<std::size_t>(w)] |= bit(u);
        if (!ok) return;
      }
    }
    ++count_;
  }

  void search(int index, bool changed) {
    meter_.charge_item();
    if (changed && !colorable(rows_, s_ - 1)) {
      // Any superset would contain this s-chromatic subgraph properly.
      consider_current();
      return;
    }
    if (index == g_.size()) {
      return;  // still (s-1)-colorable, hence not s-critical
    }
    const Edge& e = g_.edge(index);
    const auto iu = static_cast<std::size_t>(e.u);
    const auto iv = static_cast<std::size_t>(e.v);
    --rem_[iu];
    --rem_[iv];
    // include
    if (inc_[iu] + rem_[iu] + 1 >= s_ - 1 && inc_[iv] + rem_[iv] + 1 >= s_ - 1) {
      ++inc_[iu];
      ++inc_[iv];
      rows_[iu] |= bit(e.v);
      rows_[iv] |= bit(e.u);
      search(index + 1, true);
      rows_[iu] &= ~bit(e.v);
      rows_[iv] &= ~bit(e.u);
      --inc_[iu];
      --inc_[iv];
    }
    // exclude
    if (feasible(e.u) && feasible(e.v)) search(index + 1, false);
    ++rem_[iu];
    ++rem_[iv];
  }

  const Graph& g_;
  int s_;
  BudgetMeter meter_;
  std::vector<VertexMask> rows_;
  std::vector<int> inc_;
  std::vector<int> rem_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t f_s_count(const Graph& g, int s, const Budget& budget) {
  if (s < 3) throw Error(ErrorKind::BadParameters, "f_s is defined for s >= 3");
  if (s == 3) return f_count(g, budget);
  if (g.order() > 9) {
    throw Error(ErrorKind::BudgetExceeded, "exact f_s for s >= 4 is limited to graphs with at most 9 vertices");
  }
  return CriticalSubgraphCounter(g, s, budget).run();
}

Graph contract_pair(const Graph& g, Vertex u, Vertex v) {
  const Vertex keep = std::min(u, v);
  const Vertex gone = std::max(u, v);
  auto relabel = [&](Vertex x) {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const Edge& e : g.edges()) {
    if (Edge(u, v) == e) continue;
    const Edge mapped(relabel(e.u), relabel(e.v));
    if (!seen.insert(mapped).second) throw std::logic_error("contraction would create a parallel edge");
    edges.push_back(mapped);
  }
  return Graph(g.order() - 1, std::move(edges));
}

TwoCutSplit two_cut_split_certified(const Graph& g, int k, std::pair<Vertex, Vertex> cut) {
  auto [u, v] = cut;
  if (u > v) std::swap(u, v);
  const VertexMask all = g.all_vertices();
  const VertexMask uv = bit(u) | bit(v);
  auto comps = components(g, all & ~uv);
  if (comps.size() != 2) {
    throw std::logic_error("a 2-cut of a critical graph must leave exactly two components");
  }
  if (std::popcount(comps[1]) < std::popcount(comps[0])) std::swap(comps[0], comps[1]);
  TwoCutSplit split;
  split.u = u;
  split.v = v;
  split.side1 = induced_subgraph(g, comps[0] | uv);
  split.side2 = induced_subgraph(g, comps[1] | uv);
  split.uv_nonadjacent = !g.has_edge(u, v);
  split.t_graph = t_value(g);

  auto attempt = [&](const Subgraph& edge_side, const Subgraph& contract_side, VertexMask contract_comp, int id) {
    TwoCutSplit trial = split;
    trial.case_id = id;
    trial.no_common_neighbor = (g.neighbor_mask(u) & g.neighbor_mask(v) & contract_comp) == 0;
    const Vertex eu = edge_side.from_host[static_cast<std::size_t>(u)];
    const Vertex ev = edge_side.from_host[static_cast<std::size_t>(v)];
    trial.join = edge_side.graph.has_edge(eu, ev) ? edge_side.graph : add_edge(edge_side.graph, eu, ev);
    trial.join_critical = is_k_critical(trial.join, k);
    if (trial.no_common_neighbor) {
      trial.contract = contract_pair(contract_side.graph, contract_side.from_host[static_cast<std::size_t>(u)],
                                     contract_side.from_host[static_cast<std::size_t>(v)]);
      trial.contract_critical = is_k_critical(trial.contract, k);
      trial.t_contract = t_value(trial.contract);
    }
    trial.t_join = t_value(trial.join);
    return trial;
  };
  TwoCutSplit chosen = attempt(split.side1, split.side2, comps[1], 1);
  if (!chosen.certified()) {
    TwoCutSplit other = attempt(split.side2, split.side1, comps[0], 2);
    if (other.certified()) chosen = std::move(other);
  }
  const SignedGraph lifted = SignedGraph::lift(g);
  const PathCounts p1 = count_paths(lifted, u, v, comps[0]);
  const PathCounts p2 = count_paths(lifted, u, v, comps[1]);
  chosen.side1_both_parities = p1.odd > 0 && p1.even > 0;
  chosen.side2_both_parities = p2.odd > 0 && p2.even > 0;
  return chosen;
}

TwoCutSplit two_cut_split(const Graph& g, int k, std::optional<std::pair<Vertex, Vertex>> cut) {
  if (!is_k_critical(g, k)) throw Error(ErrorKind::NotCritical, "graph is not " + std::to_string(k) + "-critical");
  if (g.order() < 4) throw Error(ErrorKind::NoTwoCut, "graph has fewer than 4 vertices");
  const auto cuts = two_cuts(g);
  if (cuts.empty()) throw Error(ErrorKind::NoTwoCut, "graph is 3-connected");
  if (cut) {
    const VertexCut want{{std::min(cut->first, cut->second), std::max(cut->first, cut->second)}};
    if (std::find(cuts.begin(), cuts.end(), want) == cuts.end()) {
      throw Error(ErrorKind::NoTwoCut, "the given pair is not a 2-cut");
    }
    return two_cut_split_certified(g, k, {want.vertices[0], want.vertices[1]});
  }
  const VertexMask all = g.all_vertices();
  const VertexCut* best = nullptr;
  int best_order = kMaxVertices + 1;
  for (const VertexCut& c : cuts) {
    const VertexMask uv = bit(c.vertices[0]) | bit(c.vertices[1]);
    int smallest = kMaxVertices + 1;
    for (VertexMask comp : components(g, all & ~uv)) smallest = std::min(smallest, std::popcount(comp) + 2);
    if (smallest < best_order) {
      best_order = smallest;
      best = &c;
    }
  }
  return two_cut_split_certified(g, k, {best->vertices[0], best->vertices[1]});
}

}  // namespace critgraph
