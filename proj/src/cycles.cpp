#include "critgraph/cycles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "critgraph/critical.hpp"
#include "critgraph/error.hpp"

namespace critgraph {

namespace {

// Row v has bit w set iff vw is an odd edge.
std::vector<VertexMask> odd_rows(const SignedGraph& sg) {
  std::vector<VertexMask> rows(static_cast<std::size_t>(sg.order()), 0);
  for (EdgeId e = 0; e < sg.size(); ++e) {
    if (sg.parity(e)) {
      const Edge& ed = sg.graph().edge(e);
      rows[static_cast<std::size_t>(ed.u)] |= bit(ed.v);
      rows[static_cast<std::size_t>(ed.v)] |= bit(ed.u);
    }
  }
  return rows;
}

int edge_parity(const std::vector<VertexMask>& odd, Vertex a, Vertex b) {
  return (odd[static_cast<std::size_t>(a)] >> b) & 1;
}

// Visits each simple cycle once as (vertex sequence, parity), rooted at its
// smallest vertex and oriented so that seq[1] < seq.back().
template <class Visit>
class RootedCycleSearch {
 public:
  RootedCycleSearch(const SignedGraph& sg, BudgetMeter& meter, Visit& visit)
      : g_(sg.graph()), odd_(odd_rows(sg)), meter_(meter), visit_(visit) {}

  void run() {
    for (Vertex r = 0; r < g_.order(); ++r) {
      root_ = r;
      allowed_ = g_.all_vertices() & ~((bit(r) << 1) - 1);
      path_.assign(1, r);
      extend(r, bit(r), 0);
    }
  }

 private:
  void extend(Vertex u, VertexMask visited, int parity) {
    meter_.tick();
    VertexMask next = g_.neighbor_mask(u) & allowed_ & ~visited;
    while (next) {
      const Vertex w = std::countr_zero(next);
      next &= next - 1;
      const int p = parity ^ edge_parity(odd_, u, w);
      path_.push_back(w);
      if (path_.size() >= 3 && path_[1] < w && g_.has_edge(w, root_)) {
        meter_.charge_item();
        visit_(std::span<const Vertex>(path_), p ^ edge_parity(odd_, w, root_));
      }
      extend(w, visited | bit(w), p);
      path_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<VertexMask> odd_;
  BudgetMeter& meter_;
  Visit& visit_;
  Vertex root_ = 0;
  VertexMask allowed_ = 0;
  std::vector<Vertex> path_;
};

template <class Visit>
void for_each_cycle(const SignedGraph& sg, const Budget& budget, Visit&& visit) {
  BudgetMeter meter(budget);
  RootedCycleSearch<std::remove_reference_t<Visit>> search(sg, meter, visit);
  search.run();
}

// Simple x..y paths inside `within`; visit(sequence, parity).
template <class Visit>
void for_each_path(const SignedGraph& sg, Vertex x, Vertex y, VertexMask within, BudgetMeter& meter,
                   Visit&& visit) {
  const Graph& g = sg.graph();
  const auto odd = odd_rows(sg);
  std::vector<Vertex> path{x};
  auto extend = [&](auto& self, Vertex u, VertexMask visited, int parity) -> void {
    meter.tick();
    VertexMask next = g.neighbor_mask(u) & within & ~visited;
    while (next) {
      const Vertex w = std::countr_zero(next);
      next &= next - 1;
      const int p = parity ^ edge_parity(odd, u, w);
      path.push_back(w);
      if (w == y) {
        meter.charge_item();
        visit(std::span<const Vertex>(path), p);
      } else {
        self(self, w, visited | bit(w), p);
      }
      path.pop_back();
    }
  };
  extend(extend, x, bit(x), 0);
}

std::vector<EdgeId> edge_ids_of_walk(const Graph& g, std::span<const Vertex> seq, bool closed) {
  std::vector<EdgeId> edges;
  edges.reserve(seq.size());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) edges.push_back(g.edge_id(seq[i], seq[i + 1]));
  if (closed) edges.push_back(g.edge_id(seq.back(), seq.front()));
  std::sort(edges.begin(), edges.end());
  return edges;
}

Cycle canonical_cycle_unchecked(const SignedGraph& sg, std::span<const Vertex> seq, int parity) {
  Cycle c;
  const auto n = seq.size();
  const auto start = static_cast<std::size_t>(std::min_element(seq.begin(), seq.end()) - seq.begin());
  const Vertex fwd = seq[(start + 1) % n];
  const Vertex bwd = seq[(start + n - 1) % n];
  c.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.vertices.push_back(fwd < bwd ? seq[(start + i) % n] : seq[(start + n - i) % n]);
  }
  c.edges = edge_ids_of_walk(sg.graph(), c.vertices, true);
  c.parity = parity;
  return c;
}

Path make_path(const SignedGraph& sg, std::span<const Vertex> seq, int parity) {
  Path p;
  p.vertices.assign(seq.begin(), seq.end());
  p.edges = edge_ids_of_walk(sg.graph(), seq, false);
  p.parity = parity;
  p.direct = seq.size() == 2;
  return p;
}

}  // namespace

bool Cycle::contains_edge(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

Cycle make_cycle(const SignedGraph& sg, std::span<const Vertex> sequence) {
  const Graph& g = sg.graph();
  if (sequence.size() < 3) throw Error(ErrorKind::BadParameters, "a cycle needs at least 3 vertices");
  VertexMask seen = 0;
  for (Vertex v : sequence) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::BadParameters, "cycle vertex out of range");
    if (seen & bit(v)) throw Error(ErrorKind::BadParameters, "cycle repeats vertex " + std::to_string(v));
    seen |= bit(v);
  }
  int parity = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Vertex a = sequence[i];
    const Vertex b = sequence[(i + 1) % sequence.size()];
    if (!g.has_edge(a, b)) {
      throw Error(ErrorKind::BadParameters,
                  "cycle uses missing edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    parity ^= sg.parity(a, b);
  }
  return canonical_cycle_unchecked(sg, sequence, parity);
}

bool cycle_less(const Cycle& a, const Cycle& b) {
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

CycleSet::CycleSet(std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
  std::sort(cycles_.begin(), cycles_.end(), cycle_less);
  cycles_.erase(std::unique(cycles_.begin(), cycles_.end(),
                            [](const Cycle& a, const Cycle& b) { return a.vertices == b.vertices; }),
                cycles_.end());
  odd_ = static_cast<std::size_t>(std::count_if(cycles_.begin(), cycles_.end(), [](const Cycle& c) { return c.parity == 1; }));
}

bool CycleSet::contains(const Cycle& c) const {
  return std::binary_search(cycles_.begin(), cycles_.end(), c, cycle_less);
}

std::size_t PathSet::count(int parity, bool exclude_direct) const {
  return static_cast<std::size_t>(std::count_if(paths.begin(), paths.end(), [&](const Path& p) {
    return p.parity == parity && !(exclude_direct && p.direct);
  }));
}

CycleSet enumerate_cycles(const SignedGraph& sg, std::optional<int> parity_filter, const Budget& budget) {
  std::vector<Cycle> found;
  for_each_cycle(sg, budget, [&](std::span<const Vertex> seq, int parity) {
    if (!parity_filter || *parity_filter == parity) found.push_back(canonical_cycle_unchecked(sg, seq, parity));
  });
  return CycleSet(std::move(found));
}

CycleCounts count_cycles(const SignedGraph& sg, const Budget& budget) {
  CycleCounts counts;
  for_each_cycle(sg, budget, [&](std::span<const Vertex>, int parity) {
    (parity ? counts.odd : counts.even) += 1;
  });
  return counts;
}

std::uint64_t f_count(const Graph& g, const Budget& budget) {
  return count_cycles(SignedGraph::lift(g), budget).odd;
}

PathSet enumerate_paths(const SignedGraph& sg, Vertex x, Vertex y, std::optional<int> parity_filter,
                        const Budget& budget) {
  const Graph& g = sg.graph();
  if (!g.has_vertex(x) || !g.has_vertex(y)) throw Error(ErrorKind::BadParameters, "path endpoint out of range");
  if (x == y) throw Error(ErrorKind::SameVertex, "path endpoints must differ");
  PathSet out;
  out.x = x;
  out.y = y;
  BudgetMeter meter(budget);
  for_each_path(sg, x, y, g.all_vertices(), meter, [&](std::span<const Vertex> seq, int parity) {
    if (!parity_filter || *parity_filter == parity) out.paths.push_back(make_path(sg, seq, parity));
  });
  std::sort(out.paths.begin(), out.paths.end(), [](const Path& a, const Path& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

PathCounts count_paths(const SignedGraph& sg, Vertex x, Vertex y, VertexMask within, const Budget& budget) {
  if (x == y) throw Error(ErrorKind::SameVertex, "path endpoints must differ");
  PathCounts counts;
  BudgetMeter meter(budget);
  for_each_path(sg, x, y, within | bit(x) | bit(y), meter, [&](std::span<const Vertex> seq, int parity) {
    if (seq.size() == 2) return;
    (parity ? counts.odd : counts.even) += 1;
  });
  return counts;
}

CycleSet cycles_through_vertex(const SignedGraph& sg, Vertex x, int parity,
                               const std::optional<LocalEdgeColoring>& coloring, const Budget& budget) {
  const Graph& g = sg.graph();
  if (!g.has_vertex(x)) throw Error(ErrorKind::BadParameters, "vertex out of range");
  if (coloring && coloring->size() < static_cast<std::size_t>(g.order())) {
    throw Error(ErrorKind::BadParameters, "coloring must have an entry per vertex label");
  }
  const auto odd = odd_rows(sg);
  BudgetMeter meter(budget);
  std::vector<Cycle> found;
  std::vector<Vertex> path{x};
  auto extend = [&](auto& self, Vertex u, VertexMask visited, int par) -> void {
    meter.tick();
    VertexMask next = g.neighbor_mask(u) & ~visited;
    while (next) {
      const Vertex w = std::countr_zero(next);
      next &= next - 1;
      const int p = par ^ edge_parity(odd, u, w);
      path.push_back(w);
      if (path.size() >= 3 && path[1] < w && g.has_edge(w, x)) {
        meter.charge_item();
        const int cp = p ^ edge_parity(odd, w, x);
        const bool colors_ok = !coloring || (*coloring)[static_cast<std::size_t>(path[1])] !=
                                                (*coloring)[static_cast<std::size_t>(w)];
        if (cp == parity && colors_ok) found.push_back(canonical_cycle_unchecked(sg, path, cp));
      }
      self(self, w, visited | bit(w), p);
      path.pop_back();
    }
  };
  extend(extend, x, bit(x), 0);
  return CycleSet(std::move(found));
}

CycleSet cycles_through_edge(const SignedGraph& sg, Edge e, int parity, const Budget& budget) {
  const Graph& g = sg.graph();
  const EdgeId id = g.edge_id(e.u, e.v);
  const int pe = sg.parity(id);
  BudgetMeter meter(budget);
  std::vector<Cycle> found;
  for_each_path(sg, e.u, e.v, g.all_vertices(), meter, [&](std::span<const Vertex> seq, int p) {
    if (seq.size() < 3) return;
    if ((p ^ pe) == parity) found.push_back(canonical_cycle_unchecked(sg, seq, p ^ pe));
  });
  return CycleSet(std::move(found));
}

VertexMask AvoidSpec::mask() const {
  switch (kind) {
    case Kind::none: return 0;
    case Kind::vertex: return bit(vertex);
    case Kind::subgraph: return vertices_to_mask(subgraph);
  }
  return 0;
}

bool is_induced_cycle(const Graph& g, const Cycle& c) {
  const VertexMask m = c.vertex_mask();
  int twice_edges = 0;
  for (Vertex v : c.vertices) twice_edges += std::popcount(g.neighbor_mask(v) & m);
  return twice_edges == 2 * static_cast<int>(c.length());
}

std::vector<Cycle> all_nonseparating_induced_odd_cycles(const SignedGraph& sg, VertexMask avoid,
                                                        const Budget& budget) {
  const Graph& g = sg.graph();
  std::vector<Cycle> out;
  for (const Cycle& c : enumerate_cycles(sg, 1, budget)) {
    const VertexMask m = c.vertex_mask();
    if (m & avoid) continue;
    if (!is_induced_cycle(g, c)) continue;
    if (!is_connected(g, g.all_vertices() & ~m)) continue;
    out.push_back(c);
  }
  return out;
}

Cycle nonseparating_induced_odd_cycle(const SignedGraph& sg, const AvoidSpec& avoid, bool checked,
                                      const Budget& budget) {
  const Graph& g = sg.graph();
  const VertexMask all = g.all_vertices();
  const VertexMask avoid_mask = avoid.mask();
  if (avoid.kind == AvoidSpec::Kind::vertex && !g.has_vertex(avoid.vertex)) {
    throw Error(ErrorKind::BadParameters, "avoided vertex out of range");
  }
  if ((avoid_mask & ~all) != 0) throw Error(ErrorKind::BadParameters, "avoided subgraph out of range");
  if (checked) {
    switch (avoid.kind) {
      case AvoidSpec::Kind::vertex:
        if (!is_k_connected(g, 3)) throw Error(ErrorKind::HypothesisViolated, "graph is not 3-connected");
        if (is_bipartite_signed(sg, all & ~avoid_mask)) {
          throw Error(ErrorKind::HypothesisViolated, "graph minus the avoided vertex is bipartite");
        }
        break;
      case AvoidSpec::Kind::subgraph:
        if (!sg.is_plain()) throw Error(ErrorKind::HypothesisViolated, "subgraph avoidance needs a plain graph");
        if (avoid_mask == 0) throw Error(ErrorKind::HypothesisViolated, "avoided subgraph is empty");
        if (!is_k_connected(g, 3) && !is_k_critical(g, 4)) {
          throw Error(ErrorKind::HypothesisViolated, "graph is neither 3-connected nor 4-critical");
        }
        if (!is_connected(g, avoid_mask)) throw Error(ErrorKind::HypothesisViolated, "avoided subgraph is not connected");
        if (is_bipartite_signed(sg, all & ~avoid_mask)) {
          throw Error(ErrorKind::HypothesisViolated, "graph minus the avoided subgraph has no odd cycle");
        }
        break;
      case AvoidSpec::Kind::none: {
        if (!is_k_connected(g, 3)) throw Error(ErrorKind::HypothesisViolated, "graph is not 3-connected");
        bool some = false;
        for (Vertex v = 0; v < g.order() && !some; ++v) some = !is_bipartite_signed(sg, all & ~bit(v));
        if (!some) throw Error(ErrorKind::HypothesisViolated, "no vertex deletion leaves an odd cycle");
        break;
      }
    }
  }
  for (const Cycle& c : enumerate_cycles(sg, 1, budget)) {
    const VertexMask m = c.vertex_mask();
    if ((m & avoid_mask) || !is_induced_cycle(g, c)) continue;
    if (is_connected(g, all & ~m)) return c;
  }
  if (checked) {
    throw std::logic_error("no non-separating induced odd cycle although the existence hypotheses hold");
  }
  throw Error(ErrorKind::NotFound, "no non-separating induced odd cycle avoids the given set");
}

}  // namespace critgraph
