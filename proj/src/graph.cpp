#include "critgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "critgraph/error.hpp"

namespace critgraph {

namespace {

std::string edge_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorKind::BadParameters, "negative vertex count");
  if (n > kMaxVertices) {
    throw Error(ErrorKind::ScaleGuard,
                "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) {
      throw Error(ErrorKind::BadParameters, "edge " + edge_text(e.u, e.v) + " out of range");
    }
    if (e.u == e.v) throw Error(ErrorKind::BadParameters, "loop at " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::BadParameters, "parallel edge " + edge_text(dup->u, dup->v));
  }
  const auto un = static_cast<std::size_t>(n);
  adj_.assign(un, 0);
  nbrs_.assign(un, {});
  ids_.assign(un * un, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    ids_[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)] = static_cast<EdgeId>(i);
    ids_[static_cast<std::size_t>(e.v) * un + static_cast<std::size_t>(e.u)] = static_cast<EdgeId>(i);
  }
  for (Vertex v = 0; v < n; ++v) nbrs_[static_cast<std::size_t>(v)] = mask_to_vertices(adj_[static_cast<std::size_t>(v)]);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        list.reserve(edges.size());
        for (auto [a, b] : edges) list.emplace_back(a, b);
        return list;
      }()) {}

VertexMask Graph::all_vertices() const noexcept {
  return n_ == 64 ? ~VertexMask{0} : (bit(n_) - 1);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  return has_vertex(a) && has_vertex(b) && (adj_[static_cast<std::size_t>(a)] & bit(b)) != 0;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return std::nullopt;
  const EdgeId id = ids_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  if (id < 0) return std::nullopt;
  return id;
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
  if (auto id = find_edge(a, b)) return *id;
  throw Error(ErrorKind::EdgeAbsent, "edge " + edge_text(a, b) + " is not in the graph");
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

SignedGraph::SignedGraph(Graph graph, std::vector<std::uint8_t> parity)
    : graph_(std::move(graph)), parity_(std::move(parity)) {
  if (parity_.size() != static_cast<std::size_t>(graph_.size())) {
    throw Error(ErrorKind::BadParameters, "parity map must cover every edge");
  }
  for (auto p : parity_) {
    if (p > 1) throw Error(ErrorKind::BadParameters, "parity values must be 0 or 1");
  }
}

SignedGraph SignedGraph::lift(Graph graph) {
  std::vector<std::uint8_t> ones(static_cast<std::size_t>(graph.size()), 1);
  return SignedGraph(std::move(graph), std::move(ones));
}

bool SignedGraph::is_plain() const {
  return std::all_of(parity_.begin(), parity_.end(), [](auto p) { return p == 1; });
}

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) mask |= bit(v);
  return mask;
}

Subgraph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.all_vertices();
  Subgraph sub;
  sub.to_host = mask_to_vertices(keep);
  sub.from_host.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    sub.from_host[static_cast<std::size_t>(sub.to_host[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if ((keep & bit(e.u)) && (keep & bit(e.v))) {
      edges.emplace_back(sub.from_host[static_cast<std::size_t>(e.u)], sub.from_host[static_cast<std::size_t>(e.v)]);
    }
  }
  sub.graph = Graph(static_cast<int>(sub.to_host.size()), std::move(edges));
  return sub;
}

SignedGraph induced_signed(const SignedGraph& sg, const Subgraph& sub) {
  std::vector<std::uint8_t> parity;
  parity.reserve(static_cast<std::size_t>(sub.graph.size()));
  for (const Edge& e : sub.graph.edges()) {
    parity.push_back(static_cast<std::uint8_t>(
        sg.parity(sub.to_host[static_cast<std::size_t>(e.u)], sub.to_host[static_cast<std::size_t>(e.v)])));
  }
  return SignedGraph(sub.graph, std::move(parity));
}

Graph remove_edges(const Graph& g, std::span<const EdgeId> drop) {
  std::vector<bool> dropped(static_cast<std::size_t>(g.size()), false);
  for (EdgeId e : drop) dropped[static_cast<std::size_t>(e)] = true;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!dropped[static_cast<std::size_t>(e)]) edges.push_back(g.edge(e));
  }
  return Graph(g.order(), std::move(edges));
}

Graph add_edge(const Graph& g, Vertex a, Vertex b) {
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(a, b);
  return Graph(g.order(), std::move(edges));
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (EdgeId e : keep) edges.push_back(g.edge(e));
  return Graph(g.order(), std::move(edges));
}

std::vector<VertexMask> components(const Graph& g, VertexMask within) {
  within &= g.all_vertices();
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left) {
    VertexMask comp = left & (~left + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexMask> components(const Graph& g) { return components(g, g.all_vertices()); }

bool is_connected(const Graph& g, VertexMask within) {
  within &= g.all_vertices();
  if (!within) return true;
  VertexMask comp = within & (~within + 1);
  VertexMask frontier = comp;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
    next &= within & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

int t_value(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "t(G) needs a connected graph");
  return g.size() - g.order() + 1;
}

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  // Unit vertex capacities via splitting: v_in = 2v, v_out = 2v+1.
  const int n = g.order();
  const int nodes = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  for (Vertex v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
  for (const Edge& e : g.edges()) {
    at(2 * e.u + 1, 2 * e.v) = 1;
    at(2 * e.v + 1, 2 * e.u) = 1;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes; ++b) {
        if (parent[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
          parent[static_cast<std::size_t>(b)] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
      const int a = parent[static_cast<std::size_t>(b)];
      --at(a, b);
      ++at(b, a);
    }
    ++flow;
  }
  return flow;
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorKind::TooSmall, "connectivity needs at least 2 vertices");
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t, best));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  const int n = g.order();
  if (k <= 0) return true;
  if (n < k + 1) return false;
  if (g.min_degree() < k) return false;
  if (!is_connected(g)) return false;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (!g.has_edge(s, t) && local_connectivity(g, s, t, k) < k) return false;
    }
  }
  return true;
}

std::vector<VertexCut> two_cuts(const Graph& g) {
  const int n = g.order();
  if (n < 4) throw Error(ErrorKind::TooSmall, "two_cuts needs at least 4 vertices");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "two_cuts needs a connected graph");
  std::vector<VertexCut> out;
  const VertexMask all = g.all_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!is_connected(g, all & ~bit(u) & ~bit(v))) out.push_back(VertexCut{{u, v}});
    }
  }
  return out;
}

namespace {

// side[v] in {0,1} or -1 outside `within`; false on an odd cycle.
bool parity_sides(const SignedGraph& sg, VertexMask within, std::vector<int>& side) {
  const Graph& g = sg.graph();
  side.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (!(within & bit(root)) || side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex a = stack.back();
      stack.pop_back();
      for (Vertex b : g.neighbors(a)) {
        if (!(within & bit(b))) continue;
        const int want = side[static_cast<std::size_t>(a)] ^ sg.parity(a, b);
        if (side[static_cast<std::size_t>(b)] < 0) {
          side[static_cast<std::size_t>(b)] = want;
          stack.push_back(b);
        } else if (side[static_cast<std::size_t>(b)] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Bipartition> is_bipartite_signed(const SignedGraph& sg) {
  std::vector<int> side;
  if (!parity_sides(sg, sg.graph().all_vertices(), side)) return std::nullopt;
  Bipartition part;
  for (Vertex v = 0; v < sg.order(); ++v) {
    (side[static_cast<std::size_t>(v)] == 0 ? part.a : part.b).push_back(v);
  }
  return part;
}

bool is_bipartite_signed(const SignedGraph& sg, VertexMask within) {
  std::vector<int> side;
  return parity_sides(sg, within, side);
}

}  // namespace critgraph
