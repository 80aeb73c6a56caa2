#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace critgraph {

using Vertex = int;
using EdgeId = int;
using VertexMask = std::uint64_t;

/// Graphs are limited to 64 vertices so adjacency fits in one word per row.
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return w == u || w == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edges are sorted so an EdgeId is the edge's rank in canonical order.
class Graph {
 public:
  Graph() = default;
  /// Throws Error(BadParameters) on loops, parallel edges or bad endpoints,
  /// Error(ScaleGuard) if n > kMaxVertices.
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  VertexMask neighbor_mask(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const VertexMask> adjacency() const noexcept { return adj_; }
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[static_cast<std::size_t>(v)].size()); }
  VertexMask all_vertices() const noexcept;

  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }
  bool has_edge(Vertex a, Vertex b) const;
  /// Edge id of ab, or nullopt.
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  /// Edge id of ab; throws Error(EdgeAbsent).
  EdgeId edge_id(Vertex a, Vertex b) const;

  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<EdgeId> ids_;  // n*n, -1 where absent
};

/// Graph with an edge parity p: E -> {0,1}, indexed by EdgeId.
class SignedGraph {
 public:
  SignedGraph() = default;
  /// Throws Error(BadParameters) unless parity is total and 0/1 valued.
  SignedGraph(Graph graph, std::vector<std::uint8_t> parity);

  /// Plain graphs embed with parity 1 on every edge.
  static SignedGraph lift(Graph graph);

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  int size() const noexcept { return graph_.size(); }
  int parity(EdgeId e) const { return parity_[static_cast<std::size_t>(e)]; }
  int parity(Vertex a, Vertex b) const { return parity(graph_.edge_id(a, b)); }
  const std::vector<std::uint8_t>& parities() const noexcept { return parity_; }
  bool is_plain() const;

 private:
  Graph graph_;
  std::vector<std::uint8_t> parity_;
};

/// A vertex subset whose removal disconnects the graph.
struct VertexCut {
  std::vector<Vertex> vertices;
  int size() const { return static_cast<int>(vertices.size()); }
  friend auto operator<=>(const VertexCut&, const VertexCut&) = default;
};

/// Induced subgraph with the map back to host labels.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;    // local -> host
  std::vector<Vertex> from_host;  // host -> local, -1 when absent
};

Subgraph induced_subgraph(const Graph& g, VertexMask keep);
SignedGraph induced_signed(const SignedGraph& sg, const Subgraph& sub);

/// Graph with the listed edges removed. Surviving edges are re-ranked, so
/// callers map ids through endpoints.
Graph remove_edges(const Graph& g, std::span<const EdgeId> drop);
Graph add_edge(const Graph& g, Vertex a, Vertex b);
/// Subgraph on the same vertex set spanned by the listed edges.
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep);

/// Components of g restricted to `within`, each as a vertex mask, ordered by
/// lowest vertex.
std::vector<VertexMask> components(const Graph& g, VertexMask within);
std::vector<VertexMask> components(const Graph& g);
/// True for the empty set and any set inducing a connected subgraph.
bool is_connected(const Graph& g, VertexMask within);
bool is_connected(const Graph& g);

/// t(G) = |E| - |V| + 1. Throws Error(DisconnectedInput).
int t_value(const Graph& g);

/// Maximum number of internally disjoint (s,t)-paths, capped at `limit`.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit = kMaxVertices);

/// Vertex connectivity; 0 when disconnected, n-1 for complete graphs.
/// Throws Error(TooSmall) for n < 2.
int connectivity(const Graph& g);
/// connectivity(g) >= k without computing the exact value.
bool is_k_connected(const Graph& g, int k);

/// All pairs {u,v} whose removal disconnects g, sorted.
/// Throws Error(TooSmall) for n < 4, Error(DisconnectedInput).
std::vector<VertexCut> two_cuts(const Graph& g);

/// Bipartition (A,B) with every A-B edge odd and every other edge even, if
/// one exists. Isolated vertices go to A.
struct Bipartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};
std::optional<Bipartition> is_bipartite_signed(const SignedGraph& sg);
/// Same predicate restricted to the subgraph induced by `within`.
bool is_bipartite_signed(const SignedGraph& sg, VertexMask within);

std::vector<Vertex> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(std::span<const Vertex> vertices);

}  // namespace critgraph
