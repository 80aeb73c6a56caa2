#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "critgraph/budget.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

/// Simple cycle in canonical form: `vertices` starts at the smallest vertex
/// and vertices[1] < vertices.back(); `edges` is the sorted edge-id set.
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  int parity = 0;

  std::size_t length() const noexcept { return vertices.size(); }
  VertexMask vertex_mask() const { return vertices_to_mask(vertices); }
  bool contains_edge(EdgeId e) const;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges == b.edges; }
};

/// Builds the canonical cycle for a closed vertex sequence (no repeat of the
/// first vertex at the end). Throws Error(BadParameters) if it is not a
/// simple cycle of sg.
Cycle make_cycle(const SignedGraph& sg, std::span<const Vertex> sequence);

/// Ordering used for every CycleSet: by length, then vertex sequence.
bool cycle_less(const Cycle& a, const Cycle& b);

/// Deduplicated, canonically ordered cycles with parity counts.
class CycleSet {
 public:
  CycleSet() = default;
  explicit CycleSet(std::vector<Cycle> cycles);

  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  std::size_t size() const noexcept { return cycles_.size(); }
  bool empty() const noexcept { return cycles_.empty(); }
  std::size_t odd_count() const noexcept { return odd_; }
  std::size_t even_count() const noexcept { return cycles_.size() - odd_; }
  bool contains(const Cycle& c) const;

  auto begin() const { return cycles_.begin(); }
  auto end() const { return cycles_.end(); }

 private:
  std::vector<Cycle> cycles_;
  std::size_t odd_ = 0;
};

/// Simple (x,y)-path; `vertices` runs x..y.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  int parity = 0;
  /// True for the single edge xy, which several counts exclude.
  bool direct = false;

  std::size_t length() const noexcept { return edges.size(); }
};

struct PathSet {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Path> paths;

  std::size_t size() const noexcept { return paths.size(); }
  /// Paths of the given parity, optionally not counting the edge xy.
  std::size_t count(int parity, bool exclude_direct) const;
};

struct CycleCounts {
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
  std::uint64_t total() const noexcept { return odd + even; }
};

/// All simple cycles, optionally restricted to one parity. Cycles are found
/// by rooted backtracking: each cycle is reported once from its smallest
/// vertex in the direction whose second vertex is smaller.
CycleSet enumerate_cycles(const SignedGraph& sg, std::optional<int> parity_filter = std::nullopt,
                          const Budget& budget = Budget::from_env());

/// Parity counts without materializing cycles.
CycleCounts count_cycles(const SignedGraph& sg, const Budget& budget = Budget::from_env());

/// f(G): number of odd cycles of the plain graph.
std::uint64_t f_count(const Graph& g, const Budget& budget = Budget::from_env());

/// All simple (x,y)-paths. Throws Error(SameVertex).
PathSet enumerate_paths(const SignedGraph& sg, Vertex x, Vertex y,
                        std::optional<int> parity_filter = std::nullopt,
                        const Budget& budget = Budget::from_env());

/// Path counts by parity, excluding the direct edge xy.
struct PathCounts {
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
};
PathCounts count_paths(const SignedGraph& sg, Vertex x, Vertex y, VertexMask within,
                       const Budget& budget = Budget::from_env());

/// Colors of the edges at one vertex, indexed by the neighbor's label.
/// Entries for non-neighbors are ignored.
using LocalEdgeColoring = std::vector<int>;

/// Cycles of the given parity through x; with a coloring, only those whose
/// two edges at x carry different colors.
CycleSet cycles_through_vertex(const SignedGraph& sg, Vertex x, int parity,
                               const std::optional<LocalEdgeColoring>& coloring = std::nullopt,
                               const Budget& budget = Budget::from_env());

/// Cycles of the given parity containing edge e. Throws Error(EdgeAbsent).
CycleSet cycles_through_edge(const SignedGraph& sg, Edge e, int parity,
                             const Budget& budget = Budget::from_env());

/// What the non-separating search must avoid.
struct AvoidSpec {
  enum class Kind { none, vertex, subgraph };
  Kind kind = Kind::none;
  Vertex vertex = -1;
  std::vector<Vertex> subgraph;  // vertex set of a connected subgraph F

  static AvoidSpec nothing() { return {}; }
  static AvoidSpec avoid_vertex(Vertex v) { return {Kind::vertex, v, {}}; }
  static AvoidSpec avoid_subgraph(std::vector<Vertex> f) { return {Kind::subgraph, -1, std::move(f)}; }
  VertexMask mask() const;
};

/// An induced odd cycle C with sg - C connected and disjoint from the avoided
/// set; shortest first, then canonical order.
///
/// In checked mode the hypotheses that guarantee existence are verified
/// first (Error(HypothesisViolated) otherwise):
///   vertex:   sg 3-connected and sg - v non-bipartite;
///   subgraph: plain sg, 4-critical or 3-connected, F connected and sg - F
///             containing an odd cycle;
///   none:     sg 3-connected and sg - v non-bipartite for some v.
/// A checked search that finds nothing is an internal error. Unchecked
/// searches raise Error(NotFound).
Cycle nonseparating_induced_odd_cycle(const SignedGraph& sg, const AvoidSpec& avoid = {},
                                      bool checked = true,
                                      const Budget& budget = Budget::from_env());

/// Every non-separating induced odd cycle avoiding the given set, in search
/// order.
std::vector<Cycle> all_nonseparating_induced_odd_cycles(const SignedGraph& sg, VertexMask avoid,
                                                        const Budget& budget = Budget::from_env());

bool is_induced_cycle(const Graph& g, const Cycle& c);

}  // namespace critgraph
