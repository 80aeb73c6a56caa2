#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "critgraph/budget.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

/// Proper coloring with colors 0..k-1 of the graph given by adjacency rows,
/// or nullopt. DSATUR-ordered exact backtracking.
std::optional<std::vector<int>> find_coloring(std::span<const VertexMask> adjacency, int k);
std::optional<std::vector<int>> find_coloring(const Graph& g, int k);

/// Exact chromatic number. Throws Error(TooSmall) for the empty graph.
int chromatic_number(const Graph& g);

struct CriticalityCertificate {
  int k = 0;
  /// Per edge id: a (k-1)-coloring of G - e.
  std::vector<std::vector<int>> edge_witnesses;
  /// A k-coloring of G.
  std::vector<int> coloring;
  int min_degree = 0;
  bool min_degree_ok = false;
};

/// Certificate iff chi(G) = k, G has no isolated vertex and every G - e is
/// (k-1)-colorable. Throws Error(BadParameters) for k < 3.
std::optional<CriticalityCertificate> certify_k_critical(const Graph& g, int k);
bool is_k_critical(const Graph& g, int k);

/// Edge set (host edge ids, sorted) identifying a subgraph.
using EdgeSubset = std::vector<EdgeId>;

struct CriticalFamily {
  int k = 0;
  std::vector<EdgeSubset> members;            // sorted, distinct, each (k-1)-critical
  std::vector<std::vector<int>> lists;        // per edge id: the k-2 member indices of L(e)
  std::vector<std::vector<int>> colorings;    // per edge id: the (k-1)-coloring of G - e used
  /// Every L(e) has k-2 members containing e, and for each f != e some
  /// member of L(e) misses f.
  bool separation_holds = false;
  /// The sets L(e) are pairwise distinct.
  bool lists_distinct = false;
  /// k = 3: every 2-critical subgraph is a single edge.
  bool degenerate = false;

  std::size_t size() const noexcept { return members.size(); }
};

/// Family of (k-1)-critical subgraphs built from per-edge colorings.
/// Throws Error(NotCritical) unless g is k-critical.
CriticalFamily gallai_family(const Graph& g, int k);

/// Minimal subgraph of the edge set `edges` (host ids) that is not
/// (s-1)-colorable, found by deleting edges in canonical order. `edges` must
/// induce chromatic number >= s.
EdgeSubset minimal_critical_subgraph(const Graph& g, EdgeSubset edges, int s);

/// f_s(G): number of distinct s-critical subgraphs. s = 3 counts odd cycles;
/// s >= 4 runs a pruned exhaustive search limited to n <= 9.
/// Throws Error(BudgetExceeded) for infeasible instances.
std::uint64_t f_s_count(const Graph& g, int s, const Budget& budget = Budget::from_env());

/// Lemma-style decomposition of a k-critical graph at a 2-cut {u,v}.
struct TwoCutSplit {
  Vertex u = 0;
  Vertex v = 0;
  /// Side subgraphs on host labels, each induced on its component plus {u,v}.
  /// side1 has the smaller order (ties: the side holding the smallest vertex).
  Subgraph side1;
  Subgraph side2;
  /// 1 if side1 + uv and side2 / {u,v} are k-critical, 2 if side1 / {u,v}
  /// and side2 + uv are.
  int case_id = 0;
  Graph join;      // (edge side) + uv
  Graph contract;  // (other side) / {u,v}
  bool uv_nonadjacent = false;
  bool no_common_neighbor = false;
  bool join_critical = false;
  bool contract_critical = false;
  int t_graph = 0;
  int t_join = 0;
  int t_contract = 0;
  /// (u,v)-path parities available inside each side.
  bool side1_both_parities = false;
  bool side2_both_parities = false;

  bool t_identity() const { return t_join + t_contract == t_graph + 1; }
  bool certified() const {
    return uv_nonadjacent && no_common_neighbor && join_critical && contract_critical && t_identity();
  }
};

/// Split at `cut`, or at the 2-cut whose smaller side has minimum order
/// (ties lexicographic). Throws Error(NotCritical), Error(NoTwoCut).
TwoCutSplit two_cut_split(const Graph& g, int k, std::optional<std::pair<Vertex, Vertex>> cut = std::nullopt);
/// Same, for a graph already certified k-critical.
TwoCutSplit two_cut_split_certified(const Graph& g, int k, std::pair<Vertex, Vertex> cut);

/// G / {u,v}: u and v merged into one vertex (labelled min(u,v), later
/// labels shifted down). Throws std::logic_error if a parallel edge would
/// arise.
Graph contract_pair(const Graph& g, Vertex u, Vertex v);

}  // namespace critgraph
