#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critgraph/budget.hpp"
#include "critgraph/cycles.hpp"
#include "critgraph/decomp.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

/// An edge between the anchor cycle C and the rest H = G - C.
struct CrossEdge {
  EdgeId id = 0;     // host edge id
  Vertex on_cycle = 0;
  Vertex off_cycle = 0;  // host label
};

/// A 3-connected non-bipartite signed graph with a fixed non-separating
/// induced odd cycle. t(host) = t + m always.
struct AnchoredInstance {
  SignedGraph host;
  Cycle anchor;
  Subgraph h;            // H = host - anchor, local labels
  SignedGraph h_signed;  // H with inherited parities
  std::vector<CrossEdge> cross;
  int m = 0;
  int t = 0;

  /// Host label -> H label, -1 for anchor vertices.
  Vertex to_h(Vertex host_vertex) const { return h.from_host[static_cast<std::size_t>(host_vertex)]; }
};

/// Builds the instance from a supplied anchor (validated: a cycle of sg that
/// is odd, induced and non-separating, else Error(BadAnchor)) or from the
/// first cycle returned by the non-separating search.
/// Throws Error(HypothesisViolated) unless sg is 3-connected and non-bipartite.
AnchoredInstance build_anchored(const SignedGraph& sg, const std::optional<Cycle>& anchor = std::nullopt,
                                const Budget& budget = Budget::from_env());

/// Unordered pair of cross edges whose cycle ends differ.
struct GoodPair {
  CrossEdge first;
  CrossEdge second;
};

std::vector<GoodPair> good_pairs(const AnchoredInstance& inst);

struct BasicCycles {
  CycleSet basic;        // odd completions
  CycleSet even_shadow;  // the matching even completions
  std::uint64_t good_pair_count = 0;
};

/// Completes every good path of every good pair through the two arcs of C.
BasicCycles basic_cycles(const AnchoredInstance& inst, const Budget& budget = Budget::from_env());

struct StaplePair {
  int block = 0;        // index into the BlockTree of H
  Vertex cut_vertex = 0;  // host label of c_i
  CrossEdge e;
  CrossEdge f;
};

struct StapleAssignment {
  BlockTree h_blocks;
  std::vector<StaplePair> pairs;
};

/// One staple pair per end-block of H, lexicographically smallest by edge id.
/// A single-edge H is treated as an end-block from each side, the opposite
/// end playing the cut vertex. Throws Error(HypothesisViolated) when H is
/// 2-connected or a single vertex.
StapleAssignment staple_edges(const AnchoredInstance& inst);

struct BlockPathBound {
  std::uint64_t lower_bound = 0;
  std::uint64_t path_count = 0;
  std::vector<BlockPathItem> block_path;  // in H labels
  PathSet witness_paths;                  // in H labels
  bool holds() const { return path_count >= lower_bound; }
};

/// Product of (t(B)+1) over the blocks on the block path of H between a
/// and b (host labels), against the enumerated (a,b)-path count in H.
/// Throws Error(SameVertex), Error(BadParameters) if a vertex is on C.
BlockPathBound lemma_3_2_bound(const AnchoredInstance& inst, Vertex a, Vertex b,
                               const Budget& budget = Budget::from_env());

/// Number of end-blocks of H (1 when H is a single block).
int end_block_count(const AnchoredInstance& inst);
bool h_is_two_connected(const AnchoredInstance& inst);

/// (t+1)m, requiring H 2-connected.
std::uint64_t lemma_3_1_bound(const AnchoredInstance& inst);
/// (m-k)(t+k) + ceil(k/2) with k end-blocks, requiring k >= 2.
std::int64_t lemma_3_3_bound(const AnchoredInstance& inst);

}  // namespace critgraph
