#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/cycles.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

struct Block {
  enum class Kind { isolated_vertex, edge, two_connected };

  std::vector<Vertex> vertices;  // sorted
  std::vector<EdgeId> edges;     // sorted host edge ids

  Kind kind() const;
  int t() const { return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1; }
  bool contains(Vertex v) const;
};

/// Blocks and cut vertices of a connected graph with their incidence tree.
struct BlockTree {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;           // sorted
  std::vector<std::vector<int>> cut_blocks;   // per cut vertex index: incident blocks
  std::vector<std::vector<int>> block_cuts;   // per block: cut vertex indices
  std::vector<int> edge_block;                // per host edge id

  /// Blocks holding at most one cut vertex.
  std::vector<int> end_blocks() const;
  bool is_cut_vertex(Vertex v) const;
  std::vector<int> blocks_containing(Vertex v) const;
};

/// Lowpoint DFS decomposition. Throws Error(DisconnectedInput), Error(TooSmall)
/// on the empty graph.
BlockTree block_tree(const Graph& g);

struct TAdditivity {
  int t_total = 0;
  std::vector<int> per_block;
  bool holds() const;
};
TAdditivity t_additivity_check(const Graph& g);

/// One step of a block-tree path: a block index or a cut vertex.
struct BlockPathItem {
  enum class Kind { block, cut_vertex };
  Kind kind = Kind::block;
  int value = 0;  // block index, or the cut vertex itself

  friend bool operator==(const BlockPathItem&, const BlockPathItem&) = default;
};

/// Shortest block-tree path B1 c1 B2 ... Bl with a in B1 and b in Bl.
/// Throws Error(SameVertex), Error(DisconnectedInput).
std::vector<BlockPathItem> block_path(const Graph& g, const BlockTree& tree, Vertex a, Vertex b);
std::vector<BlockPathItem> block_path(const Graph& g, Vertex a, Vertex b);

struct Ear {
  std::vector<Vertex> vertices;  // path ends first/last; for a closed ear, the cycle order
  std::vector<EdgeId> edges;     // sorted
  bool closed = false;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return closed ? vertices.front() : vertices.back(); }
};

struct EarDecomposition {
  std::vector<Ear> ears;
  std::optional<Cycle> anchor;
};

/// Ear decomposition of a 2-connected graph; with an anchor, the first ear is
/// the anchor and every ear from the third on has an end off the anchor.
/// Throws Error(NotTwoConnected) or Error(BadAnchor).
EarDecomposition ear_decomposition(const Graph& g, const std::optional<Cycle>& anchor = std::nullopt);

/// Checks every structural invariant of a decomposition; returns a message
/// for the first violation.
std::optional<std::string> validate_ear_decomposition(const Graph& g, const EarDecomposition& dec);

bool is_two_connected(const Graph& g);

}  // namespace critgraph
