#include "critgraph/decomp.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "critgraph/error.hpp"

namespace critgraph {

Block::Kind Block::kind() const {
  if (edges.empty()) return Kind::isolated_vertex;
  if (edges.size() == 1) return Kind::edge;
  return Kind::two_connected;
}

bool Block::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

std::vector<int> BlockTree::end_blocks() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (block_cuts[i].size() <= 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool BlockTree::is_cut_vertex(Vertex v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockTree::blocks_containing(Vertex v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].contains(v)) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

class LowpointDfs {
 public:
  explicit LowpointDfs(const Graph& g)
      : g_(g), disc_(static_cast<std::size_t>(g.order()), -1), low_(static_cast<std::size_t>(g.order()), 0) {}

  std::vector<std::vector<EdgeId>> run() {
    visit(0, -1);
    return std::move(blocks_);
  }

 private:
  void visit(Vertex u, EdgeId via) {
    disc_[static_cast<std::size_t>(u)] = low_[static_cast<std::size_t>(u)] = timer_++;
    for (Vertex w : g_.neighbors(u)) {
      const EdgeId e = g_.edge_id(u, w);
      if (e == via) continue;
      if (disc_[static_cast<std::size_t>(w)] < 0) {
        stack_.push_back(e);
        visit(w, e);
        low_[static_cast<std::size_t>(u)] = std::min(low_[static_cast<std::size_t>(u)], low_[static_cast<std::size_t>(w)]);
        if (low_[static_cast<std::size_t>(w)] >= disc_[static_cast<std::size_t>(u)]) {
          std::vector<EdgeId> block;
          EdgeId top = -1;
          do {
            top = stack_.back();
            stack_.pop_back();
            block.push_back(top);
          } while (top != e);
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[static_cast<std::size_t>(w)] < disc_[static_cast<std::size_t>(u)]) {
        stack_.push_back(e);
        low_[static_cast<std::size_t>(u)] = std::min(low_[static_cast<std::size_t>(u)], disc_[static_cast<std::size_t>(w)]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<EdgeId> stack_;
  std::vector<std::vector<EdgeId>> blocks_;
  int timer_ = 0;
};

}  // namespace

BlockTree block_tree(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::TooSmall, "block tree of the empty graph");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "block tree needs a connected graph");
  BlockTree tree;
  tree.edge_block.assign(static_cast<std::size_t>(g.size()), -1);
  if (g.order() == 1) {
    tree.blocks.push_back(Block{{0}, {}});
  } else {
    for (auto& edges : LowpointDfs(g).run()) {
      std::sort(edges.begin(), edges.end());
      VertexMask m = 0;
      for (EdgeId e : edges) m |= bit(g.edge(e).u) | bit(g.edge(e).v);
      tree.blocks.push_back(Block{mask_to_vertices(m), std::move(edges)});
    }
    std::sort(tree.blocks.begin(), tree.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  }
  std::vector<int> membership(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    for (Vertex v : tree.blocks[i].vertices) ++membership[static_cast<std::size_t>(v)];
    for (EdgeId e : tree.blocks[i].edges) tree.edge_block[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (membership[static_cast<std::size_t>(v)] > 1) tree.cut_vertices.push_back(v);
  }
  tree.cut_blocks.assign(tree.cut_vertices.size(), {});
  tree.block_cuts.assign(tree.blocks.size(), {});
  for (std::size_t c = 0; c < tree.cut_vertices.size(); ++c) {
    for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
      if (tree.blocks[i].contains(tree.cut_vertices[c])) {
        tree.cut_blocks[c].push_back(static_cast<int>(i));
        tree.block_cuts[i].push_back(static_cast<int>(c));
      }
    }
  }
  return tree;
}

bool TAdditivity::holds() const {
  int sum = 0;
  for (int t : per_block) sum += t;
  return sum == t_total;
}

TAdditivity t_additivity_check(const Graph& g) {
  const BlockTree tree = block_tree(g);
  TAdditivity out;
  out.t_total = t_value(g);
  for (const Block& b : tree.blocks) out.per_block.push_back(b.t());
  return out;
}

std::vector<BlockPathItem> block_path(const Graph& g, const BlockTree& tree, Vertex a, Vertex b) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw Error(ErrorKind::BadParameters, "vertex out of range");
  if (a == b) throw Error(ErrorKind::SameVertex, "block path endpoints must differ");
  const int nb = static_cast<int>(tree.blocks.size());
  const int nodes = nb + static_cast<int>(tree.cut_vertices.size());
  std::vector<int> parent(static_cast<std::size_t>(nodes), -2);
  std::deque<int> queue;
  for (int blk : tree.blocks_containing(a)) {
    parent[static_cast<std::size_t>(blk)] = -1;
    queue.push_back(blk);
  }
  int hit = -1;
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    if (node < nb && tree.blocks[static_cast<std::size_t>(node)].contains(b)) {
      hit = node;
      break;
    }
    const auto& next = node < nb ? tree.block_cuts[static_cast<std::size_t>(node)]
                                 : tree.cut_blocks[static_cast<std::size_t>(node - nb)];
    for (int x : next) {
      const int target = node < nb ? x + nb : x;
      if (parent[static_cast<std::size_t>(target)] == -2) {
        parent[static_cast<std::size_t>(target)] = node;
        queue.push_back(target);
      }
    }
  }
  if (hit < 0) throw Error(ErrorKind::DisconnectedInput, "no block path between the vertices");
  std::vector<BlockPathItem> path;
  for (int node = hit; node != -1; node = parent[static_cast<std::size_t>(node)]) {
    if (node < nb) {
      path.push_back({BlockPathItem::Kind::block, node});
    } else {
      path.push_back({BlockPathItem::Kind::cut_vertex, tree.cut_vertices[static_cast<std::size_t>(node - nb)]});
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<BlockPathItem> block_path(const Graph& g, Vertex a, Vertex b) {
  return block_path(g, block_tree(g), a, b);
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  const VertexMask all = g.all_vertices();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_connected(g, all & ~bit(v))) return false;
  }
  return true;
}

namespace {

Ear make_ear(const Graph& g, std::vector<Vertex> vertices, bool closed) {
  Ear ear;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) ear.edges.push_back(g.edge_id(vertices[i], vertices[i + 1]));
  if (closed) ear.edges.push_back(g.edge_id(vertices.back(), vertices.front()));
  std::sort(ear.edges.begin(), ear.edges.end());
  ear.vertices = std::move(vertices);
  ear.closed = closed;
  return ear;
}

// Shortest path from `start` through vertices of `interior` to any vertex of
// `targets`; empty if none.
std::vector<Vertex> bfs_route(const Graph& g, Vertex start, VertexMask interior, VertexMask targets) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  VertexMask seen = bit(start);
  std::deque<Vertex> queue{start};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (seen & bit(w)) continue;
      if (targets & bit(w)) {
        std::vector<Vertex> route{w};
        for (Vertex x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) route.push_back(x);
        std::reverse(route.begin(), route.end());
        return route;
      }
      if (interior & bit(w)) {
        seen |= bit(w);
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
  return {};
}

Cycle shortest_cycle_through_first_edge(const Graph& g) {
  const Edge& e = g.edge(0);
  const Graph without = remove_edges(g, std::vector<EdgeId>{0});
  std::vector<Vertex> route = bfs_route(without, e.u, without.all_vertices() & ~bit(e.u) & ~bit(e.v), bit(e.v));
  return make_cycle(SignedGraph::lift(g), route);
}

}  // namespace

EarDecomposition ear_decomposition(const Graph& g, const std::optional<Cycle>& anchor) {
  if (!is_two_connected(g)) throw Error(ErrorKind::NotTwoConnected, "ear decomposition needs a 2-connected graph");
  const VertexMask all = g.all_vertices();
  EarDecomposition dec;
  VertexMask anchor_mask = 0;
  Cycle first;
  if (anchor) {
    for (Vertex v : anchor->vertices) {
      if (!g.has_vertex(v)) throw Error(ErrorKind::BadAnchor, "anchor vertex out of range");
    }
    try {
      first = make_cycle(SignedGraph::lift(g), anchor->vertices);
    } catch (const Error& err) {
      throw Error(ErrorKind::BadAnchor, std::string("anchor is not a cycle: ") + err.what());
    }
    if (!is_induced_cycle(g, first)) throw Error(ErrorKind::BadAnchor, "anchor cycle has a chord");
    anchor_mask = first.vertex_mask();
    if (!is_connected(g, all & ~anchor_mask)) throw Error(ErrorKind::BadAnchor, "anchor cycle is separating");
    dec.anchor = *anchor;
  } else {
    first = shortest_cycle_through_first_edge(g);
  }
  std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
  VertexMask current = 0;
  dec.ears.push_back(make_ear(g, first.vertices, true));
  for (EdgeId e : dec.ears.back().edges) used[static_cast<std::size_t>(e)] = true;
  current = first.vertex_mask();
  std::size_t used_count = dec.ears.back().edges.size();

  while (used_count < static_cast<std::size_t>(g.size())) {
    const bool restrict_ends = anchor.has_value() && dec.ears.size() >= 2;
    std::vector<Vertex> chosen;
    // Attachment points off the anchor are tried first.
    std::vector<Vertex> order = mask_to_vertices(current & ~anchor_mask);
    for (Vertex v : mask_to_vertices(current & anchor_mask)) order.push_back(v);
    for (Vertex u : order) {
      const bool u_on_anchor = (anchor_mask & bit(u)) != 0;
      for (Vertex w : g.neighbors(u)) {
        if (used[static_cast<std::size_t>(g.edge_id(u, w))]) continue;
        if (current & bit(w)) {
          if (restrict_ends && u_on_anchor && (anchor_mask & bit(w))) continue;
          chosen = {u, w};
          break;
        }
        VertexMask targets = current & ~bit(u);
        if (restrict_ends && u_on_anchor) targets &= ~anchor_mask;
        std::vector<Vertex> route = bfs_route(g, w, all & ~current, targets);
        if (route.empty()) continue;
        chosen = {u};
        chosen.insert(chosen.end(), route.begin(), route.end());
        break;
      }
      if (!chosen.empty()) break;
    }
    if (chosen.empty()) throw std::logic_error("ear construction exhausted all attachment points");
    Ear ear = make_ear(g, chosen, false);
    for (EdgeId e : ear.edges) used[static_cast<std::size_t>(e)] = true;
    used_count += ear.edges.size();
    current |= vertices_to_mask(ear.vertices);
    dec.ears.push_back(std::move(ear));
  }
  return dec;
}

std::optional<std::string> validate_ear_decomposition(const Graph& g, const EarDecomposition& dec) {
  if (dec.ears.empty()) return "no ears";
  if (!dec.ears.front().closed) return "first ear is not a cycle";
  std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
  std::vector<Edge> prefix_edges;
  VertexMask current = 0;
  VertexMask anchor_mask = dec.anchor ? dec.anchor->vertex_mask() : 0;
  if (dec.anchor && dec.ears.front().edges != dec.anchor->edges) return "first ear differs from the anchor";
  for (std::size_t i = 0; i < dec.ears.size(); ++i) {
    const Ear& ear = dec.ears[i];
    const std::string tag = "ear " + std::to_string(i + 1) + ": ";
    if (ear.edges.empty()) return tag + "has no edges";
    if (i > 0) {
      if (ear.closed) return tag + "later ears must be paths";
      if (ear.front() == ear.back()) return tag + "ends coincide";
      if (!(current & bit(ear.front())) || !(current & bit(ear.back()))) return tag + "ends not in earlier ears";
      for (std::size_t k = 1; k + 1 < ear.vertices.size(); ++k) {
        if (current & bit(ear.vertices[k])) return tag + "interior meets earlier ears";
      }
      if (dec.anchor && i >= 2 && (anchor_mask & bit(ear.front())) && (anchor_mask & bit(ear.back()))) {
        return tag + "both ends on the anchor";
      }
    }
    for (std::size_t k = 0; k + 1 < ear.vertices.size(); ++k) {
      if (!g.has_edge(ear.vertices[k], ear.vertices[k + 1])) return tag + "uses a missing edge";
    }
    for (EdgeId e : ear.edges) {
      if (used[static_cast<std::size_t>(e)]) return tag + "reuses an edge";
      used[static_cast<std::size_t>(e)] = true;
      prefix_edges.push_back(g.edge(e));
    }
    current |= vertices_to_mask(ear.vertices);
    // Prefix unions live on host labels; vertices outside `current` are isolated.
    const Subgraph prefix = induced_subgraph(Graph(g.order(), prefix_edges), current);
    if (!is_two_connected(prefix.graph)) return tag + "prefix union is not 2-connected";
    if (dec.anchor) {
      Graph host_prefix(g.order(), prefix_edges);
      if (!is_connected(host_prefix, current & ~anchor_mask)) return tag + "anchor separates the prefix union";
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return "ears do not cover every edge";
  if (current != g.all_vertices()) return "ears do not cover every vertex";
  if (static_cast<int>(dec.ears.size()) != t_value(g)) return "ear count differs from t(G)";
  return std::nullopt;
}

}  // namespace critgraph
