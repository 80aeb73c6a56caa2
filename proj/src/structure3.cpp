#include "critgraph/structure3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "critgraph/error.hpp"

namespace critgraph {

AnchoredInstance build_anchored(const SignedGraph& sg, const std::optional<Cycle>& anchor, const Budget& budget) {
  const Graph& g = sg.graph();
  if (!is_k_connected(g, 3)) throw Error(ErrorKind::HypothesisViolated, "host is not 3-connected");
  if (is_bipartite_signed(sg)) throw Error(ErrorKind::HypothesisViolated, "host is bipartite");
  AnchoredInstance inst;
  inst.host = sg;
  if (anchor) {
    try {
      inst.anchor = make_cycle(sg, anchor->vertices);
    } catch (const Error& err) {
      throw Error(ErrorKind::BadAnchor, std::string("anchor is not a cycle of the host: ") + err.what());
    }
    if (inst.anchor.parity != 1) throw Error(ErrorKind::BadAnchor, "anchor cycle is even");
    if (!is_induced_cycle(g, inst.anchor)) throw Error(ErrorKind::BadAnchor, "anchor cycle has a chord");
    if (!is_connected(g, g.all_vertices() & ~inst.anchor.vertex_mask())) {
      throw Error(ErrorKind::BadAnchor, "anchor cycle is separating");
    }
  } else {
    inst.anchor = nonseparating_induced_odd_cycle(sg, AvoidSpec::nothing(), true, budget);
  }
  const VertexMask c_mask = inst.anchor.vertex_mask();
  inst.h = induced_subgraph(g, g.all_vertices() & ~c_mask);
  inst.h_signed = induced_signed(sg, inst.h);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    const bool u_on = (c_mask & bit(ed.u)) != 0;
    const bool v_on = (c_mask & bit(ed.v)) != 0;
    if (u_on != v_on) inst.cross.push_back(CrossEdge{e, u_on ? ed.u : ed.v, u_on ? ed.v : ed.u});
  }
  inst.m = static_cast<int>(inst.cross.size());
  inst.t = t_value(inst.h.graph);
  return inst;
}

std::vector<GoodPair> good_pairs(const AnchoredInstance& inst) {
  std::vector<GoodPair> out;
  for (std::size_t i = 0; i < inst.cross.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.cross.size(); ++j) {
      if (inst.cross[i].on_cycle != inst.cross[j].on_cycle) out.push_back(GoodPair{inst.cross[i], inst.cross[j]});
    }
  }
  return out;
}

namespace {

// Interior of the two arcs of C from y back to x, each with its parity
// including both end edges.
struct Arc {
  std::vector<Vertex> interior;  // ordered from y towards x
  int parity = 0;
};

std::pair<Arc, Arc> arcs_between(const AnchoredInstance& inst, Vertex x, Vertex y) {
  const auto& c = inst.anchor.vertices;
  const auto len = c.size();
  const auto py = static_cast<std::size_t>(std::find(c.begin(), c.end(), y) - c.begin());
  std::pair<Arc, Arc> arcs;
  // forward from y: y, y+1, ..., x
  for (std::size_t i = py;; i = (i + 1) % len) {
    const std::size_t j = (i + 1) % len;
    arcs.first.parity ^= inst.host.parity(c[i], c[j]);
    if (c[j] == x) break;
    arcs.first.interior.push_back(c[j]);
  }
  for (std::size_t i = py;; i = (i + len - 1) % len) {
    const std::size_t j = (i + len - 1) % len;
    arcs.second.parity ^= inst.host.parity(c[i], c[j]);
    if (c[j] == x) break;
    arcs.second.interior.push_back(c[j]);
  }
  return arcs;
}

}  // namespace

BasicCycles basic_cycles(const AnchoredInstance& inst, const Budget& budget) {
  std::map<std::pair<Vertex, Vertex>, PathSet> path_cache;
  auto paths_between = [&](Vertex a, Vertex b) -> const PathSet& {
    const auto key = std::make_pair(a, b);
    auto it = path_cache.find(key);
    if (it == path_cache.end()) {
      PathSet ps;
      if (a == b) {
        ps.x = ps.y = a;
        ps.paths.push_back(Path{{a}, {}, 0, false});
      } else {
        ps = enumerate_paths(inst.h_signed, inst.to_h(a), inst.to_h(b), std::nullopt, budget);
        for (Path& p : ps.paths) {
          for (Vertex& v : p.vertices) v = inst.h.to_host[static_cast<std::size_t>(v)];
        }
      }
      it = path_cache.emplace(key, std::move(ps)).first;
    }
    return it->second;
  };

  std::vector<Cycle> odd;
  std::vector<Cycle> even;
  const auto pairs = good_pairs(inst);
  for (const GoodPair& pair : pairs) {
    const Vertex x = pair.first.on_cycle;
    const Vertex a = pair.first.off_cycle;
    const Vertex y = pair.second.on_cycle;
    const Vertex b = pair.second.off_cycle;
    const auto [arc1, arc2] = arcs_between(inst, x, y);
    const int cross_parity = inst.host.parity(pair.first.id) ^ inst.host.parity(pair.second.id);
    for (const Path& p : paths_between(a, b).paths) {
      std::vector<Vertex> base{x};
      base.insert(base.end(), p.vertices.begin(), p.vertices.end());
      base.push_back(y);
      for (const Arc* arc : {&arc1, &arc2}) {
        std::vector<Vertex> seq = base;
        seq.insert(seq.end(), arc->interior.begin(), arc->interior.end());
        Cycle cyc = make_cycle(inst.host, seq);
        if (cyc.parity != (p.parity ^ cross_parity ^ arc->parity)) {
          throw std::logic_error("basic cycle parity bookkeeping is inconsistent");
        }
        (cyc.parity ? odd : even).push_back(std::move(cyc));
      }
    }
  }
  BasicCycles out;
  out.basic = CycleSet(std::move(odd));
  out.even_shadow = CycleSet(std::move(even));
  out.good_pair_count = pairs.size();
  return out;
}

bool h_is_two_connected(const AnchoredInstance& inst) { return is_two_connected(inst.h.graph); }

int end_block_count(const AnchoredInstance& inst) {
  return static_cast<int>(block_tree(inst.h.graph).end_blocks().size());
}

StapleAssignment staple_edges(const AnchoredInstance& inst) {
  const Graph& h = inst.h.graph;
  if (h.order() < 2) throw Error(ErrorKind::HypothesisViolated, "H is a single vertex; it has no staple structure");
  if (is_two_connected(h)) throw Error(ErrorKind::HypothesisViolated, "H is 2-connected");
  StapleAssignment out;
  out.h_blocks = block_tree(h);
  auto host = [&](Vertex local) { return inst.h.to_host[static_cast<std::size_t>(local)]; };

  // Cross-edge pairs in lexicographic order of edge ids.
  auto first_pair = [&](auto&& accept) -> std::optional<std::pair<CrossEdge, CrossEdge>> {
    for (std::size_t i = 0; i < inst.cross.size(); ++i) {
      for (std::size_t j = i + 1; j < inst.cross.size(); ++j) {
        if (accept(inst.cross[i], inst.cross[j])) return std::make_pair(inst.cross[i], inst.cross[j]);
      }
    }
    return std::nullopt;
  };
  auto edge_block_pair = [&](Vertex leaf) {
    return first_pair([&](const CrossEdge& e, const CrossEdge& f) {
      return e.off_cycle == leaf && f.off_cycle == leaf && e.on_cycle != f.on_cycle;
    });
  };
  auto push = [&](int block, Vertex cut, std::optional<std::pair<CrossEdge, CrossEdge>> pair) {
    if (!pair) throw std::logic_error("no staple pair although the host is 3-connected");
    out.pairs.push_back(StaplePair{block, cut, pair->first, pair->second});
  };

  if (h.order() == 2) {
    const Vertex a = host(0);
    const Vertex b = host(1);
    push(0, b, edge_block_pair(a));
    push(0, a, edge_block_pair(b));
    return out;
  }
  for (int blk : out.h_blocks.end_blocks()) {
    const Block& block = out.h_blocks.blocks[static_cast<std::size_t>(blk)];
    const int cut_index = out.h_blocks.block_cuts[static_cast<std::size_t>(blk)].front();
    const Vertex cut = host(out.h_blocks.cut_vertices[static_cast<std::size_t>(cut_index)]);
    if (block.kind() == Block::Kind::edge) {
      const Vertex leaf = host(block.vertices[0]) == cut ? host(block.vertices[1]) : host(block.vertices[0]);
      push(blk, cut, edge_block_pair(leaf));
      continue;
    }
    VertexMask side = 0;
    for (Vertex v : block.vertices) {
      if (host(v) != cut) side |= bit(host(v));
    }
    push(blk, cut, first_pair([&](const CrossEdge& e, const CrossEdge& f) {
           return (side & bit(e.off_cycle)) && (side & bit(f.off_cycle)) && e.off_cycle != f.off_cycle &&
                  e.on_cycle != f.on_cycle;
         }));
  }
  return out;
}

BlockPathBound lemma_3_2_bound(const AnchoredInstance& inst, Vertex a, Vertex b, const Budget& budget) {
  if (a == b) throw Error(ErrorKind::SameVertex, "lemma 3.2 needs distinct vertices");
  if (!inst.host.graph().has_vertex(a) || !inst.host.graph().has_vertex(b) || inst.to_h(a) < 0 || inst.to_h(b) < 0) {
    throw Error(ErrorKind::BadParameters, "both vertices must lie in H");
  }
  const Vertex la = inst.to_h(a);
  const Vertex lb = inst.to_h(b);
  const BlockTree tree = block_tree(inst.h.graph);
  BlockPathBound out;
  out.block_path = block_path(inst.h.graph, tree, la, lb);
  out.lower_bound = 1;
  for (const BlockPathItem& item : out.block_path) {
    if (item.kind == BlockPathItem::Kind::block) {
      out.lower_bound *= static_cast<std::uint64_t>(tree.blocks[static_cast<std::size_t>(item.value)].t() + 1);
    }
  }
  out.witness_paths = enumerate_paths(inst.h_signed, la, lb, std::nullopt, budget);
  out.path_count = out.witness_paths.size();
  return out;
}

std::uint64_t lemma_3_1_bound(const AnchoredInstance& inst) {
  if (!h_is_two_connected(inst)) throw Error(ErrorKind::HypothesisViolated, "H is not 2-connected");
  return static_cast<std::uint64_t>(inst.t + 1) * static_cast<std::uint64_t>(inst.m);
}

std::int64_t lemma_3_3_bound(const AnchoredInstance& inst) {
  const int k = end_block_count(inst);
  if (k < 2 || h_is_two_connected(inst)) throw Error(ErrorKind::HypothesisViolated, "H has fewer than two end-blocks");
  return static_cast<std::int64_t>(inst.m - k) * (inst.t + k) + (k + 1) / 2;
}

}  // namespace critgraph
