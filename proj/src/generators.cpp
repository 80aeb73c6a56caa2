#include "critgraph/generators.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <unordered_set>

#include "critgraph/critical.hpp"
#include "critgraph/error.hpp"
#include "critgraph/io.hpp"

namespace critgraph {

Wheel wheel(int n, int d) {
  const int rim = n - d;
  if (rim < 3 || d < 1) throw Error(ErrorKind::BadParameters, "wheel needs n - d >= 3 and d >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < rim; ++i) edges.emplace_back(i, (i + 1) % rim);
  for (int h = rim; h < n; ++h) {
    for (int i = 0; i < rim; ++i) edges.emplace_back(h, i);
    for (int j = h + 1; j < n; ++j) edges.emplace_back(h, j);
  }
  return Wheel{Graph(n, std::move(edges)), rim % 2 == 1};
}

Section8Graph section8_construction(int n) {
  if (n < 2) throw Error(ErrorKind::BadParameters, "construction needs n >= 2");
  const int rim = 2 * n;
  const Vertex apex = rim;
  std::vector<Edge> edges;
  for (int i = 0; i < rim; ++i) edges.emplace_back(i, (i + 1) % rim);
  for (int i = 0; i < rim; ++i) edges.emplace_back(apex, i);
  Graph g(rim + 1, std::move(edges));
  std::vector<std::uint8_t> parity(static_cast<std::size_t>(g.size()), 1);
  for (Vertex u = 3; u < rim; u += 2) parity[static_cast<std::size_t>(g.edge_id(apex, u))] = 0;
  const EdgeId special_edge = g.edge_id(apex, 1);
  return Section8Graph{SignedGraph(std::move(g), std::move(parity)), apex, 1, special_edge};
}

std::optional<Section8Graph> match_section8(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  const int n = g.order();
  if (n < 5 || n % 2 == 0) return std::nullopt;
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) != n - 1) continue;
    const VertexMask rim = g.all_vertices() & ~bit(x);
    bool cycle = is_connected(g, rim);
    for (Vertex v = 0; v < n && cycle; ++v) {
      if (v != x && std::popcount(g.neighbor_mask(v) & rim) != 2) cycle = false;
    }
    if (!cycle) continue;
    bool rim_odd = true;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (!g.edge(e).touches(x) && sg.parity(e) != 1) rim_odd = false;
    }
    if (!rim_odd) continue;
    // Two-color the rim by walking it.
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    const Vertex start = x == 0 ? 1 : 0;
    Vertex prev = -1;
    Vertex cur = start;
    int colour = 0;
    do {
      side[static_cast<std::size_t>(cur)] = colour;
      colour ^= 1;
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (w != x && w != prev) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
    } while (cur != start);
    for (int a_side = 0; a_side < 2; ++a_side) {
      bool ok = true;
      std::vector<Vertex> odd_b;
      for (Vertex v = 0; v < n && ok; ++v) {
        if (v == x) continue;
        const int p = sg.parity(x, v);
        if (side[static_cast<std::size_t>(v)] == a_side) {
          ok = p == 1;
        } else if (p == 1) {
          odd_b.push_back(v);
        }
      }
      if (ok && odd_b.size() == 1) return Section8Graph{sg, x, odd_b[0], g.edge_id(x, odd_b[0])};
    }
  }
  return std::nullopt;
}

Graph hajos_join(const Graph& g1, std::pair<Vertex, Vertex> e1, const Graph& g2, std::pair<Vertex, Vertex> e2) {
  const auto [x1, y1] = e1;
  const auto [x2, y2] = e2;
  const EdgeId drop1 = g1.edge_id(x1, y1);
  const EdgeId drop2 = g2.edge_id(x2, y2);
  const int n1 = g1.order();
  auto map2 = [&](Vertex v) { return v == x2 ? x1 : n1 + (v < x2 ? v : v - 1); };
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g1.size(); ++e) {
    if (e != drop1) edges.push_back(g1.edge(e));
  }
  for (EdgeId e = 0; e < g2.size(); ++e) {
    if (e != drop2) edges.emplace_back(map2(g2.edge(e).u), map2(g2.edge(e).v));
  }
  edges.emplace_back(y1, map2(y2));
  return Graph(n1 + g2.order() - 1, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::BadParameters, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, std::move(edges));
}

// Canonical labeling ---------------------------------------------------------

namespace {

using Cells = std::vector<std::vector<Vertex>>;

VertexMask cell_mask(const std::vector<Vertex>& cell) {
  VertexMask m = 0;
  for (Vertex v : cell) m |= bit(v);
  return m;
}

// Refines an ordered partition until every cell is equitable with respect to
// every other cell. Splits are ordered by neighbor count, so the result is
// label-invariant.
void refine(std::span<const VertexMask> adj, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexMask splitter = cell_mask(cells[s]);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::vector<std::pair<int, Vertex>> keyed;
        for (Vertex v : cells[c]) {
          keyed.emplace_back(std::popcount(adj[static_cast<std::size_t>(v)] & splitter), v);
        }
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Cells parts;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
          parts.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(std::span<const VertexMask> adj) : adj_(adj) {}

  void run() {
    Cells cells(1);
    for (Vertex v = 0; v < static_cast<Vertex>(adj_.size()); ++v) cells[0].push_back(v);
    if (adj_.empty()) return;
    descend(std::move(cells));
  }

  const std::vector<VertexMask>& rows() const { return best_rows_; }
  const std::vector<Vertex>& order() const { return best_order_; }

 private:
  void descend(Cells cells) {
    refine(adj_, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      bool twin = false;
      for (Vertex w : tried) {
        const VertexMask a = adj_[static_cast<std::size_t>(v)] & ~bit(w);
        const VertexMask b = adj_[static_cast<std::size_t>(w)] & ~bit(v);
        if (a == b) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);
      Cells next = cells;
      std::vector<Vertex> rest;
      for (Vertex w : cells[target]) {
        if (w != v) rest.push_back(w);
      }
      next[target] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
      descend(std::move(next));
    }
  }

  void leaf(const Cells& cells) {
    const std::size_t n = adj_.size();
    std::vector<Vertex> order;
    order.reserve(n);
    for (const auto& c : cells) order.push_back(c.front());
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<VertexMask> rows(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (VertexMask m = adj_[static_cast<std::size_t>(order[i])]; m; m &= m - 1) {
        rows[i] |= bit(pos[static_cast<std::size_t>(std::countr_zero(m))]);
      }
    }
    if (best_rows_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = std::move(order);
    }
  }

  std::span<const VertexMask> adj_;
  std::vector<VertexMask> best_rows_;
  std::vector<Vertex> best_order_;
};

std::string rows_to_graph6(const std::vector<VertexMask>& rows) {
  const int n = static_cast<int>(rows.size());
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((rows[static_cast<std::size_t>(i)] >> j) & 1 ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

std::vector<VertexMask> canonical_rows(std::span<const VertexMask> adj) {
  CanonicalSearch search(adj);
  search.run();
  return search.rows();
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalSearch search(g.adjacency());
  search.run();
  CanonicalForm out;
  const auto& order = search.order();
  out.label.assign(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < order.size(); ++i) out.label[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(out.label[static_cast<std::size_t>(e.u)], out.label[static_cast<std::size_t>(e.v)]);
  }
  out.graph = Graph(g.order(), std::move(edges));
  out.graph6 = io::to_graph6(out.graph);
  return out;
}

std::string canonical_graph6(const Graph& g) {
  if (g.order() == 0) return io::to_graph6(g);
  if (g.order() > 62) return canonical_form(g).graph6;
  return rows_to_graph6(canonical_rows(g.adjacency()));
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_graph6(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Corpus ---------------------------------------------------------------------

Family parse_family(const std::string& name) {
  if (name == "all" || name == "connected" || name == "all_connected") return Family::all_connected;
  if (name == "4critical" || name == "four_critical" || name == "4-critical") return Family::four_critical;
  if (name == "3connected" || name == "three_connected" || name == "3-connected") return Family::three_connected;
  if (name == "3connected_nonbip" || name == "three_connected_nonbipartite" || name == "3-connected-nonbipartite") {
    return Family::three_connected_nonbipartite;
  }
  if (name == "kcritical" || name == "k_critical" || name == "k-critical") return Family::k_critical;
  throw Error(ErrorKind::BadParameters, "unknown family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::all_connected: return "all_connected";
    case Family::four_critical: return "four_critical";
    case Family::three_connected: return "three_connected";
    case Family::three_connected_nonbipartite: return "three_connected_nonbipartite";
    case Family::k_critical: return "k_critical";
  }
  return "unknown";
}

bool family_member(const Graph& g, const CorpusSpec& spec) {
  if (g.order() == 0 || !is_connected(g)) return false;
  switch (spec.family) {
    case Family::all_connected: return true;
    case Family::four_critical: return g.order() >= 4 && g.min_degree() >= 3 && is_k_critical(g, 4);
    case Family::three_connected: return g.order() >= 4 && is_k_connected(g, 3);
    case Family::three_connected_nonbipartite:
      return g.order() >= 4 && is_k_connected(g, 3) && !is_bipartite_signed(SignedGraph::lift(g));
    case Family::k_critical:
      return g.order() >= spec.k && g.min_degree() >= spec.k - 1 && is_k_critical(g, spec.k);
  }
  return false;
}

std::vector<std::string> graphs_of_order(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "order must be positive");
  if (n > 10) throw Error(ErrorKind::ScaleGuard, "exhaustive generation is limited to 10 vertices");
  static std::mutex mutex;
  static std::map<int, std::vector<std::string>> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) cache[1] = {rows_to_graph6({0})};
  for (int m = static_cast<int>(cache.rbegin()->first) + 1; m <= n; ++m) {
    std::unordered_set<std::string> seen;
    for (const std::string& code : cache[m - 1]) {
      const Graph base = io::from_graph6(code);
      std::vector<VertexMask> rows(base.adjacency().begin(), base.adjacency().end());
      rows.push_back(0);
      const Vertex fresh = m - 1;
      for (VertexMask s = 0; s < (VertexMask{1} << fresh); ++s) {
        std::vector<VertexMask> next = rows;
        next[static_cast<std::size_t>(fresh)] = s;
        for (Vertex v = 0; v < fresh; ++v) {
          if (s & bit(v)) next[static_cast<std::size_t>(v)] |= bit(fresh);
        }
        seen.insert(rows_to_graph6(canonical_rows(next)));
      }
    }
    std::vector<std::string> level(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
    cache[m] = std::move(level);
  }
  return cache[n];
}

void for_each_corpus_graph(const CorpusSpec& spec, const std::function<void(const Graph&)>& visit) {
  if (!spec.graph6_source.empty()) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (spec.graph6_source != "-") {
      file.open(spec.graph6_source);
      if (!file) throw Error(ErrorKind::BadParameters, "cannot open '" + spec.graph6_source + "'");
      in = &file;
    }
    io::Graph6Reader reader(*in);
    while (auto g = reader.next()) {
      if (spec.max_n > 0 && g->order() > spec.max_n) continue;
      if (family_member(*g, spec)) visit(*g);
    }
    return;
  }
  if (spec.max_n < 1) throw Error(ErrorKind::BadParameters, "max_n must be positive");
  if (spec.max_n > 10) throw Error(ErrorKind::ScaleGuard, "internal enumeration is limited to max_n <= 10");
  for (int n = 1; n <= spec.max_n; ++n) {
    for (const std::string& code : graphs_of_order(n)) {
      const Graph g = io::from_graph6(code);
      if (family_member(g, spec)) visit(g);
    }
  }
}

std::vector<Graph> corpus(const CorpusSpec& spec) {
  std::vector<Graph> out;
  for_each_corpus_graph(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// Anchored fixtures ------------------------------------------------------------

AnchoredFixture anchored_fixture(int anchor_length, const Graph& h, const std::vector<std::vector<int>>& attachments,
                                 std::string name) {
  if (anchor_length < 3 || anchor_length % 2 == 0) {
    throw Error(ErrorKind::BadParameters, name + ": anchor length must be odd and at least 3");
  }
  if (attachments.size() != static_cast<std::size_t>(h.order())) {
    throw Error(ErrorKind::BadParameters, name + ": one attachment list per H vertex is required");
  }
  if (h.order() == 0 || !is_connected(h)) throw Error(ErrorKind::BadParameters, name + ": H must be connected");
  const int n = anchor_length + h.order();
  std::vector<Edge> edges;
  for (int i = 0; i < anchor_length; ++i) edges.emplace_back(i, (i + 1) % anchor_length);
  for (const Edge& e : h.edges()) edges.emplace_back(anchor_length + e.u, anchor_length + e.v);
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    for (int p : attachments[i]) {
      if (p < 0 || p >= anchor_length) throw Error(ErrorKind::BadParameters, name + ": attachment out of range");
      edges.emplace_back(anchor_length + static_cast<int>(i), p);
    }
  }
  Graph g(n, std::move(edges));
  if (!is_k_connected(g, 3)) throw Error(ErrorKind::BadParameters, name + ": host is not 3-connected");
  SignedGraph host = SignedGraph::lift(std::move(g));
  std::vector<Vertex> seq(static_cast<std::size_t>(anchor_length));
  for (int i = 0; i < anchor_length; ++i) seq[static_cast<std::size_t>(i)] = i;
  Cycle anchor = make_cycle(host, seq);
  return AnchoredFixture{std::move(host), std::move(anchor), std::move(name)};
}

AnchoredFixture two_connected_fixture(int anchor_length, const Graph& h, int per_vertex, std::string name) {
  if (per_vertex < 1 || per_vertex > anchor_length) throw Error(ErrorKind::BadParameters, name + ": bad per_vertex");
  std::vector<std::vector<int>> att(static_cast<std::size_t>(h.order()));
  for (int i = 0; i < h.order(); ++i) {
    for (int j = 0; j < per_vertex; ++j) att[static_cast<std::size_t>(i)].push_back((i * per_vertex + j) % anchor_length);
  }
  return anchored_fixture(anchor_length, h, att, std::move(name));
}

namespace {

// Appends a gadget's edges to `edges` with `first` as its attachment vertex
// and fresh vertices from `next`. Returns the gadget's last fresh vertex.
Vertex add_gadget(Gadget gadget, Vertex first, Vertex& next, std::vector<Edge>& edges) {
  switch (gadget) {
    case Gadget::edge: {
      const Vertex a = next++;
      edges.emplace_back(first, a);
      return a;
    }
    case Gadget::triangle: {
      const Vertex a = next++;
      const Vertex b = next++;
      edges.emplace_back(first, a);
      edges.emplace_back(first, b);
      edges.emplace_back(a, b);
      return b;
    }
    case Gadget::k4: {
      const Vertex a = next++;
      const Vertex b = next++;
      const Vertex c = next++;
      for (auto [x, y] : {std::pair{first, a}, {first, b}, {first, c}, {a, b}, {a, c}, {b, c}}) edges.emplace_back(x, y);
      return c;
    }
    case Gadget::c4: {
      const Vertex a = next++;
      const Vertex b = next++;
      const Vertex c = next++;
      for (auto [x, y] : {std::pair{first, a}, {a, b}, {b, c}, {c, first}}) edges.emplace_back(x, y);
      return b;
    }
  }
  return first;
}

AnchoredFixture gadget_fixture(int anchor_length, const Graph& h, const std::vector<int>& counts, std::string name) {
  std::vector<std::vector<int>> att(static_cast<std::size_t>(h.order()));
  int cursor = 0;
  for (int i = 0; i < h.order(); ++i) {
    for (int j = 0; j < counts[static_cast<std::size_t>(i)]; ++j) {
      att[static_cast<std::size_t>(i)].push_back((cursor + j) % anchor_length);
    }
    cursor += counts[static_cast<std::size_t>(i)];
  }
  return anchored_fixture(anchor_length, h, att, std::move(name));
}

}  // namespace

AnchoredFixture end_block_fixture(int anchor_length, const std::vector<Gadget>& gadgets, int per_vertex,
                                  std::string name) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (Gadget gadget : gadgets) add_gadget(gadget, 0, next, edges);
  const Graph h(next, std::move(edges));
  std::vector<int> counts(static_cast<std::size_t>(next), per_vertex);
  counts[0] = 1;
  return gadget_fixture(anchor_length, h, counts, std::move(name));
}

AnchoredFixture chain_fixture(int anchor_length, const std::vector<Gadget>& gadgets, int per_vertex,
                              std::string name) {
  std::vector<Edge> edges;
  Vertex next = 1;
  Vertex joint = 0;
  std::vector<Vertex> cuts;
  for (std::size_t i = 0; i < gadgets.size(); ++i) {
    joint = add_gadget(gadgets[i], joint, next, edges);
    if (i + 1 < gadgets.size()) cuts.push_back(joint);
  }
  const Graph h(next, std::move(edges));
  std::vector<int> counts(static_cast<std::size_t>(next), per_vertex);
  for (Vertex c : cuts) counts[static_cast<std::size_t>(c)] = 1;
  return gadget_fixture(anchor_length, h, counts, std::move(name));
}

}  // namespace critgraph
