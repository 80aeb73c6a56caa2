#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "critgraph/cycles.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

struct Wheel {
  Graph graph;
  bool odd = false;  // rim length n - d is odd
};

/// W(n,d): rim C_{n-d} on vertices 0..n-d-1 joined to K_d on the rest.
/// Throws Error(BadParameters) unless n - d >= 3 and d >= 1.
Wheel wheel(int n, int d);

struct Section8Graph {
  SignedGraph graph;
  Vertex apex = 0;      // x
  Vertex special = 0;   // b
  EdgeId special_edge = 0;  // xb
};

/// Apex over C_{2n}: rim vertices 0..2n-1 (A = even, B = odd, b = 1), apex
/// 2n. Rim edges and apex edges to A and b are odd; the other apex edges are
/// even. Throws Error(BadParameters) for n < 2.
Section8Graph section8_construction(int n);

/// Recognizes the apex-over-even-cycle parity pattern above up to relabeling.
std::optional<Section8Graph> match_section8(const SignedGraph& sg);

/// Hajos join of g1 at edge x1y1 and g2 at edge x2y2 (each pair given as
/// (x, y)): delete both edges, identify x1 with x2, add y1y2. g2's vertices
/// follow g1's with x2 merged into x1. Throws Error(EdgeAbsent).
Graph hajos_join(const Graph& g1, std::pair<Vertex, Vertex> e1, const Graph& g2, std::pair<Vertex, Vertex> e2);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph complete_bipartite(int a, int b);

// Canonical labeling ---------------------------------------------------------

struct CanonicalForm {
  Graph graph;                 // relabeled canonical representative
  std::vector<Vertex> label;   // host vertex -> canonical label
  std::string graph6;
};

/// Canonical form by equitable refinement plus individualization search,
/// with twin pruning.
CanonicalForm canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// 64-bit FNV-1a of the canonical graph6 string, as 16 hex digits.
std::string graph_hash(const Graph& g);

// Corpus ---------------------------------------------------------------------

enum class Family {
  all_connected,
  four_critical,
  three_connected,
  three_connected_nonbipartite,
  k_critical,
};

Family parse_family(const std::string& name);
std::string to_string(Family family);

struct CorpusSpec {
  int max_n = 0;
  Family family = Family::four_critical;
  int k = 4;  // for Family::k_critical
  /// Empty for internal enumeration; otherwise a graph6 file ("-" = stdin).
  std::string graph6_source;
};

bool family_member(const Graph& g, const CorpusSpec& spec);

/// All graphs on exactly n vertices up to isomorphism, as canonical graph6
/// strings in sorted order, grown from order n-1 by adding a vertex with
/// every neighborhood and deduplicating canonical forms.
std::vector<std::string> graphs_of_order(int n);

/// Streams the corpus in order (vertex count, canonical graph6). Internal
/// enumeration is limited to max_n <= 10 (Error(ScaleGuard)).
void for_each_corpus_graph(const CorpusSpec& spec, const std::function<void(const Graph&)>& visit);
std::vector<Graph> corpus(const CorpusSpec& spec);

// Anchored fixtures ------------------------------------------------------------

struct AnchoredFixture {
  SignedGraph host;
  Cycle anchor;
  std::string name;
};

/// Host built from an odd anchor cycle C_len on vertices 0..len-1 and a graph
/// H placed on len..len+|H|-1; each H vertex i is joined to the anchor
/// positions listed in attachments[i]. Throws Error(BadParameters) if the
/// result is not 3-connected or an attachment is out of range.
AnchoredFixture anchored_fixture(int anchor_length, const Graph& h,
                                 const std::vector<std::vector<int>>& attachments, std::string name);

/// Anchor C_len plus 2-connected H, each H vertex joined to `per_vertex`
/// consecutive anchor positions, starting positions spread round-robin.
AnchoredFixture two_connected_fixture(int anchor_length, const Graph& h, int per_vertex, std::string name);

enum class Gadget { edge, triangle, k4, c4 };

/// Anchor C_len plus H made of end-block gadgets hung from a hub vertex (the
/// common cut vertex). Non-hub gadget vertices get `per_vertex` anchor
/// neighbors, the hub gets one.
AnchoredFixture end_block_fixture(int anchor_length, const std::vector<Gadget>& gadgets, int per_vertex,
                                  std::string name);

/// Anchor C_len plus H a chain of gadgets: consecutive gadgets share a cut
/// vertex, so the two ends of the chain are the end-blocks.
AnchoredFixture chain_fixture(int anchor_length, const std::vector<Gadget>& gadgets, int per_vertex,
                              std::string name);

}  // namespace critgraph
