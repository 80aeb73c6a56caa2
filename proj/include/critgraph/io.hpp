#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph::io {

std::string to_graph6(const Graph& g);
/// Decodes one graph6 line (trailing newline tolerated). Throws ParseError
/// tagged with `line_no`.
Graph from_graph6(std::string_view text, std::size_t line_no = 1);

/// Streams graph6 lines, skipping blank lines and an optional ">>graph6<<"
/// header prefix.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}
  std::optional<Graph> next();
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<Graph> read_graph6_all(std::istream& in);

/// Edge list: header "n m", then m lines "u v" (plain, lifted to parity 1)
/// or "u v p" with p in {0,1}. Several graphs may follow one another.
std::vector<SignedGraph> read_edge_lists(std::istream& in);
std::string write_edge_list(const Graph& g);
std::string write_signed_edge_list(const SignedGraph& sg);

enum class Format { automatic, graph6, edge_list };
Format parse_format(std::string_view name);

/// Reads every graph in the stream. `automatic` picks edge_list when the
/// first non-blank line is made of integers, graph6 otherwise.
std::vector<SignedGraph> read_graphs(std::istream& in, Format format = Format::automatic);

}  // namespace critgraph::io
