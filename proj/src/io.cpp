#include "critgraph/io.hpp"

#include <istream>
#include <sstream>

#include "critgraph/error.hpp"

namespace critgraph::io {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

bool is_integer_line(std::string_view s) {
  bool any = false;
  for (char c : s) {
    if (c == ' ' || c == '\t') continue;
    if (c < '0' || c > '9') {
      if (c != '-') return false;
    }
    any = true;
  }
  return any;
}

std::vector<long long> split_integers(std::string_view s, std::size_t line_no) {
  std::vector<long long> out;
  std::istringstream in{std::string(s)};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line_no, "expected an integer, got '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int used = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text, std::size_t line_no) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError(line_no, "empty graph6 record");
  for (char c : text) {
    if (c < kBias || c > 126) {
      throw ParseError(line_no, "invalid graph6 character code " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))));
    }
  }
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError(line_no, "unsupported or truncated graph6 size field");
    n = (static_cast<long long>(text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw ParseError(line_no, "graph has " + std::to_string(n) + " vertices; limit is " + std::to_string(kMaxVertices));
  }
  const long long bits = n * (n - 1) / 2;
  const auto need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need) {
    throw ParseError(line_no, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(need));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - kBias;
      if (byte & (32 >> (k % 6))) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError(line_no, "nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::optional<Graph> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    std::string_view view = trim(line);
    if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty()) continue;
    return from_graph6(view, line_);
  }
  return std::nullopt;
}

std::vector<Graph> read_graph6_all(std::istream& in) {
  Graph6Reader reader(in);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<SignedGraph> read_edge_lists(std::istream& in) {
  std::vector<SignedGraph> out;
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& view) {
    while (std::getline(in, line)) {
      ++line_no;
      view = trim(line);
      if (!view.empty()) return true;
    }
    return false;
  };
  std::string_view view;
  while (next_line(view)) {
    const auto header = split_integers(view, line_no);
    if (header.size() != 2) throw ParseError(line_no, "edge-list header must be \"n m\"");
    const long long n = header[0];
    const long long m = header[1];
    if (n < 0 || m < 0) throw ParseError(line_no, "negative vertex or edge count");
    if (n > kMaxVertices) throw ParseError(line_no, "vertex count exceeds " + std::to_string(kMaxVertices));
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> signs;
    int columns = 0;
    for (long long i = 0; i < m; ++i) {
      if (!next_line(view)) throw ParseError(line_no + 1, "unexpected end of input: expected " + std::to_string(m) + " edges");
      const auto row = split_integers(view, line_no);
      if (row.size() != 2 && row.size() != 3) throw ParseError(line_no, "edge line must be \"u v\" or \"u v p\"");
      if (columns == 0) columns = static_cast<int>(row.size());
      if (static_cast<int>(row.size()) != columns) throw ParseError(line_no, "mixed plain and signed edge lines");
      const long long u = row[0];
      const long long v = row[1];
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "endpoint out of range [0, n)");
      if (u == v) throw ParseError(line_no, "loop edges are not allowed");
      int p = 1;
      if (columns == 3) {
        if (row[2] != 0 && row[2] != 1) throw ParseError(line_no, "parity must be 0 or 1");
        p = static_cast<int>(row[2]);
      }
      const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
      for (const Edge& seen : edges) {
        if (seen == e) throw ParseError(line_no, "duplicate edge");
      }
      edges.push_back(e);
      signs.emplace_back(e, p);
    }
    Graph g(static_cast<int>(n), edges);
    std::vector<std::uint8_t> parity(static_cast<std::size_t>(g.size()), 1);
    for (const auto& [e, p] : signs) parity[static_cast<std::size_t>(g.edge_id(e.u, e.v))] = static_cast<std::uint8_t>(p);
    out.emplace_back(std::move(g), std::move(parity));
  }
  return out;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string write_signed_edge_list(const SignedGraph& sg) {
  std::ostringstream out;
  out << sg.order() << ' ' << sg.size() << '\n';
  for (EdgeId e = 0; e < sg.size(); ++e) {
    out << sg.graph().edge(e).u << ' ' << sg.graph().edge(e).v << ' ' << sg.parity(e) << '\n';
  }
  return out.str();
}

Format parse_format(std::string_view name) {
  if (name == "auto") return Format::automatic;
  if (name == "g6" || name == "graph6") return Format::graph6;
  if (name == "edges" || name == "edgelist") return Format::edge_list;
  throw Error(ErrorKind::BadParameters, "unknown input format '" + std::string(name) + "'");
}

std::vector<SignedGraph> read_graphs(std::istream& in, Format format) {
  if (format == Format::automatic) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::istringstream probe(text);
    std::string line;
    format = Format::graph6;
    while (std::getline(probe, line)) {
      const auto view = trim(line);
      if (view.empty()) continue;
      if (is_integer_line(view)) format = Format::edge_list;
      break;
    }
    std::istringstream replay(text);
    return read_graphs(replay, format);
  }
  if (format == Format::edge_list) return read_edge_lists(in);
  std::vector<SignedGraph> out;
  for (Graph& g : read_graph6_all(in)) out.push_back(SignedGraph::lift(std::move(g)));
  return out;
}

}  // namespace critgraph::io
