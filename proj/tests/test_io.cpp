#include <doctest.h>

#include <sstream>

#include "critgraph/error.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/io.hpp"

using namespace critgraph;

TEST_CASE("graph6 known encodings") {
  CHECK(io::to_graph6(complete_graph(4)) == "C~");
  CHECK(io::to_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(io::to_graph6(Graph(1, std::vector<Edge>{})) == "@");
  CHECK(io::from_graph6("C~") == complete_graph(4));
  CHECK(io::from_graph6(">>graph6<<C~\n") == complete_graph(4));
}

TEST_CASE("graph6 round trip over small graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const std::string& code : graphs_of_order(n)) {
      const Graph g = io::from_graph6(code);
      CHECK(g.order() == n);
      CHECK(io::to_graph6(g) == code);
    }
  }
  const Graph big = wheel(40, 3).graph;
  CHECK(io::from_graph6(io::to_graph6(big)) == big);
}

TEST_CASE("graph6 rejects malformed lines with their line number") {
  std::istringstream in("C~\nC\nDQc\n");
  io::Graph6Reader reader(in);
  CHECK(reader.next().has_value());
  try {
    reader.next();
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(io::from_graph6("C\x01"), ParseError);
  CHECK_THROWS_AS(io::from_graph6("C~~"), ParseError);  // trailing data
  CHECK_THROWS_AS(io::from_graph6("B@"), ParseError);   // nonzero padding bits
}

TEST_CASE("edge lists, plain and signed") {
  std::istringstream in("4 3\n0 1\n1 2\n2 3\n\n3 3\n0 1 1\n1 2 0\n0 2 1\n");
  const auto graphs = io::read_edge_lists(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0].is_plain());
  CHECK(graphs[0].graph() == path_graph(4));
  CHECK(graphs[1].parity(1, 2) == 0);
  CHECK(graphs[1].parity(0, 2) == 1);

  std::istringstream round(io::write_signed_edge_list(graphs[1]));
  const auto again = io::read_edge_lists(round);
  REQUIRE(again.size() == 1);
  CHECK(again[0].parities() == graphs[1].parities());
}

TEST_CASE("edge list errors") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      io::read_edge_lists(in);
    } catch (const ParseError& err) {
      return err.line();
    }
    return 0;
  };
  CHECK(line_of("3 2\n0 1\n1 5\n") == 3);      // endpoint out of range
  CHECK(line_of("3 2\n0 1 1\n1 2\n") == 3);    // mixed column counts
  CHECK(line_of("3 2\n0 1\n") == 3);           // missing edge, reported at end of input
  CHECK(line_of("3 1\n0 1 2\n") == 2);         // parity not 0/1
  CHECK(line_of("x 1\n") == 1);
  CHECK(line_of("3 1\n0 0\n") == 2);           // loop
}

TEST_CASE("automatic format detection") {
  std::istringstream g6("C~\nIheA@GUAo\n");
  const auto a = io::read_graphs(g6);
  REQUIRE(a.size() == 2);
  CHECK(a[1].graph() == petersen_graph());
  std::istringstream edges("3 3\n0 1\n1 2\n0 2\n");
  const auto b = io::read_graphs(edges);
  REQUIRE(b.size() == 1);
  CHECK(b[0].graph() == complete_graph(3));
  CHECK(io::parse_format("g6") == io::Format::graph6);
  CHECK(io::parse_format("edges") == io::Format::edge_list);
  CHECK_THROWS_AS(io::parse_format("xml"), Error);
}
