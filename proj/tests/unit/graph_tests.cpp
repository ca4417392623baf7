#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "skewsim/errors.hpp"
#include "skewsim/graph.hpp"
#include "skewsim/graphgen.hpp"

using namespace skewsim;

TEST_CASE("construction validates invariants") {
  CHECK_NOTHROW(OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK_THROWS_AS(OrientedGraph(2, {{0, 0}}), ParameterError);         // loop
  CHECK_THROWS_AS(OrientedGraph(2, {{0, 1}, {1, 0}}), ParameterError); // digon
  CHECK_THROWS_AS(OrientedGraph(2, {{0, 1}, {0, 1}}), ParameterError); // repeat
  CHECK_THROWS_AS(OrientedGraph(2, {{0, 2}}), ParameterError);         // out of range
  CHECK_THROWS_AS(OrientedGraph(2, {{-1, 0}}), ParameterError);
}

TEST_CASE("arcs are canonically sorted") {
  OrientedGraph g(4, {{3, 1}, {0, 2}, {1, 0}});
  CHECK(g.arcs() == std::vector<Arc>{{0, 2}, {1, 0}, {3, 1}});
}

TEST_CASE("degree sequence") {
  CHECK(degree_sequence(OrientedGraph(3, {})) ==
        std::vector<std::pair<std::int32_t, std::int32_t>>{{0, 0}, {0, 0}, {0, 0}});
  CHECK(degree_sequence(OrientedGraph(2, {{0, 1}})) ==
        std::vector<std::pair<std::int32_t, std::int32_t>>{{0, 1}, {1, 0}});
  CHECK(degree_sequence(OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}})) ==
        std::vector<std::pair<std::int32_t, std::int32_t>>{{1, 1}, {1, 1}, {1, 1}});
}

TEST_CASE("degree sums equal the arc count") {
  const OrientedGraph g = sample_gnp_oriented({40, 0.3, 11});
  std::int64_t in = 0, out = 0;
  for (auto [din, dout] : degree_sequence(g)) {
    in += din;
    out += dout;
  }
  CHECK(in == g.arc_count());
  CHECK(out == g.arc_count());
}

TEST_CASE("edge list format") {
  CHECK(write_edge_list(OrientedGraph(2, {{0, 1}})) == "2 1\n0 1\n");
  CHECK(write_edge_list(OrientedGraph(4, {})) == "4 0\n");
}

TEST_CASE("round trip is the identity") {
  const OrientedGraph g = sample_gnp_oriented({50, 0.2, 3});
  CHECK(read_edge_list(write_edge_list(g)) == g);
  const OrientedGraph empty(7, {});
  CHECK(read_edge_list(write_edge_list(empty)) == empty);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      read_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1L;
  };
  CHECK(line_of("2 1\n0 0\n") == 2);   // self-loop
  CHECK(line_of("nonsense\n") == 1);   // malformed header
  CHECK(line_of("2 1\n0 5\n") == 2);   // out of range
  CHECK(line_of("2 1\nx y\n") == 2);   // malformed arc
  CHECK(line_of("3 2\n0 1\n") == 3);   // truncated body
  CHECK(line_of("3 1\n0 1\njunk\n") == 3);
  CHECK(line_of("2 2\n0 1\n1 0\n") > 0);  // digon
  CHECK(line_of("") == 1);
  CHECK_THROWS_AS(read_edge_list("2 1\n0 1 9\n"), ParseError);  // trailing junk on a line
}

TEST_CASE("windows line endings are tolerated") {
  CHECK(read_edge_list("2 1\r\n0 1\r\n") == OrientedGraph(2, {{0, 1}}));
}

TEST_CASE("round trip through streams") {
  const OrientedGraph g = sample_gnp_oriented({12, 0.5, 9});
  std::stringstream buf;
  write_edge_list(g, buf);
  CHECK(read_edge_list(buf) == g);
}
