#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <random>
#include <sstream>

#include "gridspectra/graph_io.hpp"
#include "oracles.hpp"

using namespace gridspectra;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("edge list parsing", "[io]") {
  const Graph p3 = parse("3 2\n0 1\n1 2\n");
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.adjacent(0, 1));
  CHECK(p3.adjacent(1, 2));
  CHECK_FALSE(p3.adjacent(0, 2));

  CHECK(parse("3 1\n2 0\n\n\n").adjacent(0, 2));
  CHECK(parse("0 0\n").order() == 0);
}

TEST_CASE("edge list errors name the line", "[io]") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("3\n") == 1);
  CHECK(parse_error_line("x 2\n") == 1);
  CHECK(parse_error_line("3 2\n0 1\n1 3\n") == 3);   // index >= n
  CHECK(parse_error_line("3 2\n0 1\n1 0\n") == 3);   // duplicate
  CHECK(parse_error_line("3 1\n2 2\n") == 2);        // loop
  CHECK(parse_error_line("3 2\n0 1\n") == 3);        // missing edge
  CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);   // extra edge
  CHECK(parse_error_line("3 1\n0 -1\n") == 2);
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
  CHECK(parse_error_line("3 4\n") == 1);             // more edges than pairs
}

TEST_CASE("edge list round trip", "[io]") {
  std::mt19937_64 rng(3);
  const auto dir = std::filesystem::temp_directory_path() / "gridspectra_io_test";
  std::filesystem::create_directories(dir);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = oracle::random_graph(static_cast<std::size_t>(trial), 0.3, rng);
    const auto path = (dir / ("g" + std::to_string(trial) + ".el")).string();
    write_graph(g, path);
    const Graph back = read_graph(path);
    REQUIRE(back == g);
    // Canonical files are reproduced byte for byte.
    REQUIRE(to_edge_list(back) == to_edge_list(g));
  }
  std::filesystem::remove_all(dir);
  CHECK_THROWS(read_graph("/nonexistent/path/graph.el"));
}

TEST_CASE("graph6 decoding of hand-decoded records", "[io]") {
  // D?{ : n = 5, bits 000000 111100 -> edges (0,4),(1,4),(2,4),(3,4).
  const Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.size() == 4);
  for (Vertex i = 0; i < 4; ++i) CHECK(star.adjacent(i, 4));

  CHECK(parse_graph6("A_") == build_complete(2));
  CHECK(parse_graph6("Bw") == build_complete(3));
  CHECK(parse_graph6("C~") == build_complete(4));
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("?").order() == 0);
  // C4 = 0-1-3-2-0: bits (0,1)=1 (0,2)=1 (1,2)=0 (0,3)=0 (1,3)=1 (2,3)=1 -> 110011 = 51.
  CHECK(parse_graph6(">>graph6<<Cr\n") == build_grid(2));
}

TEST_CASE("graph6 decoding matches an independent encoder", "[io]") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {0, 1, 2, 5, 12, 62, 63, 64, 100}) {
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const std::string enc = oracle::graph6_encode(g);
    REQUIRE(parse_graph6(enc) == g);
  }
}

TEST_CASE("graph6 errors", "[io]") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);      // truncated
  CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);    // trailing
  CHECK_THROWS_AS(parse_graph6("D? "), ParseError);     // byte below 63
  CHECK_THROWS_AS(parse_graph6("~~~~~~~~"), ParseError);  // n = 2^36 - 1, over the order limit
}
