#include <doctest.h>

#include <random>
#include <sstream>

#include "gmm/io.hpp"
#include "oracles.hpp"

using namespace gmm;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("text graph format") {
  const Graph g = parse_graph("4 3\n0 1\n2 1\n3 0\n");
  CHECK(g == Graph(4, {{0, 1}, {1, 2}, {0, 3}}));
  CHECK(format_graph(g, false) == "4 3\n0 1\n0 3\n1 2\n");

  const SignedGraph d = parse_signed("3 1 1\n+ 0 1\n- 1 2\n");
  CHECK(d == SignedGraph(3, {{0, 1}}, {{1, 2}}));
  CHECK(format_signed(d, false) == "3 1 1\n+ 0 1\n- 1 2\n");
}

TEST_CASE("JSON graph format") {
  const Graph g = parse_graph(R"({"n": 3, "edges": [[0, 2], [1, 2]]})");
  CHECK(g == Graph(3, {{0, 2}, {1, 2}}));
  const auto c = parse_colored(R"({"n": 2, "edges": [[0, 1]], "colors": [1, 2]})");
  REQUIRE(c);
  CHECK(c->colors == std::vector<int>{1, 2});
  CHECK_FALSE(parse_colored("2 1\n0 1\n"));
  const SignedGraph d = parse_signed(R"({"n": 3, "pos": [[0, 1]], "neg": [[1, 2]]})");
  CHECK(d == SignedGraph(3, {{0, 1}}, {{1, 2}}));
}

TEST_CASE("round trips are byte-stable") {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 40; ++k) {
    const int n = static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    std::vector<int> colors(n);
    for (int& c : colors) c = 1 + static_cast<int>(rng() % 3);
    for (bool js : {false, true}) {
      const std::string once = format_graph(g, js);
      CHECK(parse_graph(once) == g);
      CHECK(format_graph(parse_graph(once), js) == once);
    }
    const std::string cj = format_graph(g, true, &colors);
    const auto back = parse_colored(cj);
    REQUIRE(back);
    CHECK(back->graph == g);
    CHECK(back->colors == colors);
    CHECK(format_graph(back->graph, true, &back->colors) == cj);

    const SignedGraph d = oracle::random_signed(n, 0.4, rng);
    for (bool js : {false, true}) {
      const std::string once = format_signed(d, js);
      CHECK(parse_signed(once) == d);
      CHECK(format_signed(parse_signed(once), js) == once);
    }
  }
}

TEST_CASE("malformed input is a parse error") {
  for (const char* bad : {"", "3", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n1 1\n", "2 1\n0 1\n0 1 7\n",
                          "-1 0\n", "3 2\n0 1\n1 0\n", "{\"edges\": []}", "{\"n\": 2, \"edges\": [[0]]}",
                          "{not json"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { parse_graph(bad); }) == ErrorKind::Parse);
  }
  for (const char* bad : {"3 1 0\n* 0 1\n", "3 1 1\n+ 0 1\n- 0 1\n", "2 0 1\n+ 0 1\n"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { parse_signed(bad); }) == ErrorKind::Parse);
  }
  CHECK(kind_of([] { read_file("/nonexistent/graph.g"); }) == ErrorKind::Parse);
}
