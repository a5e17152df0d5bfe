#include <doctest.h>

#include <random>

#include "gmm/graph.hpp"
#include "oracles.hpp"

using namespace gmm;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

bool throws_kind(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { Graph(2, {{0, 0}}); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { Graph(2, {{0, 1}, {1, 0}}); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { Graph(2, {{0, 2}}); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { SignedGraph(3, {{0, 1}}, {{1, 0}}); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { Alignment({0, 0}, 2); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { Alignment({0, 3}, 3); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { ColoredGraph(Graph(2), {1, 0}); }));
}

TEST_CASE("adjacency lists are sorted and symmetric") {
  const Graph g(4, {{3, 1}, {0, 3}, {2, 3}});
  CHECK(g.neighbors(3) == std::vector<Vertex>{0, 1, 2});
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK(g.max_degree() == 3);
  CHECK(g == Graph(4, {{0, 3}, {1, 3}, {2, 3}}));
}

TEST_CASE("mismatch") {
  const Graph tri = complete_graph(3);
  CHECK(mismatch(tri, tri).empty());

  const auto d = mismatch(Graph(2, {{0, 1}}), Graph(2));
  CHECK(d.pos() == std::vector<Edge>{{0, 1}});
  CHECK(d.neg().empty());

  const auto p = mismatch(path3(), Graph(3, {{0, 2}, {1, 2}}));
  CHECK(p.pos() == std::vector<Edge>{{0, 1}});
  CHECK(p.neg() == std::vector<Edge>{{0, 2}});

  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { mismatch(Graph(2), Graph(3)); }));
}

TEST_CASE("mismatch adjacency equals the difference of adjacencies") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.5, rng), h = oracle::random_graph(n, 0.5, rng);
    const auto a = adjacency<int>(mismatch(g, h));
    const Matrix<int> expect = adjacency<int>(g) - adjacency<int>(h);
    CHECK(a == expect);
    const Matrix<int> lap = laplacian<int>(g) - laplacian<int>(h);
    CHECK(laplacian<int>(mismatch(g, h)) == lap);
  }
}

TEST_CASE("apply_alignment") {
  const Graph g = path3();
  CHECK(apply_alignment(g, Alignment::identity(3)) == g);
  CHECK(apply_alignment(Graph(2, {{0, 1}}), Alignment({1, 0}, 2)) == Graph(2, {{0, 1}}));
  CHECK(apply_alignment(g, Alignment({2, 0, 1}, 3)) == Graph(3, {{0, 2}, {0, 1}}));
  const Graph wide = apply_alignment(Graph(2, {{0, 1}}), Alignment({3, 1}, 5));
  CHECK(wide.order() == 5);
  CHECK(wide.has_edge(1, 3));
}

TEST_CASE("alignment inverse") {
  std::mt19937_64 rng(3);
  const auto perm = oracle::random_permutation(8, rng);
  const Alignment a(perm, 8);
  const Alignment inv = a.inverse();
  for (int v = 0; v < 8; ++v) CHECK(inv[a[v]] == v);
}

TEST_CASE("signed sum and negation") {
  const SignedGraph d(3, {{0, 1}}, {{1, 2}});
  CHECK(signed_sum(d, negate(d)).empty());
  const SignedGraph a(3, {{0, 1}}, {}), b(3, {}, {{1, 2}});
  CHECK(signed_sum(a, b) == d);
  CHECK(signed_sum(a, a) == a);
  CHECK(negate(SignedGraph(3, {}, {})).empty());
  CHECK(negate(a) == SignedGraph(3, {}, {{0, 1}}));

  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    const auto x = oracle::random_signed(6, 0.5, rng);
    CHECK(negate(negate(x)) == x);
  }
}

TEST_CASE("padding") {
  const Graph g = path3();
  CHECK(pad(g, 3) == g);
  const Graph e = pad(Graph(2, {{0, 1}}), 4);
  CHECK(e.order() == 4);
  CHECK(e.size() == 1);
  CHECK(e.degree(2) == 0);
  CHECK(e.degree(3) == 0);
  CHECK(pad(SignedGraph(2, {{0, 1}}, {}), 5).order() == 5);
}

TEST_CASE("adjacency and laplacian fills") {
  CHECK(adjacency<int>(SignedGraph(3, {}, {})).isZero());
  Eigen::Matrix2i one;
  one << 0, 1, 1, 0;
  CHECK(adjacency<int>(SignedGraph(2, {{0, 1}}, {})) == one);
  const auto a = adjacency<int>(SignedGraph(3, {{1, 2}}, {{0, 1}}));
  CHECK(a(0, 1) == -1);
  CHECK(a(1, 0) == -1);
  CHECK(a(1, 2) == 1);
  CHECK(a(2, 1) == 1);
  CHECK(a.cwiseAbs().sum() == 4);

  Eigen::Matrix2i l;
  l << 1, -1, -1, 1;
  CHECK(laplacian<int>(SignedGraph(2, {{0, 1}}, {})) == l);
  CHECK(laplacian<int>(SignedGraph(4, {}, {})).isZero());
}

TEST_CASE("signed graph from matrix") {
  Eigen::Matrix3i m;
  m << 0, -1, 0, -1, 0, 1, 0, 1, 0;
  CHECK(signed_graph_from_matrix(m) == SignedGraph(3, {{1, 2}}, {{0, 1}}));
  m(0, 2) = 1;
  CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { signed_graph_from_matrix(m); }));
}

TEST_CASE("components") {
  const SignedGraph d(5, {{0, 1}, {1, 2}}, {{3, 4}});
  CHECK(component_vertex_sets(d) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4}});
  CHECK(components(d).size() == 2);
  CHECK(component_vertex_sets(SignedGraph(3, {{0, 1}, {1, 2}}, {})).size() == 1);
  CHECK(component_vertex_sets(SignedGraph(4, {{0, 1}}, {{2, 3}})).size() == 2);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto x = oracle::random_signed(9, 0.25, rng);
    const auto sets = component_vertex_sets(x);
    CHECK(sets == oracle::components(x));
    std::size_t edges = 0;
    for (const auto& c : components(x)) {
      CHECK(c.order() == x.order());
      edges += c.size();
    }
    CHECK(edges == x.size());
  }
}

TEST_CASE("support drops isolated vertices") {
  const SignedGraph d(6, {{1, 4}}, {{4, 5}});
  CHECK(non_isolated(d) == std::vector<Vertex>{1, 4, 5});
  const SignedGraph s = support(d);
  CHECK(s.order() == 3);
  CHECK(s.size() == 2);
}

TEST_CASE("colour histogram") {
  const ColoredGraph c(Graph(4), {1, 2, 2, 3});
  CHECK(c.num_colors() == 3);
  CHECK(c.histogram() == std::vector<int>{0, 1, 2, 1});
}

TEST_CASE("named graphs") {
  CHECK(complete_graph(4).size() == 6);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(path_graph(5).size() == 4);
  CHECK(star_graph(4).order() == 5);
  CHECK(star_graph(4).degree(0) == 4);
  CHECK(complete_bipartite(3, 3).size() == 9);
  const Graph p = petersen_graph();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(disjoint_union(cycle_graph(3), cycle_graph(3)).size() == 6);
}
