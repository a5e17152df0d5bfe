#include <doctest.h>

#include <numeric>
#include <random>

#include "gmm/bounds.hpp"
#include "gmm/solver.hpp"
#include "oracles.hpp"

using namespace gmm;

namespace {

// Minimum over bijections of the largest |deg_G(v) - deg_H(pi(v))|.
int bottleneck_by_enumeration(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    int worst = 0;
    for (int v = 0; v < n; ++v) worst = std::max(worst, std::abs(g.degree(v) - h.degree(perm[v])));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("b_p closed form") {
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
    CHECK(bound_b(p, 0) == 0);
    CHECK(bound_b(p, 1) == 1);
  }
  CHECK(bound_b(2, 4) == doctest::Approx(2));
  CHECK(bound_b(3, 8) == doctest::Approx(4));
  CHECK(bound_b(1, 7) == 7);
  CHECK(bound_b(kInf, 7) == 7);
  CHECK(bound_exponent(2) == 0.5);
  CHECK(bound_exponent(4) == 0.75);
  CHECK(bound_exponent(kInf) == 1);
}

TEST_CASE("b_p is strictly increasing") {
  CHECK(b_monotone_check(2, 20));
  CHECK(b_monotone_check(1, 20));
  CHECK(b_monotone_check(1.5, 20));
  CHECK(b_monotone_check(kInf, 50));
}

TEST_CASE("mismatch profile") {
  const Graph k4 = complete_graph(4), c4 = cycle_graph(4);
  const auto same = mismatch_profile(c4, c4, Alignment::identity(4));
  CHECK(same.per_vertex == std::vector<int>{0, 0, 0, 0});
  CHECK(same.mmc == 0);
  const auto ham = mismatch_profile(c4, k4, Alignment::identity(4));
  CHECK(ham.per_vertex == std::vector<int>{1, 1, 1, 1});
  CHECK(ham.mmc == 1);

  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const Graph g = oracle::random_graph(6, 0.5, rng), h = oracle::random_graph(6, 0.5, rng);
    const Alignment pi(oracle::random_permutation(6, rng), 6);
    const auto prof = mismatch_profile(g, h, pi);
    CHECK(prof.per_vertex == mismatch(apply_alignment(g, pi), h).degrees());
  }
}

TEST_CASE("degree bottleneck") {
  CHECK(degree_bottleneck(petersen_graph(), cycle_graph(10)) == 1);
  CHECK(degree_bottleneck(star_graph(4), path_graph(5)) == 2);
  CHECK(degree_bottleneck(cycle_graph(5), cycle_graph(5)) == 0);
  CHECK(degree_lower_bound(star_graph(4), path_graph(5), 2).value == doctest::Approx(std::sqrt(2.0)));
  CHECK(degree_lower_bound(complete_graph(4), cycle_graph(4), 3).value == 1);

  std::mt19937_64 rng(9);
  for (int k = 0; k < 80; ++k) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, 0.5, rng), h = oracle::random_graph(n, 0.5, rng);
    CHECK(degree_bottleneck(g, h) == bottleneck_by_enumeration(g, h));
  }
}

TEST_CASE("degree bound never exceeds the distance") {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 60; ++k) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(n, 0.5, rng), h = oracle::random_graph(n, 0.5, rng);
    for (double p : {1.0, 2.0, kInf}) {
      const double d = p == 2.0 ? oracle::distance(g, h, "op:2") : oracle::distance(g, h, "op:1");
      CHECK(degree_lower_bound(g, h, p).value <= d + 1e-9);
    }
  }
}

TEST_CASE("forced mismatches of partial alignments") {
  const Graph tri = complete_graph(3), indep(3);
  std::vector<Vertex> none(3, -1);
  CHECK(partial_lower_bound(tri, indep, none, 2) == 0);
  CHECK(forced_mismatches(tri, indep, none).max_count == 0);

  // a triangle placed on three isolated vertices: two mismatches each
  const std::vector<Vertex> full{0, 1, 2};
  CHECK(partial_lower_bound(tri, indep, full, 2) >= bound_b(2, 2) - 1e-12);
  const auto f = forced_mismatches(tri, indep, full);
  CHECK(f.per_source == std::vector<int>{2, 2, 2});
  CHECK(f.edges == 3);
}

TEST_CASE("partial bounds are below every completion") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 60; ++k) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_graph(n, 0.5, rng), h = oracle::random_graph(n, 0.5, rng);
    const auto perm = oracle::random_permutation(n, rng);
    std::vector<Vertex> partial(perm.begin(), perm.end());
    const int keep = static_cast<int>(rng() % (n + 1));
    for (int v = keep; v < n; ++v) partial[v] = -1;

    // best completion by enumeration of the free targets
    std::vector<int> free_targets, free_sources;
    std::vector<char> used(n, 0);
    for (int v = 0; v < n; ++v)
      if (partial[v] >= 0) used[partial[v]] = 1;
      else free_sources.push_back(v);
    for (int t = 0; t < n; ++t)
      if (!used[t]) free_targets.push_back(t);
    int best_mmc = n * n;
    long long best_edges = n * n;
    do {
      std::vector<int> img(partial.begin(), partial.end());
      for (std::size_t i = 0; i < free_sources.size(); ++i) img[free_sources[i]] = free_targets[i];
      const auto d = oracle::difference(g, h, img);
      best_mmc = std::min(best_mmc, oracle::max_abs_col_sum(d));
      long long e = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e += d[i][j] != 0;
      best_edges = std::min(best_edges, e);
    } while (std::next_permutation(free_targets.begin(), free_targets.end()));

    const auto f = forced_mismatches(g, h, partial);
    CHECK(f.max_count <= best_mmc);
    CHECK(f.edges <= best_edges);
  }
}

TEST_CASE("spec lower bounds") {
  CHECK(spec_lower_bound(NormSpec::iso(), 3, 5) == 1);
  CHECK(spec_lower_bound(NormSpec::iso(), 0, 0) == 0);
  CHECK(spec_lower_bound(NormSpec::entrywise(2), 3, 8) == doctest::Approx(4));
  CHECK(spec_lower_bound(NormSpec::entrywise(kInf), 3, 8) == 1);
  CHECK(spec_lower_bound(NormSpec::op(2), 9, 20) == doctest::Approx(3));
  CHECK(spec_lower_bound(NormSpec::cut(), 5, 10) == 3);
}

TEST_CASE("star forest detection") {
  CHECK(is_star_forest(SignedGraph(5, {{0, 1}, {0, 2}}, {{3, 4}})));
  CHECK(is_star_forest(SignedGraph(3, {}, {})));
  CHECK_FALSE(is_star_forest(SignedGraph(4, {{0, 1}, {1, 2}, {2, 3}}, {})));
  CHECK_FALSE(is_star_forest(SignedGraph(3, {{0, 1}, {1, 2}}, {{0, 2}})));
}
