#pragma once

// Reference implementations used only by tests. They share nothing with the
// library beyond the Graph and SignedGraph containers: matrices are plain
// integer tables, eigenvalues come from cyclic Jacobi rotations, the cut
// norm enumerates all (S, T) pairs, and distances enumerate all bijections.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gmm/graph.hpp"

namespace oracle {

using IntMat = std::vector<std::vector<int>>;

inline IntMat zeros(int r, int c) { return IntMat(r, std::vector<int>(c, 0)); }

inline IntMat adjacency(const gmm::Graph& g, int n) {
  IntMat a = zeros(n, n);
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

inline IntMat signed_adjacency(const gmm::SignedGraph& d) {
  IntMat a = zeros(d.order(), d.order());
  for (const auto& e : d.pos()) a[e.u][e.v] = a[e.v][e.u] = 1;
  for (const auto& e : d.neg()) a[e.u][e.v] = a[e.v][e.u] = -1;
  return a;
}

/// A_{G^perm} - A_H on max(|G|, |H|) vertices.
inline IntMat difference(const gmm::Graph& g, const gmm::Graph& h, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  IntMat m = zeros(n, n);
  for (const auto& e : g.edges()) {
    m[perm[e.u]][perm[e.v]] += 1;
    m[perm[e.v]][perm[e.u]] += 1;
  }
  for (const auto& e : h.edges()) {
    m[e.u][e.v] -= 1;
    m[e.v][e.u] -= 1;
  }
  return m;
}

inline int max_abs_col_sum(const IntMat& m) {
  int best = 0;
  for (std::size_t j = 0; j < (m.empty() ? 0 : m[0].size()); ++j) {
    int s = 0;
    for (const auto& row : m) s += std::abs(row[j]);
    best = std::max(best, s);
  }
  return best;
}

inline int max_abs_row_sum(const IntMat& m) {
  int best = 0;
  for (const auto& row : m) {
    int s = 0;
    for (int x : row) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

inline IntMat abs(IntMat m) {
  for (auto& row : m)
    for (int& x : row) x = std::abs(x);
  return m;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps.
inline std::vector<double> jacobi_eigenvalues(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

inline double spectral_norm(const IntMat& m) {
  double best = 0;
  for (double x : jacobi_eigenvalues(m)) best = std::max(best, std::abs(x));
  return best;
}

inline double frobenius(const IntMat& m) {
  long long s = 0;
  for (const auto& row : m)
    for (int x : row) s += static_cast<long long>(x) * x;
  return std::sqrt(static_cast<double>(s));
}

/// max over all row subsets S and column subsets T of |sum m[S][T]|.
inline long long cut_norm(const IntMat& m) {
  const int r = static_cast<int>(m.size());
  const int c = r ? static_cast<int>(m[0].size()) : 0;
  long long best = 0;
  for (std::uint64_t s = 0; s < (1ull << r); ++s)
    for (std::uint64_t t = 0; t < (1ull << c); ++t) {
      long long sum = 0;
      for (int i = 0; i < r; ++i)
        if (s >> i & 1)
          for (int j = 0; j < c; ++j)
            if (t >> j & 1) sum += m[i][j];
      best = std::max(best, std::llabs(sum));
    }
  return best;
}

inline bool any_nonzero(const IntMat& m) {
  for (const auto& row : m)
    for (int x : row)
      if (x) return true;
  return false;
}

/// Norm of a mismatch matrix for the spec strings used in the tests.
inline double norm(const IntMat& m, const std::string& spec) {
  if (spec == "op:1" || spec == "op:inf") return max_abs_col_sum(m);
  if (spec == "op:2") return spectral_norm(m);
  if (spec == "absop:2") return spectral_norm(abs(m));
  if (spec == "ew:2") return frobenius(m);
  if (spec == "iso") return any_nonzero(m) ? 1 : 0;
  if (spec == "cut") return static_cast<double>(cut_norm(m));
  throw std::invalid_argument("oracle has no norm " + spec);
}

/// Minimum over all bijections of pad(G) onto pad(H).
inline double distance(const gmm::Graph& g, const gmm::Graph& h, const std::string& spec) {
  const int n = std::max(g.order(), h.order());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, norm(difference(g, h, perm), spec));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool hamiltonian_cycle(const gmm::Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool hamiltonian_path(const gmm::Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < n; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline int maxcut(const gmm::Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (1ull << g.order()); ++s) {
    int cut = 0;
    for (const auto& e : g.edges()) cut += ((s >> e.u) & 1) != ((s >> e.v) & 1);
    best = std::max(best, cut);
  }
  return best;
}

/// Vertex sets of the components that carry an edge, by union-find; each set
/// ascending, sets ordered by their smallest vertex.
inline std::vector<std::vector<int>> components(const gmm::SignedGraph& d) {
  const int n = d.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> touched(n, 0);
  for (const auto* es : {&d.pos(), &d.neg()})
    for (const auto& e : *es) {
      parent[find(e.u)] = find(e.v);
      touched[e.u] = touched[e.v] = 1;
    }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!touched[v]) continue;
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

// --- generators -------------------------------------------------------------------

inline gmm::Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<gmm::Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return gmm::Graph(n, std::move(es));
}

/// Random graph whose maximum degree stays at most `d`.
inline gmm::Graph random_bounded_graph(int n, int d, std::mt19937_64& rng) {
  std::vector<gmm::Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> deg(n, 0);
  std::vector<gmm::Edge> es;
  std::bernoulli_distribution keep(0.6);
  for (const auto& e : all)
    if (deg[e.u] < d && deg[e.v] < d && keep(rng)) {
      ++deg[e.u];
      ++deg[e.v];
      es.push_back(e);
    }
  return gmm::Graph(n, std::move(es));
}

inline gmm::SignedGraph random_signed(int n, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<gmm::Edge> pos, neg;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = u(rng);
      if (x < density / 2) pos.emplace_back(i, j);
      else if (x < density) neg.emplace_back(i, j);
    }
  return gmm::SignedGraph(n, std::move(pos), std::move(neg));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline gmm::Graph relabel(const gmm::Graph& g, const std::vector<int>& perm) {
  std::vector<gmm::Edge> es;
  for (const auto& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
  return gmm::Graph(g.order(), std::move(es));
}

/// Every graph on n labelled vertices, in edge-mask order.
inline std::vector<gmm::Graph> all_graphs(int n) {
  std::vector<gmm::Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<gmm::Graph> out;
  for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
    std::vector<gmm::Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) es.push_back(pairs[k]);
    out.emplace_back(n, std::move(es));
  }
  return out;
}

/// Canonical form of an unlabelled graph: the lexicographically smallest
/// adjacency bitstring over all relabellings.
inline std::vector<char> canonical(const gmm::Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> code(n * n, 0);
    for (const auto& e : g.edges()) {
      code[perm[e.u] * n + perm[e.v]] = 1;
      code[perm[e.v] * n + perm[e.u]] = 1;
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of graphs on n vertices.
inline std::vector<gmm::Graph> unlabelled_graphs(int n) {
  std::vector<std::pair<std::vector<char>, gmm::Graph>> seen;
  for (auto& g : all_graphs(n)) {
    auto code = canonical(g);
    bool dup = false;
    for (const auto& [c, _] : seen) dup = dup || c == code;
    if (!dup) seen.emplace_back(std::move(code), std::move(g));
  }
  std::vector<gmm::Graph> out;
  for (auto& [_, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace oracle
