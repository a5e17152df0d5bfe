#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gmm/bounds.hpp"
#include "gmm/graph.hpp"
#include "gmm/norms.hpp"

namespace gmm {

/// The rational num/den of a threshold question "is dist >= num/den?".
struct Threshold {
  long long num = 1;
  long long den = 1;

  Threshold() = default;
  Threshold(long long n, long long d);

  /// Parses "p/q" with positive integers p, q.
  static Threshold parse(std::string_view text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct SolveResult {
  double value = 0;
  /// Bijection from pad(G, N) to pad(H, N), N = max(|G|, |H|).
  Alignment alignment;
  std::uint64_t nodes_explored = 0;
  BoundCertificate lower_bound_used;
  bool exact = false;
  bool budget_exhausted = false;
  /// Norm of the witness mismatch graph (value, certificates).
  NormValue norm;
};

struct SolveOptions {
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 0;
  /// Local-search restarts used to seed the incumbent.
  int incumbent_restarts = 8;
  /// Largest order for which exact search under the cut norm is attempted.
  int cut_order_cap = 12;
};

struct LocalSearchOptions {
  std::uint64_t seed = 0;
  int restarts = 1;
  /// Consecutive non-improving swap attempts before a restart stops;
  /// 0 picks 2 * order.
  int max_stall = 0;
  /// Worker threads for restarts; 0 reads GMM_THREADS (default 1).
  int threads = 0;
};

/// dist_mu(G,H) by branch and bound over bijections.
///
/// The smaller graph is padded with isolated vertices. Source vertices are
/// assigned by descending degree with twin classes kept contiguous; targets
/// are tried one per twin class. Nodes are pruned when the bound implied by
/// the mismatches forced so far reaches the incumbent. If the node budget
/// runs out the best alignment found is returned with exact = false.
SolveResult exact_distance(const Graph& g, const Graph& h, const NormSpec& spec,
                           const SolveOptions& options = {});

/// True iff dist_mu(G,H) >= t. Comparisons are exact for integer-valued
/// norms and use a 1e-9 margin otherwise. Throws Error(Budget) when the
/// search budget runs out and the incumbent does not settle the question.
bool decide_distance(const Graph& g, const Graph& h, const NormSpec& spec,
                     const Threshold& t, const SolveOptions& options = {});

/// ||A_G||_p + ||A_H||_p (absolute operator norm when `absolute`); lies in
/// [dist, dist + 2d] with d the maximum degree of H.
double approx_additive(const Graph& g, const Graph& h, double p, bool absolute = false);

/// 0 when G and H are isomorphic (checked only if their maximum degrees
/// agree), approx_additive otherwise. At most (1 + 2d) * dist.
double approx_multiplicative(const Graph& g, const Graph& h, double p);

/// Backtracking isomorphism test with colour-refinement pruning.
bool is_isomorphic(const Graph& g, const Graph& h);

/// An isomorphism g -> h if one exists.
std::optional<Alignment> find_isomorphism(const Graph& g, const Graph& h);

/// 2-swap hill climbing from a degree-sorted greedy start. The result is an
/// upper bound on the distance (exact = false).
SolveResult local_search(const Graph& g, const Graph& h, const NormSpec& spec,
                         std::uint64_t seed);
SolveResult local_search(const Graph& g, const Graph& h, const NormSpec& spec,
                         const LocalSearchOptions& options);

/// Worker count from GMM_THREADS, at least 1.
int configured_threads();

}  // namespace gmm
