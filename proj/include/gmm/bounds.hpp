#pragma once

#include <string>
#include <vector>

#include "gmm/graph.hpp"
#include "gmm/norms.hpp"

namespace gmm {

/// Per-vertex mismatch counts of one alignment, indexed by target vertices.
struct MismatchProfile {
  std::vector<int> per_vertex;
  int mmc = 0;
};

/// Alignment-free lower bound on a distance, with a human-readable reason.
struct BoundCertificate {
  double value = 0;
  int c = 0;  // the forced mismatch count behind `value`, when applicable
  std::string witness;
};

/// True when every connected component of d is a star (K2 included).
bool is_star_forest(const SignedGraph& d);

/// Degree of every vertex of H in G^pi - H. Requires a bijection.
MismatchProfile mismatch_profile(const Graph& g, const Graph& h,
                                 const Alignment& pi);

/// b_p(c) = max(c^(1/p), c^(1-1/p)); exactly c for p in {1, inf}.
double bound_b(double p, int c);

/// The same value: the l_p operator norm of a c-edge star.
inline double star_norm_value(int c, double p) { return bound_b(p, c); }

/// Exponent e(p) = max(1/p, 1-1/p) with b_p(c) = c^e(p) for c >= 1.
double bound_exponent(double p);

/// True when b_p is strictly increasing on 0..cmax.
bool b_monotone_check(double p, int cmax);

/// Minimum over bijections of the largest |deg_G(v) - deg_H(pi(v))|,
/// attained by matching sorted degree sequences.
int degree_bottleneck(const Graph& g, const Graph& h);

/// dist_p(G,H) >= b_p(c*) with c* = degree_bottleneck(G,H).
BoundCertificate degree_lower_bound(const Graph& g, const Graph& h, double p);

/// Mismatches that every completion of a partial alignment must contain.
///
/// For an assigned pair u -> t the count is the number of already
/// mismatched assigned pairs at u plus |r_G(u) - r_H(t)|, where r_G(u) and
/// r_H(t) count neighbours not yet assigned on each side.
struct ForcedMismatches {
  std::vector<int> per_source;  // -1 for unassigned sources
  int max_count = 0;
  /// Lower bound on the number of mismatched edges of any completion.
  long long edges = 0;
};

/// `partial[v]` is the image of source vertex v, or -1 when unassigned.
ForcedMismatches forced_mismatches(const Graph& g, const Graph& h,
                                   const std::vector<Vertex>& partial);

/// b_p of the largest forced count: a lower bound on mu_p of any completion.
double partial_lower_bound(const Graph& g, const Graph& h,
                           const std::vector<Vertex>& partial, double p);

/// Lower bound on mu(Delta) for any Delta with a vertex of `max_count`
/// mismatches and at least `edges` mismatched edges, for the given norm.
double spec_lower_bound(const NormSpec& spec, int max_count, long long edges);

}  // namespace gmm
