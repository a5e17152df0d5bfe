#include "gmm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

namespace gmm {

MismatchProfile mismatch_profile(const Graph& g, const Graph& h,
                                 const Alignment& pi) {
  require(g.order() == h.order(), "mismatch_profile: graphs of different order");
  require(pi.source_order() == g.order() && pi.is_bijection(),
          "mismatch_profile: alignment must be a bijection");
  MismatchProfile out;
  out.per_vertex = mismatch(apply_alignment(g, pi), h).degrees();
  for (int c : out.per_vertex) out.mmc = std::max(out.mmc, c);
  return out;
}

bool is_star_forest(const SignedGraph& d) {
  const auto deg = d.degrees();
  for (const auto& comp : component_vertex_sets(d)) {
    const int k = static_cast<int>(comp.size());
    int edges = 0, center = 0;
    for (Vertex v : comp) {
      edges += deg[v];
      center = std::max(center, deg[v]);
    }
    if (edges / 2 != k - 1 || center != k - 1) return false;
  }
  return true;
}

double bound_exponent(double p) {
  check_p(p);
  if (is_inf(p)) return 1.0;
  return std::max(1.0 / p, 1.0 - 1.0 / p);
}

double bound_b(double p, int c) {
  check_p(p);
  require(c >= 0, "bound_b: negative count");
  if (p == 1.0 || is_inf(p) || c <= 1) return static_cast<double>(c);
  return std::max(std::pow(c, 1.0 / p), std::pow(c, 1.0 - 1.0 / p));
}

bool b_monotone_check(double p, int cmax) {
  // c^e with e > 0 is strictly increasing; also confirm the evaluated values.
  if (!(bound_exponent(p) > 0)) return false;
  for (int c = 0; c < cmax; ++c)
    if (!(bound_b(p, c) < bound_b(p, c + 1))) return false;
  return true;
}

int degree_bottleneck(const Graph& g, const Graph& h) {
  require(g.order() == h.order(), "degree bound: graphs of different order");
  std::vector<int> dg(g.order()), dh(h.order());
  for (int v = 0; v < g.order(); ++v) dg[v] = g.degree(v);
  for (int v = 0; v < h.order(); ++v) dh[v] = h.degree(v);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  int c = 0;
  for (std::size_t i = 0; i < dg.size(); ++i) c = std::max(c, std::abs(dg[i] - dh[i]));
  return c;
}

BoundCertificate degree_lower_bound(const Graph& g, const Graph& h, double p) {
  BoundCertificate out;
  out.c = degree_bottleneck(g, h);
  out.value = bound_b(p, out.c);
  out.witness = "every alignment forces some vertex to >= " + std::to_string(out.c) +
                " mismatches via the sorted degree-sequence bottleneck";
  return out;
}

ForcedMismatches forced_mismatches(const Graph& g, const Graph& h,
                                   const std::vector<Vertex>& partial) {
  require(static_cast<int>(partial.size()) == g.order(),
          "partial alignment must have one slot per source vertex");
  std::vector<char> used(h.order(), 0);
  for (Vertex t : partial) {
    if (t < 0) continue;
    require(t < h.order() && !used[t], "partial alignment is not injective");
    used[t] = 1;
  }
  ForcedMismatches out;
  out.per_source.assign(g.order(), -1);
  long long between = 0;
  long long dangling = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const Vertex t = partial[u];
    if (t < 0) continue;
    int mism = 0;
    int assigned_g = 0;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == u || partial[w] < 0) continue;
      const bool eg = g.has_edge(u, w);
      const bool eh = h.has_edge(t, partial[w]);
      assigned_g += eg;
      if (eg != eh) {
        ++mism;
        if (w > u) ++between;
      }
    }
    int assigned_h = 0;
    for (Vertex x : h.neighbors(t)) assigned_h += used[x];
    const int rest = std::abs((g.degree(u) - assigned_g) - (h.degree(t) - assigned_h));
    out.per_source[u] = mism + rest;
    out.max_count = std::max(out.max_count, mism + rest);
    dangling += rest;
  }
  out.edges = between + dangling;
  return out;
}

double partial_lower_bound(const Graph& g, const Graph& h,
                           const std::vector<Vertex>& partial, double p) {
  return bound_b(p, forced_mismatches(g, h, partial).max_count);
}

double spec_lower_bound(const NormSpec& spec, int max_count, long long edges) {
  edges = std::max<long long>(edges, max_count);
  switch (spec.kind) {
    case NormKind::Iso: return edges > 0 ? 1.0 : 0.0;
    case NormKind::EntrywiseP:
      if (edges == 0) return 0.0;
      if (is_inf(spec.p)) return 1.0;
      return std::pow(2.0 * static_cast<double>(edges), 1.0 / spec.p);
    case NormKind::OperatorP:
    case NormKind::AbsOperatorP: return bound_b(spec.p, max_count);
    case NormKind::Cut: return static_cast<double>((max_count + 1) / 2);
  }
  return 0.0;
}

}  // namespace gmm
