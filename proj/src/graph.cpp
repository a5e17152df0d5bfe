#include "gmm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gmm {

namespace {

void check_edges(int n, std::vector<Edge>& edges, const char* what) {
  for (const Edge& e : edges) {
    require(e.u != e.v, std::string(what) + ": self-loop at vertex " +
                            std::to_string(e.u));
    require(e.u >= 0 && e.v < n, std::string(what) + ": endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(),
          std::string(what) + ": duplicate edge");
}

std::vector<Edge> set_difference(const std::vector<Edge>& a,
                                 const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Edge> set_union(const std::vector<Edge>& a,
                            const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<Edge> relabel(const std::vector<Edge>& edges,
                          const Alignment& pi) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(pi[e.u], pi[e.v]);
  return out;
}

}  // namespace

// --- Graph -------------------------------------------------------------------

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), adj_(n), labels_(std::move(labels)) {
  require(n >= 0, "graph order must be nonnegative");
  require(labels_.empty() || static_cast<int>(labels_.size()) == n,
          "labels must cover every vertex");
  check_edges(n, edges_, "graph");
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

// --- SignedGraph -------------------------------------------------------------

SignedGraph::SignedGraph(int n, std::vector<Edge> pos, std::vector<Edge> neg)
    : n_(n), pos_(std::move(pos)), neg_(std::move(neg)) {
  require(n >= 0, "signed graph order must be nonnegative");
  check_edges(n, pos_, "signed graph (+)");
  check_edges(n, neg_, "signed graph (-)");
  std::vector<Edge> both;
  std::set_intersection(pos_.begin(), pos_.end(), neg_.begin(), neg_.end(),
                        std::back_inserter(both));
  require(both.empty(), "an edge cannot be both positive and negative");
}

int SignedGraph::sign(Vertex a, Vertex b) const {
  const Edge e(a, b);
  if (std::binary_search(pos_.begin(), pos_.end(), e)) return 1;
  if (std::binary_search(neg_.begin(), neg_.end(), e)) return -1;
  return 0;
}

std::vector<int> SignedGraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto* set : {&pos_, &neg_}) {
    for (const Edge& e : *set) {
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  return deg;
}

// --- Alignment ---------------------------------------------------------------

Alignment::Alignment(std::vector<Vertex> map, int target_order)
    : map_(std::move(map)), target_(target_order) {
  require(static_cast<int>(map_.size()) <= target_,
          "alignment source larger than target");
  std::vector<char> used(target_, 0);
  for (Vertex t : map_) {
    require(t >= 0 && t < target_, "alignment image out of range");
    require(!used[t], "alignment is not injective");
    used[t] = 1;
  }
}

Alignment Alignment::identity(int n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Alignment(std::move(m), n);
}

Alignment Alignment::inverse() const {
  require(is_bijection(), "only bijections can be inverted");
  std::vector<Vertex> inv(target_);
  for (int v = 0; v < source_order(); ++v) inv[map_[v]] = v;
  return Alignment(std::move(inv), target_);
}

// --- ColoredGraph ------------------------------------------------------------

ColoredGraph::ColoredGraph(Graph g, std::vector<int> c)
    : graph(std::move(g)), colors(std::move(c)) {
  require(static_cast<int>(colors.size()) == graph.order(),
          "every vertex needs exactly one color");
  for (int x : colors) require(x >= 1, "colors must be positive integers");
}

int ColoredGraph::num_colors() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

std::vector<int> ColoredGraph::histogram() const {
  std::vector<int> h(num_colors() + 1, 0);
  for (int x : colors) ++h[x];
  return h;
}

// --- operations --------------------------------------------------------------

SignedGraph mismatch(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) fail(ErrorKind::InvalidArgument, "vertex sets differ");
  return SignedGraph(g.order(), set_difference(g.edges(), h.edges()),
                     set_difference(h.edges(), g.edges()));
}

Graph apply_alignment(const Graph& g, const Alignment& pi) {
  require(pi.source_order() == g.order(), "alignment does not match graph order");
  return Graph(pi.target_order(), relabel(g.edges(), pi));
}

SignedGraph apply_alignment(const SignedGraph& d, const Alignment& pi) {
  require(pi.source_order() == d.order(), "alignment does not match graph order");
  return SignedGraph(pi.target_order(), relabel(d.pos(), pi),
                     relabel(d.neg(), pi));
}

SignedGraph signed_sum(const SignedGraph& a, const SignedGraph& b) {
  require(a.order() == b.order(), "signed_sum: vertex sets differ");
  const auto pos = set_union(a.pos(), b.pos());
  const auto neg = set_union(a.neg(), b.neg());
  return SignedGraph(a.order(), set_difference(pos, neg),
                     set_difference(neg, pos));
}

SignedGraph negate(const SignedGraph& d) {
  return SignedGraph(d.order(), d.neg(), d.pos());
}

Graph pad(const Graph& g, int n) {
  require(n >= g.order(), "cannot pad to fewer vertices");
  return Graph(n, g.edges());
}

SignedGraph pad(const SignedGraph& d, int n) {
  require(n >= d.order(), "cannot pad to fewer vertices");
  return SignedGraph(n, d.pos(), d.neg());
}

std::vector<std::vector<Vertex>> component_vertex_sets(const SignedGraph& d) {
  const int n = d.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> touched(n, 0);
  for (const auto* set : {&d.pos(), &d.neg()}) {
    for (const Edge& e : *set) {
      parent[find(e.u)] = find(e.v);
      touched[e.u] = touched[e.v] = 1;
    }
  }
  std::vector<int> slot(n, -1);
  std::vector<std::vector<Vertex>> out;
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

std::vector<SignedGraph> components(const SignedGraph& d) {
  const auto sets = component_vertex_sets(d);
  std::vector<int> slot(d.order(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Vertex v : sets[i]) slot[v] = static_cast<int>(i);
  std::vector<std::vector<Edge>> pos(sets.size()), neg(sets.size());
  for (const Edge& e : d.pos()) pos[slot[e.u]].push_back(e);
  for (const Edge& e : d.neg()) neg[slot[e.u]].push_back(e);
  std::vector<SignedGraph> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    out.emplace_back(d.order(), std::move(pos[i]), std::move(neg[i]));
  return out;
}

SignedGraph induced(const SignedGraph& d, const std::vector<Vertex>& vertices) {
  std::vector<int> slot(d.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require(vertices[i] >= 0 && vertices[i] < d.order(), "vertex out of range");
    require(slot[vertices[i]] < 0, "repeated vertex in induced subgraph");
    slot[vertices[i]] = static_cast<int>(i);
  }
  auto keep = [&](const std::vector<Edge>& edges) {
    std::vector<Edge> out;
    for (const Edge& e : edges)
      if (slot[e.u] >= 0 && slot[e.v] >= 0) out.emplace_back(slot[e.u], slot[e.v]);
    return out;
  };
  return SignedGraph(static_cast<int>(vertices.size()), keep(d.pos()),
                     keep(d.neg()));
}

std::vector<Vertex> non_isolated(const SignedGraph& d) {
  const auto deg = d.degrees();
  std::vector<Vertex> out;
  for (int v = 0; v < d.order(); ++v)
    if (deg[v] > 0) out.push_back(v);
  return out;
}

SignedGraph support(const SignedGraph& d) { return induced(d, non_isolated(d)); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges())
    edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), std::move(edges));
}

// --- constructors ------------------------------------------------------------

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(e));
}

}  // namespace gmm
