#include "gmm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "gmm/bounds.hpp"
#include "gmm/solver.hpp"

namespace gmm {

namespace {

struct Builder {
  std::vector<Edge> edges;
  std::vector<std::string> roles;
  std::vector<int> colors;

  int add(std::string role, int color = 1) {
    roles.push_back(std::move(role));
    colors.push_back(color);
    return static_cast<int>(roles.size()) - 1;
  }
  void link(int a, int b) { edges.emplace_back(a, b); }
  int order() const { return static_cast<int>(roles.size()); }
  Graph graph() const { return Graph(order(), edges); }
};

void require_cubic(const Graph& g) {
  require(is_cubic(g), "graph must be 3-regular");
}

}  // namespace

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

double Gap::low_at(double p) const { return bound_b(p, low); }
double Gap::high_at(double p) const { return bound_b(p, high); }

// --- oracles -----------------------------------------------------------------------

std::optional<std::vector<Vertex>> find_hamcycle(const Graph& g) {
  const int n = g.order();
  if (n > 14) fail(ErrorKind::Infeasible, "brute_force_hamcycle is limited to 14 vertices");
  if (n < 3) return std::nullopt;
  std::vector<Vertex> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<bool()> extend = [&]() -> bool {
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == n) return g.has_edge(last, 0);
    for (Vertex w : g.neighbors(last)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (extend()) return path;
  return std::nullopt;
}

bool brute_force_hamcycle(const Graph& g) { return find_hamcycle(g).has_value(); }

bool brute_force_hampath(const Graph& g) {
  const int n = g.order();
  if (n > 20) fail(ErrorKind::Infeasible, "brute_force_hampath is limited to 20 vertices");
  if (n <= 1) return true;
  // reach[S] = bitmask of end vertices of paths covering exactly S
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1u << v;
  std::vector<std::uint32_t> nbmask(n, 0);
  for (const Edge& e : g.edges()) {
    nbmask[e.u] |= 1u << e.v;
    nbmask[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t ends = reach[s];
    if (!ends) continue;
    for (int v = 0; v < n; ++v) {
      if (!(ends >> v & 1u)) continue;
      std::uint32_t next = nbmask[v] & ~s;
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        reach[s | (1u << w)] |= 1u << w;
      }
    }
  }
  return reach[full] != 0;
}

int brute_force_maxcut(const Graph& g) {
  const int n = g.order();
  if (n > 20) fail(ErrorKind::Infeasible, "brute_force_maxcut is limited to 20 vertices");
  if (n <= 1) return 0;
  int best = 0;
  // vertex n-1 stays on side 0
  for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
    int cut = 0;
    for (const Edge& e : g.edges()) cut += ((s >> e.u) ^ (s >> e.v)) & 1u;
    best = std::max(best, cut);
  }
  return best;
}

void ThreePartitionInstance::validate() const {
  require(!items.empty() && items.size() % 3 == 0, "3-Partition needs 3m items");
  require(A >= 8, "3-Partition instances need A >= 8");
  long long sum = 0;
  for (int a : items) {
    require(4 * a > A && 2 * a < A, "3-Partition items must satisfy A/4 < a_i < A/2");
    sum += a;
  }
  require(sum == static_cast<long long>(m()) * A, "3-Partition items must sum to mA");
}

std::optional<Grouping> find_threepartition(const ThreePartitionInstance& inst) {
  inst.validate();
  if (inst.m() > 4) fail(ErrorKind::Infeasible, "brute_force_threepartition is limited to m <= 4");
  const int k = static_cast<int>(inst.items.size());
  std::vector<char> used(k, 0);
  Grouping groups;
  std::function<bool()> solve = [&]() -> bool {
    int first = 0;
    while (first < k && used[first]) ++first;
    if (first == k) return true;
    used[first] = 1;
    for (int j = first + 1; j < k; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      for (int l = j + 1; l < k; ++l) {
        if (used[l] || inst.items[first] + inst.items[j] + inst.items[l] != inst.A) continue;
        used[l] = 1;
        groups.push_back({first, j, l});
        if (solve()) return true;
        groups.pop_back();
        used[l] = 0;
      }
      used[j] = 0;
    }
    used[first] = 0;
    return false;
  };
  if (solve()) return groups;
  return std::nullopt;
}

bool brute_force_threepartition(const ThreePartitionInstance& inst) {
  return find_threepartition(inst).has_value();
}

// --- Hamiltonian cycle and path --------------------------------------------------------

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return false;
  return g.order() > 0;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

std::vector<Graph> cubic_graphs(int n) {
  require(n >= 4 && n % 2 == 0, "3-regular graphs need an even order >= 4");
  if (n > 10) fail(ErrorKind::Infeasible, "cubic graph enumeration is limited to 10 vertices");
  std::vector<Graph> found;
  std::vector<int> deficit(n, 3);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  // Fill the lowest vertex with spare degree from partners above `after`.
  std::function<void(int)> extend = [&](int after) {
    int v = 0;
    while (v < n && deficit[v] == 0) ++v;
    if (v == n) {
      Graph g(n, edges);
      if (!is_connected(g)) return;
      for (const Graph& h : found)
        if (is_isomorphic(g, h)) return;
      found.push_back(std::move(g));
      return;
    }
    for (int w = std::max(v, after) + 1; w < n; ++w) {
      if (deficit[w] == 0 || adj[v][w]) continue;
      adj[v][w] = adj[w][v] = 1;
      --deficit[v];
      --deficit[w];
      edges.emplace_back(v, w);
      extend(deficit[v] > 0 ? w : 0);
      edges.pop_back();
      ++deficit[v];
      ++deficit[w];
      adj[v][w] = adj[w][v] = 0;
    }
  };
  extend(0);
  return found;
}

ReductionInstance gen_hamcycle(const Graph& g) {
  require_cubic(g);
  ReductionInstance out;
  out.left = cycle_graph(g.order());
  out.right = g;
  out.meta.source = "Hamiltonian cycle in a 3-regular graph";
  out.meta.gap = Gap{1, 3};
  if (g.order() <= 14)
    out.meta.answer = brute_force_hamcycle(g) ? Answer::Yes : Answer::No;
  return out;
}

ReductionInstance gen_path_variant(const Graph& g, Vertex v, const Edge& e) {
  require_cubic(g);
  require(v >= 0 && v < g.order(), "vertex out of range");
  require(e.u == v || e.v == v, "edge is not incident to the chosen vertex");
  require(g.has_edge(e.u, e.v), "edge is not in the graph");
  const int n = g.order();
  const Vertex u = e.u == v ? e.v : e.u;
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (!(f == e)) edges.push_back(f);
  edges.emplace_back(v, n);
  edges.emplace_back(u, n + 1);
  ReductionInstance out;
  out.left = path_graph(n + 2);
  out.right = Graph(n + 2, std::move(edges));
  out.meta.source = "Hamiltonian path through a removed edge of a 3-regular graph";
  out.meta.gap = Gap{1, 2};
  if (n + 2 <= 20)
    out.meta.answer = brute_force_hampath(out.right) ? Answer::Yes : Answer::No;
  out.meta.notes.push_back("left is the path on n+2 vertices");
  return out;
}

// --- 3-Partition trees -----------------------------------------------------------------

namespace {

struct PathNodes {
  std::vector<int> black;
  std::vector<std::array<int, 3>> red;
  std::vector<int> orange;
};

PathNodes add_decorated_path(Builder& b, int length) {
  PathNodes p;
  for (int i = 0; i < length; ++i) {
    const int x = b.add("black");
    p.black.push_back(x);
    std::array<int, 3> r{};
    for (int& y : r) {
      y = b.add("red");
      b.link(x, y);
    }
    p.red.push_back(r);
    const int o = b.add("orange");
    b.link(x, o);
    p.orange.push_back(o);
    if (i > 0) b.link(p.black[i - 1], x);
  }
  return p;
}

}  // namespace

ReductionInstance gen_threepartition_trees(const ThreePartitionInstance& inst) {
  inst.validate();
  const int m = inst.m();

  Builder t1;
  std::vector<PathNodes> short_paths;
  for (int a : inst.items) short_paths.push_back(add_decorated_path(t1, a));
  // e1 is the first black node of a path, e2 the last
  for (int i = 0; i + 1 < 3 * m; ++i)
    t1.link(short_paths[i].orange.front(), short_paths[i + 1].orange.back());
  int pinks = 0;
  for (const auto& p : short_paths)
    for (std::size_t k = 1; k + 1 < p.black.size(); ++k)
      for (int r = 0; r < 2; ++r) {
        const int pink = t1.add("pink");
        t1.link(p.black[k], pink);
        const int blue = t1.add("blue");
        t1.link(pink, blue);
        ++pinks;
      }

  Builder t2;
  std::vector<PathNodes> long_paths;
  for (int i = 0; i < m; ++i) long_paths.push_back(add_decorated_path(t2, inst.A));
  std::vector<char> linked(t2.order(), 0);
  for (int i = 0; i + 1 < m; ++i) {
    const int a = long_paths[i].red.front()[0];
    const int c = long_paths[i + 1].red.back()[0];
    t2.link(a, c);
    linked[a] = linked[c] = 1;
  }
  std::vector<int> free_reds;
  for (const auto& p : long_paths)
    for (const auto& r : p.red)
      for (int y : r)
        if (!linked[y]) free_reds.push_back(y);
  require(static_cast<int>(free_reds.size()) >= pinks, "not enough degree-1 red nodes");
  for (int k = 0; k < pinks; ++k) {
    const int blue = t2.add("blue");
    t2.link(free_reds[k], blue);
    const int pink = t2.add("pink");
    t2.link(blue, pink);
  }

  ReductionInstance out;
  out.left = t1.graph();
  out.right = t2.graph();
  out.meta.source = "3-Partition with A = " + std::to_string(inst.A) + ", m = " + std::to_string(m);
  out.meta.gap = Gap{2, 3};
  out.meta.left_roles = t1.roles;
  out.meta.right_roles = t2.roles;
  if (m <= 4) out.meta.answer = brute_force_threepartition(inst) ? Answer::Yes : Answer::No;
  return out;
}

Alignment partition_alignment(const ThreePartitionInstance& inst, const Grouping& groups) {
  inst.validate();
  const int m = inst.m();
  require(static_cast<int>(groups.size()) == m, "grouping must have m groups");
  std::vector<char> seen(inst.items.size(), 0);
  for (const auto& g : groups) {
    int sum = 0;
    for (int i : g) {
      require(i >= 0 && i < static_cast<int>(inst.items.size()) && !seen[i],
              "grouping must use every item exactly once");
      seen[i] = 1;
      sum += inst.items[i];
    }
    require(sum == inst.A, "every group must sum to A");
  }

  const ReductionInstance trees = gen_threepartition_trees(inst);
  const auto& r1 = trees.meta.left_roles;
  const auto& r2 = trees.meta.right_roles;
  const Graph& t1 = trees.left;
  const Graph& t2 = trees.right;
  const int n = t1.order();

  // Black nodes of path k start at block_start[k]; a block is black, 3 red, orange.
  auto starts = [](const std::vector<int>& lengths) {
    std::vector<int> s(lengths.size());
    int at = 0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      s[k] = at;
      at += 5 * lengths[k];
    }
    return s;
  };
  const std::vector<int> s1 = starts(inst.items);
  const std::vector<int> s2 = starts(std::vector<int>(m, inst.A));

  std::vector<Vertex> img(n, -1);
  for (int gi = 0; gi < m; ++gi) {
    int offset = 0;
    for (int item : groups[gi]) {
      for (int k = 0; k < inst.items[item]; ++k) {
        const int src = s1[item] + 5 * k;
        const int dst = s2[gi] + 5 * (offset + k);
        for (int d = 0; d < 5; ++d) img[src + d] = dst + d;  // black, reds, orange
      }
      offset += inst.items[item];
    }
  }
  // blue -> blue in order, pink -> the pink hanging off the image blue
  std::vector<int> blues2;
  for (int v = 0; v < n; ++v)
    if (r2[v] == "blue") blues2.push_back(v);
  std::size_t next = 0;
  for (int v = 0; v < n; ++v) {
    if (r1[v] != "blue") continue;
    const int b2 = blues2.at(next++);
    img[v] = b2;
    const int pink1 = t1.neighbors(v).front();
    int pink2 = -1;
    for (int w : t2.neighbors(b2))
      if (r2[w] == "pink") pink2 = w;
    img[pink1] = pink2;
  }
  return Alignment(std::move(img), n);
}

// --- colour conversion -------------------------------------------------------------------

long long color_conversion_order(const ColoredGraph& g) {
  const long long n = g.graph.order();
  long long total = n;
  for (int c : g.colors) total += c * n * n;
  return total;
}

namespace {

Graph convert(const ColoredGraph& g) {
  const int n = g.graph.order();
  std::vector<Edge> edges = g.graph.edges();
  int next = n;
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < g.colors[v] * n * n; ++k) edges.emplace_back(v, next++);
  return Graph(next, std::move(edges));
}

}  // namespace

ReductionInstance gen_color_conversion(const ColoredGraph& g, const ColoredGraph& h) {
  require(g.graph.order() == h.graph.order(), "coloured graphs must have the same order");
  require(g.histogram() == h.histogram(), "coloured graphs must have the same colour histogram");
  ReductionInstance out;
  out.left = convert(g);
  out.right = convert(h);
  out.colored = std::make_pair(g, h);
  out.meta.source = "colour-preserving distance";
  return out;
}

Alignment extend_color_alignment(const ColoredGraph& g, const ColoredGraph& h,
                                 const Alignment& pi) {
  const int n = g.graph.order();
  require(pi.source_order() == n && pi.is_bijection(), "alignment must be a bijection");
  for (int v = 0; v < n; ++v)
    require(g.colors[v] == h.colors[pi[v]], "alignment must preserve colours");
  auto first_leaf = [n](const ColoredGraph& c) {
    std::vector<int> f(n);
    int at = n;
    for (int v = 0; v < n; ++v) {
      f[v] = at;
      at += c.colors[v] * n * n;
    }
    return f;
  };
  const auto fg = first_leaf(g), fh = first_leaf(h);
  const int total = static_cast<int>(color_conversion_order(g));
  std::vector<Vertex> img(total);
  for (int v = 0; v < n; ++v) {
    img[v] = pi[v];
    for (int k = 0; k < g.colors[v] * n * n; ++k) img[fg[v] + k] = fh[pi[v]] + k;
  }
  return Alignment(std::move(img), total);
}

// --- additive gadget ---------------------------------------------------------------------

std::pair<int, int> gadget_parameters(double p, double eps) {
  check_p(p);
  require(eps > 0 && std::isfinite(eps), "eps must be positive and finite");
  int m = 1;
  while (!(bound_b(p, 2 * m) > bound_b(p, m) + eps)) {
    ++m;
    if (m > 1'000'000) fail(ErrorKind::InvalidArgument, "no finite m satisfies the gap");
  }
  const double target = bound_b(p, 2 * m);
  int o = 1;
  while (bound_b(p, (o + 1) / 2) < target) ++o;
  return {m, o};
}

namespace {

struct GadgetNodes {
  std::vector<int> p1, p2, red;
};

GadgetNodes add_gadget(Builder& b, int m, int o, int v, int w) {
  GadgetNodes gn;
  for (int i = 0; i < m; ++i) gn.p1.push_back(b.add("blue", 2));
  for (int i = 0; i < m; ++i) gn.p2.push_back(b.add("blue", 2));
  for (int i = 0; i + 1 < m; ++i)
    for (int k = 0; k < o; ++k) {
      const int r = b.add("red", 3);
      gn.red.push_back(r);
      for (int x : {gn.p1[i], gn.p1[i + 1], gn.p2[i], gn.p2[i + 1]}) b.link(r, x);
    }
  if (v >= 0)
    for (int x : gn.p1) b.link(v, x);
  if (w >= 0)
    for (int x : gn.p2) b.link(w, x);
  return gn;
}

int gadget_size(int m, int o) { return 2 * m + (m - 1) * o; }

}  // namespace

AdditiveGadget gen_additive_gadget(const Graph& g, double p, double eps,
                                   long long conversion_cap) {
  require_cubic(g);
  const auto [m, o] = gadget_parameters(p, eps);
  const int n = g.order();
  const Graph cn = cycle_graph(n);

  auto build = [&, m = m, o = o](const Graph& base, int isolated) {
    Builder b;
    for (int v = 0; v < n; ++v) b.add("black", 1);
    for (const Edge& e : base.edges()) add_gadget(b, m, o, e.u, e.v);
    for (int k = 0; k < isolated; ++k) add_gadget(b, m, o, -1, -1);
    return b;
  };
  // both sides are padded to 3n gadgets
  const int total = 3 * n;
  const int extra_left = total - static_cast<int>(g.size());
  const int extra_right = total - static_cast<int>(cn.size());
  const Builder left = build(g, extra_left);
  const Builder right = build(cn, extra_right);

  AdditiveGadget out;
  out.n = n;
  out.m = m;
  out.o = o;
  out.gadgets_left = static_cast<int>(g.size()) + extra_left;
  out.gadgets_right = static_cast<int>(cn.size()) + extra_right;
  ColoredGraph cl(left.graph(), left.colors), cr(right.graph(), right.colors);
  auto& inst = out.instance;
  inst.meta.source = "Hamiltonian cycle via the additive gadget";
  inst.meta.gap = Gap{m, 2 * m};
  if (n <= 14) inst.meta.answer = brute_force_hamcycle(g) ? Answer::Yes : Answer::No;
  inst.meta.left_roles = left.roles;
  inst.meta.right_roles = right.roles;
  inst.meta.notes.push_back("m = " + std::to_string(m) + ", o = " + std::to_string(o));
  inst.meta.notes.push_back(std::to_string(extra_left) + " isolated gadgets on the G side, " +
                            std::to_string(extra_right) + " on the cycle side");
  const long long converted = color_conversion_order(cl);
  if (converted <= conversion_cap) {
    ReductionInstance conv = gen_color_conversion(cl, cr);
    inst.left = std::move(conv.left);
    inst.right = std::move(conv.right);
    out.converted = true;
  } else {
    inst.left = cl.graph;
    inst.right = cr.graph;
    inst.meta.notes.push_back("colour conversion omitted: converted order " +
                              std::to_string(converted) + " exceeds cap " +
                              std::to_string(conversion_cap));
  }
  inst.colored = std::make_pair(std::move(cl), std::move(cr));
  return out;
}

Alignment gadget_alignment(const Graph& g, const AdditiveGadget& gadget,
                           const std::vector<Vertex>& cycle) {
  const int n = g.order();
  require(static_cast<int>(cycle.size()) == n, "cycle must visit every vertex");
  for (int i = 0; i < n; ++i)
    require(g.has_edge(cycle[i], cycle[(i + 1) % n]), "sequence is not a Hamiltonian cycle");
  const int m = gadget.m, o = gadget.o;
  const int size = gadget_size(m, o);
  const Graph cn = cycle_graph(n);

  std::vector<Vertex> pos(n);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;

  // Gadget k of a side occupies [n + k*size, n + (k+1)*size).
  auto base_of = [&](int k) { return n + k * size; };
  auto cycle_gadget = [&](Vertex a, Vertex b) {
    const auto& es = cn.edges();
    return static_cast<int>(std::lower_bound(es.begin(), es.end(), Edge(a, b)) - es.begin());
  };

  const int total = gadget.instance.colored->first.graph.order();
  std::vector<Vertex> img(total, -1);
  for (int v = 0; v < n; ++v) img[v] = pos[v];
  int next_isolated = static_cast<int>(cn.size());
  const auto& ge = g.edges();
  for (int k = 0; k < static_cast<int>(ge.size()); ++k) {
    const Edge& e = ge[k];
    const Vertex a = pos[e.u], b = pos[e.v];
    const bool on_cycle = cn.has_edge(a, b);
    const int target = on_cycle ? cycle_gadget(a, b) : next_isolated++;
    // p1 hangs off e.u; keep it next to e.u's image
    const bool flip = on_cycle && Edge(a, b).u != a;
    const int src = base_of(k), dst = base_of(target);
    for (int i = 0; i < m; ++i) {
      img[src + i] = dst + (flip ? m + i : i);
      img[src + m + i] = dst + (flip ? i : m + i);
    }
    for (int r = 2 * m; r < size; ++r) img[src + r] = dst + r;
  }
  // isolated gadgets of G' fill the isolated slots left over
  for (int k = static_cast<int>(ge.size()); k < gadget.gadgets_left; ++k) {
    const int src = base_of(k), dst = base_of(next_isolated++);
    for (int r = 0; r < size; ++r) img[src + r] = dst + r;
  }
  return Alignment(std::move(img), total);
}

// --- cut gadget ------------------------------------------------------------------------------

CutGadget gen_cutnorm_instance(const Graph& g) {
  const int n = g.order();
  const int me = static_cast<int>(g.size());
  CutGadget out;
  out.A = Eigen::MatrixXi::Zero(2 * me, n);
  for (int i = 0; i < me; ++i) {
    const Edge& e = g.edges()[i];  // oriented e.u -> e.v
    out.A(2 * i, e.u) = 1;
    out.A(2 * i + 1, e.v) = 1;
    out.A(2 * i, e.v) = -1;
    out.A(2 * i + 1, e.u) = -1;
  }
  const int N = 2 * me + n;
  out.B = SignedMatrix::Zero(N, N);
  out.B.topRightCorner(2 * me, n) = out.A.cast<double>();
  out.B.bottomLeftCorner(n, 2 * me) = out.A.transpose().cast<double>();
  out.delta = signed_graph_from_matrix(out.B);
  out.f_prime = Graph(N, out.delta.pos());
  out.h_prime = Graph(N, out.delta.neg());

  out.leaves_unit = (n * n + 3) / 4 + n;
  std::vector<Edge> fe = out.delta.pos(), he = out.delta.neg();
  std::vector<std::string> roles(N, "row");
  for (int j = 0; j < n; ++j) roles[2 * me + j] = "vertex";
  int next = N;
  for (int j = 0; j < n; ++j) {
    const int count = (j + 1) * out.leaves_unit;
    for (int k = 0; k < count; ++k) {
      fe.emplace_back(2 * me + j, next);
      he.emplace_back(2 * me + j, next);
      roles.push_back("leaf");
      ++next;
    }
  }
  auto& inst = out.instance;
  inst.left = Graph(next, std::move(fe));
  inst.right = Graph(next, std::move(he));
  inst.meta.source = "Max-Cut via the cut norm";
  inst.meta.left_roles = roles;
  inst.meta.right_roles = roles;
  if (n <= 20) {
    inst.meta.claimed_distance = 2.0 * brute_force_maxcut(g);
    inst.meta.answer = Answer::Unknown;
  }
  inst.meta.notes.push_back("rows of A are vertices 0.." + std::to_string(2 * me - 1) +
                            ", v_i is vertex " + std::to_string(2 * me) + "+i-1");
  return out;
}

}  // namespace gmm
