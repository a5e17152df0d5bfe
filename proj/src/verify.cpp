#include "gmm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "gmm/bounds.hpp"
#include "gmm/generators.hpp"
#include "gmm/solver.hpp"

namespace gmm {

namespace {

constexpr double kEps = 1e-8;

struct Recorder {
  SuiteReport& report;

  void check(bool ok, const std::string& line) {
    report.lines.push_back((ok ? "ok    " : "FAIL  ") + line);
    if (!ok) report.passed = false;
  }
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size());
}

std::vector<Graph> cubic_family(const VerifyOptions& o, bool with_petersen) {
  std::vector<Graph> out;
  for (int n = 4; n <= o.max_cubic_order; n += 2)
    for (Graph& g : cubic_graphs(n)) out.push_back(std::move(g));
  if (with_petersen && o.petersen) out.push_back(petersen_graph());
  return out;
}

void suite_hamcycle(const VerifyOptions& o, Recorder& r) {
  for (const Graph& g : cubic_family(o, true)) {
    const ReductionInstance inst = gen_hamcycle(g);
    const bool yes = inst.meta.answer == Answer::Yes;
    for (double p : o.ps) {
      const SolveResult s = exact_distance(inst.left, inst.right, NormSpec::op(p));
      const bool low = s.value <= bound_b(p, 1) + kEps;
      bool ok = s.exact && low == yes;
      if (!yes) ok = ok && s.value >= bound_b(p, 3) - kEps;
      r.check(ok, "cubic " + describe(g) + " p=" + format_p(p) + " hamiltonian=" +
                      (yes ? "yes" : "no") + " dist=" + num(s.value));
    }
  }
}

void suite_path(const VerifyOptions& o, Recorder& r) {
  for (const Graph& g : cubic_family(o, true)) {
    const bool yes = brute_force_hamcycle(g);
    const Vertex v = 0;
    const Edge e1(v, g.neighbors(v)[0]), e2(v, g.neighbors(v)[1]);
    for (double p : o.ps) {
      bool any = false;
      bool exact = true;
      double best = kInf;
      for (const Edge& e : {e1, e2}) {
        const ReductionInstance inst = gen_path_variant(g, v, e);
        const SolveResult s = exact_distance(inst.left, inst.right, NormSpec::op(p));
        exact = exact && s.exact;
        best = std::min(best, s.value);
        any = any || s.value <= bound_b(p, 1) + kEps;
      }
      r.check(exact && any == yes, "cubic " + describe(g) + " p=" + format_p(p) +
                                       " hamiltonian=" + (yes ? "yes" : "no") +
                                       " best variant dist=" + num(best));
    }
  }
}

std::string items_text(const ThreePartitionInstance& inst) {
  std::string s = "A=" + std::to_string(inst.A) + " a=(";
  for (std::size_t i = 0; i < inst.items.size(); ++i)
    s += (i ? "," : "") + std::to_string(inst.items[i]);
  return s + ")";
}

void suite_threepartition(const VerifyOptions& o, Recorder& r) {
  const std::vector<ThreePartitionInstance> yes = {
      {10, {4, 4, 3, 3, 3, 3}}, {9, {3, 3, 3}},          {9, {3, 3, 3, 3, 3, 3}},
      {11, {3, 5, 4, 4, 3, 3}}, {12, {4, 4, 4, 4, 4, 4}}, {13, {5, 4, 4, 4, 5, 4}},
  };
  for (const auto& inst : yes) {
    const auto groups = find_threepartition(inst);
    if (!groups) {
      r.check(false, items_text(inst) + " expected a YES instance");
      continue;
    }
    const ReductionInstance trees = gen_threepartition_trees(inst);
    const Alignment pi = partition_alignment(inst, *groups);
    const SignedGraph d = mismatch(apply_alignment(trees.left, pi), trees.right);
    const MismatchProfile prof = mismatch_profile(trees.left, trees.right, pi);
    bool colours = true;
    for (int v = 0; v < trees.left.order(); ++v)
      colours = colours && trees.meta.left_roles[v] == trees.meta.right_roles[pi[v]];
    const bool stars = is_star_forest(d);
    r.check(stars && prof.mmc <= 2 && colours,
            items_text(inst) + " |T|=" + std::to_string(trees.left.order()) +
                " stars=" + (stars ? "yes" : "no") + " mmc=" + std::to_string(prof.mmc) +
                " colour-preserving=" + (colours ? "yes" : "no"));
    for (double p : o.ps) {
      const double mu = mismatch_norm(d, NormSpec::op(p)).value;
      r.check(std::abs(mu - bound_b(p, 2)) <= kEps,
              items_text(inst) + " p=" + format_p(p) + " mu=" + num(mu) +
                  " b_p(2)=" + num(bound_b(p, 2)));
    }
  }

  const ThreePartitionInstance no{16, {5, 5, 5, 5, 5, 7}};
  const bool solvable = brute_force_threepartition(no);
  r.check(!solvable, items_text(no) + " has no 3-partition");
  const ReductionInstance trees = gen_threepartition_trees(no);
  for (double p : o.ps) {
    LocalSearchOptions ls;
    ls.seed = o.seed;
    ls.restarts = o.restarts;
    const SolveResult s = local_search(trees.left, trees.right, NormSpec::op(p), ls);
    r.check(s.value >= bound_b(p, 3) - 1e-6,
            items_text(no) + " p=" + format_p(p) + " best of " + std::to_string(o.restarts) +
                " restarts=" + num(s.value) + " b_p(3)=" + num(bound_b(p, 3)));
  }
}

void suite_cut(const VerifyOptions&, Recorder& r) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    int mismatched = 0;
    int count = 0;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> es;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask >> k & 1u) es.push_back(all[k]);
      const Graph g(n, es);
      const CutGadget c = gen_cutnorm_instance(g);
      const int target = 2 * brute_force_maxcut(g);
      const double b = cut_norm_exact(c.B).value;
      const auto& inst = c.instance;
      const double mu = mismatch_norm(mismatch(inst.left, inst.right), NormSpec::cut()).value;
      ++count;
      if (b != target || mu != target) {
        ++mismatched;
        r.check(false, "graph " + describe(g) + " mask=" + std::to_string(mask) +
                           " ||B||=" + num(b) + " mu=" + num(mu) +
                           " 2*maxcut=" + std::to_string(target));
      }
    }
    r.check(mismatched == 0, "n=" + std::to_string(n) + ": " + std::to_string(count) +
                                 " labelled graphs, ||B||_cut = mu_cut(F - H) = 2*maxcut");
  }
}

// Minimum over colour-preserving bijections, by enumeration.
double color_distance(const ColoredGraph& g, const ColoredGraph& h, const NormSpec& spec) {
  const int n = g.graph.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInf;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = g.colors[v] == h.colors[perm[v]];
    if (!ok) continue;
    const Alignment pi(perm, n);
    best = std::min(best, mismatch_norm(mismatch(apply_alignment(g.graph, pi), h.graph), spec).value);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

void suite_colorconv(const VerifyOptions& o, Recorder& r) {
  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < o.colored_pairs; ++k) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int colors = 1 + static_cast<int>(rng() % 2);
    std::vector<int> cg(n), ch;
    for (int& c : cg) c = 1 + static_cast<int>(rng() % colors);
    ch = cg;
    std::shuffle(ch.begin(), ch.end(), rng);
    const ColoredGraph g(random_graph(n, 0.5, rng), cg), h(random_graph(n, 0.5, rng), ch);
    const ReductionInstance conv = gen_color_conversion(g, h);
    for (double p : o.ps) {
      const NormSpec spec = NormSpec::op(p);
      const double direct = color_distance(g, h, spec);
      const SolveResult s = exact_distance(conv.left, conv.right, spec);
      r.check(s.exact && std::abs(direct - s.value) <= kEps,
              "pair " + std::to_string(k) + " n=" + std::to_string(n) + " colours=" +
                  std::to_string(colors) + " |converted|=" + std::to_string(conv.left.order()) +
                  " p=" + format_p(p) + " coloured=" + num(direct) + " converted=" + num(s.value));
    }
  }
}

void suite_gadget(const VerifyOptions&, Recorder& r) {
  const Graph g = complete_graph(4);
  const double p = 2.0, eps = 1.0;
  const AdditiveGadget gad = gen_additive_gadget(g, p, eps);
  const int n = g.order(), m = gad.m, o = gad.o;
  r.check(gad.gadgets_left == 3 * n && gad.gadgets_right == 3 * n,
          "gadgets per side: left=" + std::to_string(gad.gadgets_left) + " right=" +
              std::to_string(gad.gadgets_right) + " expected 3n=" + std::to_string(3 * n));
  r.check(gad.gadgets_left == gad.gadgets_right, "both sides hold the same number of gadgets");

  const bool m_ok = bound_b(p, 2 * m) > bound_b(p, m) + eps &&
                    (m == 1 || !(bound_b(p, 2 * (m - 1)) > bound_b(p, m - 1) + eps));
  const bool o_ok = bound_b(p, (o + 1) / 2) >= bound_b(p, 2 * m) &&
                    (o == 1 || bound_b(p, o / 2) < bound_b(p, 2 * m));
  r.check(m_ok && o_ok, "m=" + std::to_string(m) + " o=" + std::to_string(o) +
                            " are the smallest values meeting both gap conditions");

  const auto& [cl, cr] = *gad.instance.colored;
  const int size = 2 * m + (m - 1) * o;
  bool shape = true;
  for (const auto* side : {&cl, &cr}) {
    const int gadgets = (side->graph.order() - n) / size;
    shape = shape && (side->graph.order() - n) % size == 0;
    for (int k = 0; k < gadgets; ++k) {
      int blue = 0, red = 0;
      for (int v = n + k * size; v < n + (k + 1) * size; ++v) {
        blue += side->colors[v] == 2;
        red += side->colors[v] == 3;
      }
      shape = shape && blue == 2 * m && red == (m - 1) * o;
    }
  }
  r.check(shape, "every gadget has 2m=" + std::to_string(2 * m) + " blue and (m-1)o=" +
                     std::to_string((m - 1) * o) + " red nodes");

  const auto cycle = find_hamcycle(g);
  r.check(cycle.has_value(), "K4 is Hamiltonian");
  if (!cycle) return;
  const Alignment pi = gadget_alignment(g, gad, *cycle);
  bool colours = true;
  for (int v = 0; v < cl.graph.order(); ++v) colours = colours && cl.colors[v] == cr.colors[pi[v]];
  r.check(colours, "derived alignment is colour-preserving");
  const SignedGraph d = mismatch(apply_alignment(cl.graph, pi), cr.graph);
  const auto deg = d.degrees();
  bool black_m = true;
  for (int v = 0; v < n; ++v) black_m = black_m && deg[pi[v]] == m;
  r.check(black_m, "every black vertex has mismatch count m=" + std::to_string(m));
  r.check(is_star_forest(d), "mismatch graph is a union of stars");
  const double mu = mismatch_norm(d, NormSpec::op(p)).value;
  r.check(std::abs(mu - bound_b(p, m)) <= kEps,
          "mu_2=" + num(mu) + " b_2(m)=" + num(bound_b(p, m)));
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"hamcycle", "path", "3part", "cut", "colorconv", "gadget"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  SuiteReport report;
  report.name = name;
  Recorder r{report};
  const auto start = std::chrono::steady_clock::now();
  if (name == "hamcycle") suite_hamcycle(options, r);
  else if (name == "path") suite_path(options, r);
  else if (name == "3part") suite_threepartition(options, r);
  else if (name == "cut") suite_cut(options, r);
  else if (name == "colorconv") suite_colorconv(options, r);
  else if (name == "gadget") suite_gadget(options, r);
  else fail(ErrorKind::InvalidArgument, "unknown verify suite '" + name + "'");
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gmm
