#include "gmm/solver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <thread>

namespace gmm {

namespace {

constexpr double kTol = 1e-9;

// Dense 0/1 adjacency of an n-vertex graph padded to N.
struct Dense {
  int n = 0;
  std::vector<std::uint8_t> a;
  std::vector<std::vector<Vertex>> nb;
  std::vector<int> deg;

  Dense(const Graph& g, int N) : n(N), a(static_cast<std::size_t>(N) * N, 0), nb(N), deg(N, 0) {
    for (const Edge& e : g.edges()) {
      a[e.u * N + e.v] = a[e.v * N + e.u] = 1;
      nb[e.u].push_back(e.v);
      nb[e.v].push_back(e.u);
    }
    for (int v = 0; v < N; ++v) deg[v] = static_cast<int>(nb[v].size());
  }
  bool operator()(int u, int v) const { return a[u * n + v] != 0; }
};

// Twin classes: equal open or equal closed neighbourhoods. The two relations
// never overlap on a vertex with a nontrivial class, so their union is an
// equivalence.
std::vector<int> twin_classes(const Dense& d) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> open, closed;
  for (int v = 0; v < d.n; ++v) {
    std::vector<Vertex> o = d.nb[v];
    std::sort(o.begin(), o.end());
    std::vector<Vertex> c = o;
    c.insert(std::upper_bound(c.begin(), c.end(), v), v);
    open[o].push_back(v);
    closed[c].push_back(v);
  }
  std::vector<int> cls(d.n, -1);
  int next = 0;
  for (auto* groups : {&open, &closed})
    for (auto& [key, members] : *groups) {
      if (members.size() < 2) continue;
      for (Vertex v : members) cls[v] = next;
      ++next;
    }
  for (int v = 0; v < d.n; ++v)
    if (cls[v] < 0) cls[v] = next++;
  return cls;
}

SignedGraph mismatch_of(const Dense& g, const Dense& h, const std::vector<Vertex>& img) {
  const int N = g.n;
  std::vector<Edge> pos, neg;
  for (int u = 0; u < N; ++u)
    for (int w = u + 1; w < N; ++w) {
      const bool eg = g(u, w);
      const bool eh = h(img[u], img[w]);
      if (eg && !eh) pos.emplace_back(img[u], img[w]);
      if (!eg && eh) neg.emplace_back(img[u], img[w]);
    }
  return SignedGraph(N, std::move(pos), std::move(neg));
}

BoundCertificate root_bound(const Dense& g, const Dense& h, const NormSpec& spec) {
  std::vector<int> dg = g.deg, dh = h.deg;
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  int c = 0;
  long long total = 0;
  for (std::size_t i = 0; i < dg.size(); ++i) {
    c = std::max(c, std::abs(dg[i] - dh[i]));
    total += std::abs(dg[i] - dh[i]);
  }
  BoundCertificate out;
  out.c = c;
  out.value = spec_lower_bound(spec, c, (total + 1) / 2);
  out.witness = "every alignment forces some vertex to >= " + std::to_string(c) +
                " mismatches and >= " + std::to_string((total + 1) / 2) +
                " mismatched edges (sorted degree sequences)";
  return out;
}

void check_cut_order(const NormSpec& spec, int N, int cap) {
  if (spec.kind == NormKind::Cut && N > cap)
    fail(ErrorKind::Infeasible, "exact cut norm infeasible: exact search under cut is limited to " +
                                    std::to_string(cap) + " vertices, got " + std::to_string(N));
}

// --- local search --------------------------------------------------------------

struct Surrogate {
  long long primary = 0;
  long long secondary = 0;
  auto operator<=>(const Surrogate&) const = default;
};

class SwapClimber {
 public:
  SwapClimber(const Dense& g, const Dense& h, bool operator_kind)
      : g_(g), h_(h), n_(g.n), op_(operator_kind), mc_(n_), cnt_(n_ + 1), stamp_(n_, 0) {}

  void reset(std::vector<Vertex> img) {
    img_ = std::move(img);
    pre_.assign(n_, 0);
    for (int u = 0; u < n_; ++u) pre_[img_[u]] = u;
    std::fill(mc_.begin(), mc_.end(), 0);
    edges_ = 0;
    for (int u = 0; u < n_; ++u)
      for (int w = u + 1; w < n_; ++w)
        if (g_(u, w) != h_(img_[u], img_[w])) {
          ++mc_[u];
          ++mc_[w];
          ++edges_;
        }
    std::fill(cnt_.begin(), cnt_.end(), 0);
    sumsq_ = 0;
    max_ = 0;
    for (int c : mc_) {
      ++cnt_[c];
      sumsq_ += static_cast<long long>(c) * c;
      max_ = std::max(max_, c);
    }
  }

  Surrogate score() const {
    return op_ ? Surrogate{max_, sumsq_} : Surrogate{edges_, max_};
  }

  // Exchanges the images of u1 and u2.
  void swap(int u1, int u2) {
    const int t1 = img_[u1], t2 = img_[u2];
    ++epoch_;
    touched_.clear();
    auto mark = [&](int w) {
      if (w == u1 || w == u2 || stamp_[w] == epoch_) return;
      stamp_[w] = epoch_;
      touched_.push_back(w);
    };
    for (int w : g_.nb[u1]) mark(w);
    for (int w : g_.nb[u2]) mark(w);
    for (int x : h_.nb[t1]) mark(pre_[x]);
    for (int x : h_.nb[t2]) mark(pre_[x]);
    int d1 = 0, d2 = 0;
    for (int w : touched_) {
      const int tw = img_[w];
      const int before = (g_(u1, w) != h_(t1, tw)) + (g_(u2, w) != h_(t2, tw));
      const int a1 = g_(u1, w) != h_(t2, tw);
      const int a2 = g_(u2, w) != h_(t1, tw);
      d1 += a1 - (g_(u1, w) != h_(t1, tw));
      d2 += a2 - (g_(u2, w) != h_(t2, tw));
      change(w, a1 + a2 - before);
    }
    change(u1, d1);
    change(u2, d2);
    edges_ += d1 + d2;
    img_[u1] = t2;
    img_[u2] = t1;
    pre_[t1] = u2;
    pre_[t2] = u1;
    while (max_ > 0 && cnt_[max_] == 0) --max_;
  }

  const std::vector<Vertex>& image() const { return img_; }
  int mc(int u) const { return mc_[u]; }
  int max() const { return max_; }
  long long edges() const { return edges_; }

 private:
  void change(int v, int delta) {
    if (delta == 0) return;
    const long long old = mc_[v];
    --cnt_[old];
    mc_[v] += delta;
    ++cnt_[mc_[v]];
    sumsq_ += static_cast<long long>(mc_[v]) * mc_[v] - old * old;
    max_ = std::max(max_, mc_[v]);
  }

  const Dense& g_;
  const Dense& h_;
  int n_;
  bool op_;
  std::vector<Vertex> img_, pre_;
  std::vector<int> mc_, cnt_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
  std::vector<int> touched_;
  long long edges_ = 0, sumsq_ = 0;
  int max_ = 0;
};

// Greedy construction: sources in descending degree (ties: most placed
// neighbours), each sent to the free target with the fewest disagreements
// against placed vertices plus the gap between unplaced-neighbour counts.
// Without rng ties break by index, otherwise by random keys.
std::vector<Vertex> greedy_start(const Dense& g, const Dense& h, std::mt19937_64* rng) {
  const int N = g.n;
  std::vector<std::uint64_t> kg(N), kh(N);
  for (int v = 0; v < N; ++v) {
    kg[v] = rng ? (*rng)() : static_cast<std::uint64_t>(v);
    kh[v] = rng ? (*rng)() : static_cast<std::uint64_t>(v);
  }
  std::vector<Vertex> img(N, -1);
  std::vector<char> used(N, 0);
  // placed neighbours of each source / of each target
  std::vector<int> pg(N, 0), ph(N, 0), common(N, 0);
  for (int step = 0; step < N; ++step) {
    int u = -1;
    for (int v = 0; v < N; ++v) {
      if (img[v] >= 0) continue;
      if (u < 0 || g.deg[v] > g.deg[u] ||
          (g.deg[v] == g.deg[u] && (pg[v] > pg[u] || (pg[v] == pg[u] && kg[v] < kg[u]))))
        u = v;
    }
    std::fill(common.begin(), common.end(), 0);
    for (Vertex w : g.nb[u])
      if (img[w] >= 0)
        for (Vertex t : h.nb[img[w]]) ++common[t];
    int best = -1;
    long long best_cost = 0;
    for (int t = 0; t < N; ++t) {
      if (used[t]) continue;
      const long long cost = pg[u] + ph[t] - 2LL * common[t] +
                             std::abs((g.deg[u] - pg[u]) - (h.deg[t] - ph[t]));
      if (best < 0 || cost < best_cost || (cost == best_cost && kh[t] < kh[best])) {
        best = t;
        best_cost = cost;
      }
    }
    img[u] = best;
    used[best] = 1;
    for (Vertex w : g.nb[u]) ++pg[w];
    for (Vertex t : h.nb[best]) ++ph[t];
  }
  return img;
}

void climb(SwapClimber& s, int n, int max_stall, std::mt19937_64& rng) {
  if (n < 2) return;
  std::uniform_int_distribution<int> pick(0, n - 1);
  int stall = 0;
  while (stall < max_stall) {
    int u1 = pick(rng);
    if (rng() & 1) {
      // focus on a bottleneck vertex
      const int start = u1;
      for (int k = 0; k < n; ++k) {
        const int v = (start + k) % n;
        if (s.mc(v) == s.max()) {
          u1 = v;
          break;
        }
      }
    }
    int u2 = pick(rng);
    if (u2 == u1) u2 = (u2 + 1) % n;
    const Surrogate before = s.score();
    s.swap(u1, u2);
    if (s.score() < before) {
      stall = 0;
    } else {
      s.swap(u1, u2);
      ++stall;
    }
  }
}

struct Candidate {
  double value = 0;
  int restart = -1;
  std::vector<Vertex> img;
  NormValue norm;
};

bool better(const Candidate& a, const Candidate& b) {
  if (b.restart < 0) return a.restart >= 0;
  if (a.value != b.value) return a.value < b.value;
  return a.restart < b.restart;
}

SolveResult local_search_dense(const Dense& g, const Dense& h, const NormSpec& spec,
                               const LocalSearchOptions& options) {
  const int N = g.n;
  const int restarts = std::max(1, options.restarts);
  const int stall = options.max_stall > 0 ? options.max_stall : std::max(2 * N, 8);
  const int threads = std::clamp(options.threads > 0 ? options.threads : configured_threads(), 1,
                                 restarts);

  std::vector<Candidate> best(threads);
  auto worker = [&](int tid) {
    SwapClimber s(g, h, spec.is_operator());
    Candidate& mine = best[tid];
    for (int r = tid; r < restarts; r += threads) {
      std::mt19937_64 rng(options.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(r));
      s.reset(greedy_start(g, h, r == 0 ? nullptr : &rng));
      climb(s, N, stall, rng);
      // mu >= the forced bound of this alignment; skip what cannot win.
      const double lb = spec_lower_bound(spec, s.max(), s.edges());
      if (mine.restart >= 0 && lb > mine.value + 1e-12) continue;
      Candidate c;
      c.norm = mismatch_norm(mismatch_of(g, h, s.image()), spec);
      c.value = c.norm.value;
      c.restart = r;
      c.img = s.image();
      if (better(c, mine)) mine = std::move(c);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  Candidate winner;
  for (auto& c : best)
    if (better(c, winner)) winner = std::move(c);

  SolveResult out;
  out.value = winner.value;
  out.alignment = Alignment(std::move(winner.img), N);
  out.norm = std::move(winner.norm);
  out.lower_bound_used = root_bound(g, h, spec);
  out.nodes_explored = static_cast<std::uint64_t>(restarts);
  out.exact = false;
  return out;
}

// --- branch and bound -----------------------------------------------------------

class BranchAndBound {
 public:
  BranchAndBound(const Dense& g, const Dense& h, const NormSpec& spec, std::uint64_t budget)
      : g_(g), h_(h), spec_(spec), n_(g.n), budget_(budget) {
    gcls_ = twin_classes(g_);
    hcls_ = twin_classes(h_);
    const int classes = *std::max_element(hcls_.begin(), hcls_.end()) + 1;
    hmembers_.assign(classes, {});
    for (int t = 0; t < n_; ++t) hmembers_[hcls_[t]].push_back(t);
    build_order();
    img_.assign(n_, -1);
    pre_.assign(n_, -1);
    a_.assign(n_, 0);
    rg_ = g_.deg;
    rh_ = h_.deg;
  }

  // Returns false when the budget ran out.
  bool run(double incumbent, std::vector<Vertex> incumbent_img, NormValue incumbent_norm,
           double floor) {
    best_ = incumbent;
    best_img_ = std::move(incumbent_img);
    best_norm_ = std::move(incumbent_norm);
    floor_ = floor;
    if (best_ <= floor_ + kTol) return true;
    dfs(0, 0);
    return !out_of_budget_;
  }

  double best() const { return best_; }
  const std::vector<Vertex>& best_image() const { return best_img_; }
  const NormValue& best_norm() const { return best_norm_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void build_order() {
    std::vector<char> placed(n_, 0);
    std::vector<int> linked(n_, 0);
    order_.reserve(n_);
    auto place = [&](int v) {
      placed[v] = 1;
      order_.push_back(v);
      for (int w : g_.nb[v]) ++linked[w];
    };
    while (static_cast<int>(order_.size()) < n_) {
      int pick = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (pick < 0 || g_.deg[v] > g_.deg[pick] ||
            (g_.deg[v] == g_.deg[pick] && linked[v] > linked[pick]))
          pick = v;
      }
      place(pick);
      // keep the twin class contiguous
      for (int v = 0; v < n_; ++v)
        if (!placed[v] && gcls_[v] == gcls_[pick]) place(v);
    }
  }

  void assign(int u, int t, int depth) {
    img_[u] = t;
    pre_[t] = u;
    for (int k = 0; k < depth; ++k) {
      const int w = order_[k];
      if (g_(u, w) != h_(t, img_[w])) {
        ++a_[u];
        ++a_[w];
        ++between_;
      }
    }
    for (int w : g_.nb[u]) --rg_[w];
    for (int x : h_.nb[t]) --rh_[x];
  }

  void unassign(int u, int depth) {
    const int t = img_[u];
    for (int x : h_.nb[t]) ++rh_[x];
    for (int w : g_.nb[u]) ++rg_[w];
    for (int k = 0; k < depth; ++k) {
      const int w = order_[k];
      if (g_(u, w) != h_(t, img_[w])) {
        --a_[u];
        --a_[w];
        --between_;
      }
    }
    img_[u] = -1;
    pre_[t] = -1;
  }

  double bound(int depth) const {
    int mx = 0;
    long long edges = between_;
    for (int k = 0; k < depth; ++k) {
      const int w = order_[k];
      const int rest = std::abs(rg_[w] - rh_[img_[w]]);
      mx = std::max(mx, a_[w] + rest);
      edges += rest;
    }
    return spec_lower_bound(spec_, mx, edges);
  }

  void leaf() {
    NormValue v = mismatch_norm(mismatch_of(g_, h_, img_), spec_);
    if (v.value < best_ - kTol) {
      best_ = v.value;
      best_img_ = img_;
      best_norm_ = std::move(v);
    }
  }

  void dfs(int depth, int) {
    if (depth == n_) {
      leaf();
      return;
    }
    const int u = order_[depth];
    const bool chained = depth > 0 && gcls_[order_[depth - 1]] == gcls_[u];
    const int after = chained ? img_[order_[depth - 1]] : -1;

    std::vector<int> cand;
    for (const auto& members : hmembers_) {
      for (int t : members) {
        if (pre_[t] >= 0) continue;
        if (t > after) cand.push_back(t);
        break;
      }
    }
    const int du = g_.deg[u];
    std::stable_sort(cand.begin(), cand.end(), [&](int x, int y) {
      return std::abs(h_.deg[x] - du) < std::abs(h_.deg[y] - du);
    });

    for (int t : cand) {
      if (++nodes_ > budget_) {
        out_of_budget_ = true;
        return;
      }
      assign(u, t, depth);
      if (bound(depth + 1) < best_ - kTol) dfs(depth + 1, 0);
      unassign(u, depth);
      if (out_of_budget_ || best_ <= floor_ + kTol) return;
    }
  }

  const Dense& g_;
  const Dense& h_;
  const NormSpec& spec_;
  int n_;
  std::uint64_t budget_;
  std::vector<int> gcls_, hcls_;
  std::vector<std::vector<int>> hmembers_;
  std::vector<int> order_;
  std::vector<int> img_, pre_, a_, rg_, rh_;
  long long between_ = 0;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  double best_ = 0;
  double floor_ = 0;
  std::vector<Vertex> best_img_;
  NormValue best_norm_;
};

// --- isomorphism ------------------------------------------------------------------

// Stable colour refinement on the disjoint union so colours are comparable.
std::vector<int> refine(const Graph& u) {
  const int n = u.order();
  std::vector<int> col(n);
  for (int v = 0; v < n; ++v) col[v] = u.degree(v);
  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      std::vector<int> nc;
      for (int w : u.neighbors(v)) nc.push_back(col[w]);
      std::sort(nc.begin(), nc.end());
      sig[v].insert(sig[v].end(), nc.begin(), nc.end());
      ids.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) col[v] = ids[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return col;
}

bool iso_extend(const Graph& g, const Graph& h, const std::vector<int>& cg,
                const std::vector<int>& ch, const std::vector<int>& order, std::size_t k,
                std::vector<int>& img, std::vector<char>& used) {
  if (k == order.size()) return true;
  const int u = order[k];
  for (int t = 0; t < h.order(); ++t) {
    if (used[t] || ch[t] != cg[u]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      const int w = order[j];
      ok = g.has_edge(u, w) == h.has_edge(t, img[w]);
    }
    if (!ok) continue;
    img[u] = t;
    used[t] = 1;
    if (iso_extend(g, h, cg, ch, order, k + 1, img, used)) return true;
    used[t] = 0;
    img[u] = -1;
  }
  return false;
}

}  // namespace

// --- public API -------------------------------------------------------------------

Threshold::Threshold(long long n, long long d) : num(n), den(d) {
  require(n > 0 && d > 0, "threshold p/q needs positive integers");
}

Threshold Threshold::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    fail(ErrorKind::Parse, "threshold must look like p/q, got '" + std::string(text) + "'");
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0)
      fail(ErrorKind::Parse, "threshold must look like p/q with positive integers, got '" +
                                 std::string(text) + "'");
    return v;
  };
  return Threshold(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

int configured_threads() {
  if (const char* env = std::getenv("GMM_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

SolveResult local_search(const Graph& g, const Graph& h, const NormSpec& spec,
                         std::uint64_t seed) {
  LocalSearchOptions options;
  options.seed = seed;
  return local_search(g, h, spec, options);
}

SolveResult local_search(const Graph& g, const Graph& h, const NormSpec& spec,
                         const LocalSearchOptions& options) {
  spec.validate();
  const int N = std::max(g.order(), h.order());
  const Dense dg(g, N), dh(h, N);
  return local_search_dense(dg, dh, spec, options);
}

namespace {

// Strict total order on graphs: order, then size, then sorted edge lists.
bool graph_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.size() != b.size()) return a.size() < b.size();
  return a.edges() < b.edges();
}

SolveResult solve_ordered(const Graph& g, const Graph& h, const NormSpec& spec,
                          const SolveOptions& options) {
  const int N = std::max(g.order(), h.order());
  check_cut_order(spec, N, options.cut_order_cap);
  const Dense dg(g, N), dh(h, N);
  const BoundCertificate root = root_bound(dg, dh, spec);

  LocalSearchOptions ls;
  ls.seed = options.seed;
  ls.restarts = options.incumbent_restarts;
  ls.threads = 1;
  SolveResult start = local_search_dense(dg, dh, spec, ls);

  BranchAndBound bb(dg, dh, spec, options.budget);
  const bool complete = bb.run(start.value, start.alignment.map(), start.norm, root.value);

  SolveResult out;
  out.value = bb.best();
  out.alignment = Alignment(bb.best_image(), N);
  out.norm = bb.best_norm();
  out.nodes_explored = bb.nodes();
  out.lower_bound_used = root;
  out.budget_exhausted = !complete;
  // general-p leaf values are lower estimates, so optimality is not certified
  const bool estimated = spec.is_operator() && spec.p != 1.0 && spec.p != 2.0 && !is_inf(spec.p);
  out.exact = complete && !estimated;
  return out;
}

}  // namespace

SolveResult exact_distance(const Graph& g, const Graph& h, const NormSpec& spec,
                           const SolveOptions& options) {
  spec.validate();
  if (!graph_less(h, g)) return solve_ordered(g, h, spec, options);
  // Solving (H, G) and transporting the witness makes the value symmetric
  // bit for bit: G^pi - H is the relabelled negation of H^(pi^-1) - G.
  SolveResult r = solve_ordered(h, g, spec, options);
  r.alignment = r.alignment.inverse();
  if (r.norm.certificate) {
    auto& c = *r.norm.certificate;
    if (c.vector.size() > 0) {
      Eigen::VectorXd moved = Eigen::VectorXd::Zero(c.vector.size());
      for (int v = 0; v < c.vector.size(); ++v) moved(r.alignment[v]) = c.vector(v);
      c.vector = std::move(moved);
    }
    for (int& x : c.rows) x = r.alignment[x];
    for (int& x : c.cols) x = r.alignment[x];
  }
  return r;
}

bool decide_distance(const Graph& g, const Graph& h, const NormSpec& spec, const Threshold& t,
                     const SolveOptions& options) {
  const SolveResult r = exact_distance(g, h, spec, options);
  const double tv = t.value();
  if (r.budget_exhausted) {
    if (r.value < tv - kTol) return false;
    fail(ErrorKind::Budget, "search budget exhausted before the threshold was settled");
  }
  if (spec.exact_valued()) {
    if (r.norm.pth_power && spec.kind == NormKind::EntrywiseP) {
      // value >= num/den  <=>  S * den^k >= num^k
      const int k = static_cast<int>(spec.p);
      long double lhs = *r.norm.pth_power, rhs = 1;
      for (int i = 0; i < k; ++i) {
        lhs *= static_cast<long double>(t.den);
        rhs *= static_cast<long double>(t.num);
      }
      if (lhs < 1e18L && rhs < 1e18L) return lhs >= rhs;
      return r.value >= tv - kTol;
    }
    const long long v = std::llround(r.value);
    return static_cast<__int128>(v) * t.den >= static_cast<__int128>(t.num);
  }
  return r.value >= tv - kTol;
}

double approx_additive(const Graph& g, const Graph& h, double p, bool absolute) {
  auto norm = [&](const Graph& x) {
    const auto a = adjacency<double>(x);
    return absolute ? abs_operator_norm(a, p).value : operator_norm(a, p).value;
  };
  return norm(g) + norm(h);
}

double approx_multiplicative(const Graph& g, const Graph& h, double p) {
  const int N = std::max(g.order(), h.order());
  if (g.max_degree() == h.max_degree() && is_isomorphic(pad(g, N), pad(h, N))) return 0.0;
  return approx_additive(g, h, p);
}

std::optional<Alignment> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const int n = g.order();
  const std::vector<int> col = refine(disjoint_union(g, h));
  std::vector<int> cg(col.begin(), col.begin() + n), ch(col.begin() + n, col.end());
  std::vector<int> sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;

  // Smallest colour classes first, then grow along edges.
  std::vector<int> freq(2 * n + 1, 0);
  for (int c : cg) ++freq[c];
  std::vector<int> order;
  std::vector<char> in(n, 0);
  std::vector<int> linked(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (in[v]) continue;
      if (pick < 0 || linked[v] > linked[pick] ||
          (linked[v] == linked[pick] && freq[cg[v]] < freq[cg[pick]]))
        pick = v;
    }
    in[pick] = 1;
    order.push_back(pick);
    for (int w : g.neighbors(pick)) ++linked[w];
  }
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  if (!iso_extend(g, h, cg, ch, order, 0, img, used)) return std::nullopt;
  return Alignment(std::move(img), n);
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace gmm
