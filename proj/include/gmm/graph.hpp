#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gmm/error.hpp"

namespace gmm {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted and every adjacency
/// list is sorted, so two graphs with the same edge set compare equal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Edge> edges = {},
                 std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(Vertex a, Vertex b) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

/// Graph whose edges carry a sign in {+1,-1}; the mismatch object G - H.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(int n, std::vector<Edge> pos, std::vector<Edge> neg);

  int order() const { return n_; }
  const std::vector<Edge>& pos() const { return pos_; }
  const std::vector<Edge>& neg() const { return neg_; }
  std::size_t size() const { return pos_.size() + neg_.size(); }
  bool empty() const { return pos_.empty() && neg_.empty(); }
  /// +1, -1, or 0 when {a,b} is not an edge.
  int sign(Vertex a, Vertex b) const;
  /// Number of signed edges at v (its mismatch count when this is G^pi - H).
  std::vector<int> degrees() const;

  bool operator==(const SignedGraph& o) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> pos_;
  std::vector<Edge> neg_;
};

/// Injective map from a source vertex set 0..k-1 into a target 0..n-1.
class Alignment {
 public:
  Alignment() = default;
  Alignment(std::vector<Vertex> map, int target_order);

  static Alignment identity(int n);

  int source_order() const { return static_cast<int>(map_.size()); }
  int target_order() const { return target_; }
  Vertex operator[](Vertex v) const { return map_[v]; }
  const std::vector<Vertex>& map() const { return map_; }
  bool is_bijection() const { return source_order() == target_; }
  /// Requires is_bijection().
  Alignment inverse() const;

  bool operator==(const Alignment& o) const = default;

 private:
  std::vector<Vertex> map_;
  int target_ = 0;
};

/// Graph with a color in 1..c on every vertex.
struct ColoredGraph {
  Graph graph;
  std::vector<int> colors;

  ColoredGraph() = default;
  ColoredGraph(Graph g, std::vector<int> c);

  int num_colors() const;
  /// histogram[i] = number of vertices with color i (index 0 unused).
  std::vector<int> histogram() const;
};

// --- operations --------------------------------------------------------------

/// Signed graph with pos = E(G)\E(H), neg = E(H)\E(G). Requires equal order.
SignedGraph mismatch(const Graph& g, const Graph& h);

/// G^pi: the image of g under pi, on pi's target vertex set.
Graph apply_alignment(const Graph& g, const Alignment& pi);
SignedGraph apply_alignment(const SignedGraph& d, const Alignment& pi);

SignedGraph signed_sum(const SignedGraph& a, const SignedGraph& b);
SignedGraph negate(const SignedGraph& d);

/// g plus n - |g| isolated vertices.
Graph pad(const Graph& g, int n);
SignedGraph pad(const SignedGraph& d, int n);

/// Connected components carrying at least one edge, each on the full vertex
/// set of d. Isolated vertices are dropped.
std::vector<SignedGraph> components(const SignedGraph& d);
/// Vertex sets of the same components, in the same order.
std::vector<std::vector<Vertex>> component_vertex_sets(const SignedGraph& d);

/// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
SignedGraph induced(const SignedGraph& d, const std::vector<Vertex>& vertices);

/// Induced subgraph on the non-isolated vertices.
SignedGraph support(const SignedGraph& d);

/// Vertices of non-isolated structure, ascending.
std::vector<Vertex> non_isolated(const SignedGraph& d);

/// Disjoint union; vertices of b are shifted by |a|.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Signed graph read off a symmetric {-1,0,1} matrix with zero diagonal.
template <typename Derived>
SignedGraph signed_graph_from_matrix(const Eigen::MatrixBase<Derived>& m) {
  require(m.rows() == m.cols(), "matrix must be square");
  const int n = static_cast<int>(m.rows());
  std::vector<Edge> pos, neg;
  for (int i = 0; i < n; ++i) {
    require(m(i, i) == 0, "diagonal must be zero");
    for (int j = i + 1; j < n; ++j) {
      require(m(i, j) == m(j, i), "matrix must be symmetric");
      if (m(i, j) == 1) {
        pos.emplace_back(i, j);
      } else if (m(i, j) == -1) {
        neg.emplace_back(i, j);
      } else {
        require(m(i, j) == 0, "entries must lie in {-1,0,1}");
      }
    }
  }
  return SignedGraph(n, std::move(pos), std::move(neg));
}

// --- matrices ----------------------------------------------------------------

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using SignedMatrix = Matrix<double>;

template <typename Scalar = double>
Matrix<Scalar> adjacency(const SignedGraph& d) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(d.order(), d.order());
  for (const Edge& e : d.pos()) a(e.u, e.v) = a(e.v, e.u) = Scalar(1);
  for (const Edge& e : d.neg()) a(e.u, e.v) = a(e.v, e.u) = Scalar(-1);
  return a;
}

template <typename Scalar = double>
Matrix<Scalar> adjacency(const Graph& g) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = Scalar(1);
  return a;
}

/// L = D - A with D the diagonal of signed degrees; rows sum to zero.
template <typename Scalar = double>
Matrix<Scalar> laplacian(const SignedGraph& d) {
  Matrix<Scalar> a = adjacency<Scalar>(d);
  Matrix<Scalar> l = -a;
  l.diagonal() = a.rowwise().sum();
  return l;
}

template <typename Scalar = double>
Matrix<Scalar> laplacian(const Graph& g) {
  Matrix<Scalar> a = adjacency<Scalar>(g);
  Matrix<Scalar> l = -a;
  l.diagonal() = a.rowwise().sum();
  return l;
}

// --- small constructors used throughout tests and generators -----------------

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

}  // namespace gmm
