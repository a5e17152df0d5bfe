#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmm/graph.hpp"
#include "gmm/norms.hpp"

namespace gmm {

enum class Answer { Yes, No, Unknown };

std::string to_string(Answer a);

/// Claimed separation (b_p(low), b_p(high)) between YES and NO instances.
struct Gap {
  int low = 0;
  int high = 0;

  double low_at(double p) const;
  double high_at(double p) const;
  std::string low_expr() const { return "b_p(" + std::to_string(low) + ")"; }
  std::string high_expr() const { return "b_p(" + std::to_string(high) + ")"; }
};

struct InstanceMeta {
  std::string source;
  Answer answer = Answer::Unknown;
  std::optional<Gap> gap;
  /// Exact claimed distance when the construction pins it down.
  std::optional<double> claimed_distance;
  /// Per-vertex role names ("black", "red", ...) where the construction has them.
  std::vector<std::string> left_roles;
  std::vector<std::string> right_roles;
  std::vector<std::string> notes;
};

struct ReductionInstance {
  Graph left;
  Graph right;
  /// Coloured form before conversion, when the construction is coloured.
  std::optional<std::pair<ColoredGraph, ColoredGraph>> colored;
  InstanceMeta meta;
};

// --- source-problem oracles ---------------------------------------------------

/// A Hamiltonian cycle as a vertex sequence, if one exists. n <= 14.
std::optional<std::vector<Vertex>> find_hamcycle(const Graph& g);
bool brute_force_hamcycle(const Graph& g);

/// Hamiltonian path existence by subset dynamic programming. n <= 20.
bool brute_force_hampath(const Graph& g);

/// Maximum cut over all bipartitions. n <= 20.
int brute_force_maxcut(const Graph& g);

struct ThreePartitionInstance {
  int A = 0;
  std::vector<int> items;

  int m() const { return static_cast<int>(items.size()) / 3; }
  /// Throws InvalidArgument unless sum = mA, A/4 < a_i < A/2 and A >= 8.
  void validate() const;
};

/// Groups of three item indices; group i fills the i-th long path.
using Grouping = std::vector<std::array<int, 3>>;

std::optional<Grouping> find_threepartition(const ThreePartitionInstance& inst);
/// m <= 4.
bool brute_force_threepartition(const ThreePartitionInstance& inst);

// --- constructions --------------------------------------------------------------

bool is_cubic(const Graph& g);

/// All connected 3-regular graphs on n vertices up to isomorphism
/// (labelled enumeration, then deduplicated). Intended for n <= 10.
std::vector<Graph> cubic_graphs(int n);

bool is_connected(const Graph& g);

/// (C_n, G) for a 3-regular G; gap (b_p(1), b_p(3)).
ReductionInstance gen_hamcycle(const Graph& g);

/// (P_{n+2}, G_e): G with edge e = {v,u} removed and a new leaf on each of
/// v (vertex n) and u (vertex n+1); gap (b_p(1), b_p(2)).
ReductionInstance gen_path_variant(const Graph& g, Vertex v, const Edge& e);

/// (T1, T2) built from a 3-Partition instance; gap (b_p(2), b_p(3)).
///
/// Vertex numbering per tree: for each path in order, each black node is
/// followed by its three red leaves and its orange leaf. T1 then lists
/// (pink, blue) pairs for every inner path node; T2 lists (blue, pink)
/// pairs. Roles are recorded in meta.
ReductionInstance gen_threepartition_trees(const ThreePartitionInstance& inst);

/// Colour-preserving alignment T1 -> T2 packing each group's paths into one
/// long path. Throws unless `groups` is a valid solution.
Alignment partition_alignment(const ThreePartitionInstance& inst, const Grouping& groups);

/// Attaches i * n^2 leaves to every vertex of colour i (n = common order).
/// Leaves follow the original vertices, grouped by owner in vertex order.
ReductionInstance gen_color_conversion(const ColoredGraph& g, const ColoredGraph& h);

/// Extends a colour-preserving alignment of the originals to the converted
/// graphs by matching leaves of v to leaves of pi(v) in order.
Alignment extend_color_alignment(const ColoredGraph& g, const ColoredGraph& h,
                                 const Alignment& pi);

/// Order of the colour-converted graph without building it.
long long color_conversion_order(const ColoredGraph& g);

struct AdditiveGadget {
  ReductionInstance instance;
  int n = 0;
  int m = 0;
  int o = 0;
  int gadgets_left = 0;
  int gadgets_right = 0;
  bool converted = false;
};

/// Smallest m with b_p(2m) > b_p(m) + eps and smallest o with
/// b_p(ceil(o/2)) >= b_p(2m).
std::pair<int, int> gadget_parameters(double p, double eps);

/// Replaces every edge of G and of C_n by the gadget E and pads both sides
/// with isolated gadgets to 3n gadgets each.
///
/// Gadget layout: blue path p1 (m nodes, attached to the lower endpoint),
/// blue path p2 (m nodes, attached to the higher endpoint), then for each
/// i < m - 1 a group of o red nodes adjacent to p1_i, p1_{i+1}, p2_i, p2_{i+1}.
/// Colours: black 1, blue 2, red 3. Black vertices keep their indices.
/// The colour-converted pair is built only while its order stays within
/// `conversion_cap`; otherwise left/right are the uncoloured G', C'_n.
AdditiveGadget gen_additive_gadget(const Graph& g, double p, double eps,
                                   long long conversion_cap = 200000);

/// Colour-preserving alignment G' -> C'_n derived from a Hamiltonian cycle
/// of G: cycle edges map to cycle gadgets, the remaining edges to isolated
/// gadgets, and isolated gadgets of G' to the remaining isolated gadgets.
Alignment gadget_alignment(const Graph& g, const AdditiveGadget& gadget,
                           const std::vector<Vertex>& cycle);

struct CutGadget {
  ReductionInstance instance;
  /// 2|E| x n matrix with cut norm MaxCut(G).
  Eigen::MatrixXi A;
  /// [[0, A], [A^T, 0]]; rows of A come first, then the vertices v_i.
  SignedMatrix B;
  SignedGraph delta;
  Graph f_prime;
  Graph h_prime;
  int leaves_unit = 0;
};

/// Edges are oriented from the lower to the higher index. F and H add
/// i * (ceil(n^2/4) + n) leaves to v_i (1-based i).
CutGadget gen_cutnorm_instance(const Graph& g);

}  // namespace gmm
