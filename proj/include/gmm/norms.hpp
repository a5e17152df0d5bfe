#pragma once

#include <Eigen/Core>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmm/error.hpp"
#include "gmm/graph.hpp"

namespace gmm {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double p) { return std::isinf(p); }

inline void check_p(double p) {
  if (!(p >= 1.0)) fail(ErrorKind::InvalidArgument, "p must satisfy 1 <= p <= inf");
}

enum class NormKind { Iso, EntrywiseP, OperatorP, AbsOperatorP, Cut };

/// Selects one mismatch norm. Text form: `iso`, `ew:p`, `op:p`, `absop:p`,
/// `cut`, each optionally prefixed with `lap+` (p accepts decimals and `inf`).
struct NormSpec {
  NormKind kind = NormKind::OperatorP;
  double p = 2.0;
  bool laplacian = false;

  static NormSpec iso() { return {NormKind::Iso, 1.0, false}; }
  static NormSpec entrywise(double p) { return {NormKind::EntrywiseP, p, false}; }
  static NormSpec op(double p) { return {NormKind::OperatorP, p, false}; }
  static NormSpec absop(double p) { return {NormKind::AbsOperatorP, p, false}; }
  static NormSpec cut() { return {NormKind::Cut, 1.0, false}; }

  static NormSpec parse(std::string_view text);
  std::string to_string() const;
  void validate() const;

  bool uses_p() const {
    return kind == NormKind::EntrywiseP || kind == NormKind::OperatorP ||
           kind == NormKind::AbsOperatorP;
  }
  bool is_operator() const {
    return kind == NormKind::OperatorP || kind == NormKind::AbsOperatorP;
  }
  /// Values are integers (or integer p-th powers) for these specs.
  bool exact_valued() const;
};

std::string format_p(double p);
double parse_p(std::string_view text);

struct NormCertificate {
  /// Maximizing vector for operator norms (unit p-norm).
  Eigen::VectorXd vector;
  /// Maximizing row / column subsets for the cut norm.
  std::vector<int> rows;
  std::vector<int> cols;
  /// For general-p operator norms the value is a certified lower bound; the
  /// true norm lies in [lower, upper].
  double lower = 0;
  double upper = 0;
};

struct NormValue {
  double value = 0;
  bool exact = false;
  /// Sum of |entries|^p when it is an exact integer (entrywise norms).
  std::optional<double> pth_power;
  std::optional<NormCertificate> certificate;
};

inline constexpr int kDefaultCutCap = 26;

namespace detail {

template <typename Derived>
bool integral_entries(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double x = static_cast<double>(m(i, j));
      if (x != std::floor(x) || std::abs(x) > 1e15) return false;
    }
  return true;
}

inline bool integral_p(double p) {
  return !is_inf(p) && p == std::floor(p) && p <= 64;
}

/// Largest singular value (spectral radius for symmetric input).
double spectral_norm(const SignedMatrix& m);

/// Multi-start nonlinear power iteration for ||m||_p, p not in {1,2,inf}.
NormValue p_norm_estimate(const SignedMatrix& m, double p);

}  // namespace detail

/// (sum |m_vw|^p)^(1/p); max |m_vw| for p = inf.
template <typename Derived>
NormValue entrywise_norm(const Eigen::MatrixBase<Derived>& m, double p) {
  check_p(p);
  NormValue out;
  const bool integral = detail::integral_entries(m);
  if (m.size() == 0) {
    out.exact = true;
    out.pth_power = 0.0;
    return out;
  }
  if (is_inf(p)) {
    out.value = static_cast<double>(m.cwiseAbs().maxCoeff());
    out.exact = integral;
    return out;
  }
  if (integral && detail::integral_p(p)) {
    // exact while the sum stays below 2^53
    long double sum = 0;
    const int k = static_cast<int>(p);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        long double t = 1;
        const long double a = std::abs(static_cast<long double>(m(i, j)));
        for (int r = 0; r < k; ++r) t *= a;
        sum += t;
      }
    out.exact = sum < 9007199254740992.0L;
    if (out.exact) out.pth_power = static_cast<double>(sum);
    out.value = static_cast<double>(std::pow(sum, 1.0L / k));
    return out;
  }
  double sum = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      sum += std::pow(std::abs(static_cast<double>(m(i, j))), p);
  out.value = std::pow(sum, 1.0 / p);
  return out;
}

/// Maximum absolute column sum (= ||m||_1).
template <typename Derived>
typename Derived::Scalar max_abs_col_sum(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return typename Derived::Scalar(0);
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

/// Maximum absolute row sum (= ||m||_inf).
template <typename Derived>
typename Derived::Scalar max_abs_row_sum(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return typename Derived::Scalar(0);
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// ||m||_1^(1/p) * ||m||_inf^(1-1/p), an upper bound on ||m||_p.
template <typename Derived>
double interpolation_bound(const Eigen::MatrixBase<Derived>& m, double p) {
  const double c = static_cast<double>(max_abs_col_sum(m));
  const double r = static_cast<double>(max_abs_row_sum(m));
  if (is_inf(p)) return r;
  return std::pow(c, 1.0 / p) * std::pow(r, 1.0 - 1.0 / p);
}

/// l_p operator norm. Exact for p in {1, inf}; p = 2 via a symmetric
/// eigensolver (SVD for non-symmetric input); any other p returns the best
/// multi-start lower bound with the bracket in the certificate.
template <typename Derived>
NormValue operator_norm(const Eigen::MatrixBase<Derived>& m, double p) {
  check_p(p);
  require(m.rows() == m.cols(), "operator norm expects a square matrix");
  NormValue out;
  if (m.size() == 0) {
    out.exact = true;
    return out;
  }
  if (p == 1.0) {
    out.value = static_cast<double>(max_abs_col_sum(m));
    out.exact = detail::integral_entries(m);
    return out;
  }
  if (is_inf(p)) {
    out.value = static_cast<double>(max_abs_row_sum(m));
    out.exact = detail::integral_entries(m);
    return out;
  }
  const SignedMatrix md = m.template cast<double>();
  if (p == 2.0) {
    out.value = detail::spectral_norm(md);
    return out;
  }
  return detail::p_norm_estimate(md, p);
}

/// Operator norm of the entrywise absolute value.
template <typename Derived>
NormValue abs_operator_norm(const Eigen::MatrixBase<Derived>& m, double p) {
  return operator_norm(m.cwiseAbs().eval(), p);
}

/// max over row set S and column set T of |sum_{v in S, w in T} m_vw|.
///
/// Enumerates S in Gray-code order while maintaining the S-restricted column
/// sums; for fixed S the best T takes every positive (or every negative)
/// column. O(2^rows * cols).
template <typename Derived>
NormValue cut_norm_exact(const Eigen::MatrixBase<Derived>& m,
                         int cap = kDefaultCutCap) {
  using Scalar = typename Derived::Scalar;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows > cap || rows > 30)
    fail(ErrorKind::Infeasible, "exact cut norm infeasible for " +
                                    std::to_string(rows) + " rows (cap " +
                                    std::to_string(cap) + ")");
  std::vector<Scalar> colsum(cols, Scalar(0));
  Scalar best = Scalar(0);
  std::uint32_t best_set = 0;
  bool best_positive = true;
  std::uint32_t set = 0;
  const std::uint64_t total = std::uint64_t{1} << rows;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int bit = std::countr_zero(k);
    const std::uint32_t mask = std::uint32_t{1} << bit;
    set ^= mask;
    if (set & mask) {
      for (int j = 0; j < cols; ++j) colsum[j] += m(bit, j);
    } else {
      for (int j = 0; j < cols; ++j) colsum[j] -= m(bit, j);
    }
    Scalar pos = Scalar(0), neg = Scalar(0);
    for (int j = 0; j < cols; ++j) {
      if (colsum[j] > 0) pos += colsum[j];
      else neg -= colsum[j];
    }
    if (pos > best) {
      best = pos;
      best_set = set;
      best_positive = true;
    }
    if (neg > best) {
      best = neg;
      best_set = set;
      best_positive = false;
    }
  }
  NormValue out;
  out.value = static_cast<double>(best);
  out.exact = detail::integral_entries(m);
  NormCertificate cert;
  for (int i = 0; i < rows; ++i)
    if (best_set >> i & 1u) cert.rows.push_back(i);
  for (int j = 0; j < cols; ++j) {
    Scalar s = Scalar(0);
    for (int i : cert.rows) s += m(i, j);
    if (best_positive ? s > 0 : s < 0) cert.cols.push_back(j);
  }
  cert.lower = cert.upper = out.value;
  out.certificate = std::move(cert);
  return out;
}

/// 0 for an edgeless signed graph, 1 otherwise.
NormValue iso_norm(const SignedGraph& d);

/// mu(d) for the selected norm, evaluated on the adjacency matrix (or the
/// Laplacian when spec.laplacian). Isolated vertices are stripped first, and
/// operator norms are taken as the maximum over connected components.
NormValue mismatch_norm(const SignedGraph& d, const NormSpec& spec,
                        int cut_cap = kDefaultCutCap);

/// Matrix norm selected by spec applied to an arbitrary square matrix.
NormValue matrix_norm(const SignedMatrix& m, const NormSpec& spec,
                      int cut_cap = kDefaultCutCap);

}  // namespace gmm
