#include "gmm/norms.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>

namespace gmm {

// --- NormSpec ----------------------------------------------------------------

double parse_p(std::string_view text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInf;
  double p = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, p);
  if (ec != std::errc() || ptr != last)
    fail(ErrorKind::Parse, "invalid p value '" + std::string(text) + "'");
  if (!(p >= 1.0))
    fail(ErrorKind::Parse, "p must satisfy 1 <= p <= inf, got " + std::string(text));
  return p;
}

std::string format_p(double p) {
  if (is_inf(p)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  // shortest form that round-trips
  for (int prec = 1; prec <= 17; ++prec) {
    char tmp[32];
    std::snprintf(tmp, sizeof tmp, "%.*g", prec, p);
    if (std::strtod(tmp, nullptr) == p) return tmp;
  }
  return buf;
}

NormSpec NormSpec::parse(std::string_view text) {
  NormSpec spec;
  const std::string original(text);
  if (text.starts_with("lap+")) {
    spec.laplacian = true;
    text.remove_prefix(4);
  }
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const bool has_p = colon != std::string_view::npos;
  if (head == "iso" || head == "cut") {
    if (has_p) fail(ErrorKind::Parse, "'" + std::string(head) + "' takes no p: " + original);
    spec.kind = head == "iso" ? NormKind::Iso : NormKind::Cut;
    spec.p = 1.0;
    return spec;
  }
  if (head == "ew") spec.kind = NormKind::EntrywiseP;
  else if (head == "op") spec.kind = NormKind::OperatorP;
  else if (head == "absop") spec.kind = NormKind::AbsOperatorP;
  else fail(ErrorKind::Parse, "unknown norm spec '" + original + "'");
  if (!has_p) fail(ErrorKind::Parse, "norm spec '" + original + "' needs ':p'");
  spec.p = parse_p(text.substr(colon + 1));
  return spec;
}

std::string NormSpec::to_string() const {
  std::string s = laplacian ? "lap+" : "";
  switch (kind) {
    case NormKind::Iso: return s + "iso";
    case NormKind::Cut: return s + "cut";
    case NormKind::EntrywiseP: return s + "ew:" + format_p(p);
    case NormKind::OperatorP: return s + "op:" + format_p(p);
    case NormKind::AbsOperatorP: return s + "absop:" + format_p(p);
  }
  return s;
}

void NormSpec::validate() const {
  if (uses_p()) check_p(p);
}

bool NormSpec::exact_valued() const {
  switch (kind) {
    case NormKind::Iso:
    case NormKind::Cut: return true;
    case NormKind::EntrywiseP: return is_inf(p) || detail::integral_p(p);
    case NormKind::OperatorP:
    case NormKind::AbsOperatorP: return p == 1.0 || is_inf(p);
  }
  return false;
}

// --- numerics ----------------------------------------------------------------

namespace detail {

double spectral_norm(const SignedMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.isApprox(m.transpose(), 0.0)) {
    Eigen::SelfAdjointEigenSolver<SignedMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<SignedMatrix> svd(m);
  return svd.singularValues()(0);
}

namespace {

double vec_norm(const Eigen::VectorXd& x, double p) {
  if (is_inf(p)) return x.cwiseAbs().maxCoeff();
  if (p == 1.0) return x.cwiseAbs().sum();
  double s = 0;
  for (double a : x) s += std::pow(std::abs(a), p);
  return std::pow(s, 1.0 / p);
}

// Dual vector: unit q-norm, <dual(y), y> = ||y||_p.
Eigen::VectorXd dual(const Eigen::VectorXd& y, double p) {
  const double ny = vec_norm(y, p);
  Eigen::VectorXd w(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double a = std::abs(y(i)) / ny;
    w(i) = (y(i) < 0 ? -1.0 : 1.0) * (a == 0 ? 0.0 : std::pow(a, p - 1.0));
  }
  return w;
}

}  // namespace

NormValue p_norm_estimate(const SignedMatrix& m, double p) {
  const Eigen::Index n = m.cols();
  const double q = p / (p - 1.0);
  NormValue out;
  NormCertificate cert;
  cert.upper = interpolation_bound(m, p);
  if (m.isZero(0.0)) {
    cert.vector = Eigen::VectorXd::Unit(n, 0);
    out.certificate = std::move(cert);
    return out;
  }

  // Deterministic starts: unit vectors on the heaviest columns, the sign
  // pattern of the heaviest rows, all-ones and alternating signs.
  std::vector<Eigen::VectorXd> starts;
  const Eigen::VectorXd colw = m.cwiseAbs().colwise().sum().transpose();
  const Eigen::VectorXd roww = m.cwiseAbs().rowwise().sum();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return colw(a) > colw(b); });
  for (Eigen::Index k = 0; k < std::min<Eigen::Index>(3, n); ++k)
    starts.push_back(Eigen::VectorXd::Unit(n, order[k]));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return roww(a) > roww(b); });
  for (Eigen::Index k = 0; k < std::min<Eigen::Index>(3, n); ++k) {
    Eigen::VectorXd s = m.row(order[k]).transpose().unaryExpr(
        [](double a) { return a > 0 ? 1.0 : (a < 0 ? -1.0 : 0.0); });
    if (!s.isZero(0.0)) starts.push_back(std::move(s));
  }
  starts.push_back(Eigen::VectorXd::Ones(n));
  Eigen::VectorXd alt(n);
  for (Eigen::Index i = 0; i < n; ++i) alt(i) = (i % 2 == 0) ? 1.0 : -1.0;
  starts.push_back(alt);
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < 8; ++k) {
    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i) r(i) = gauss(rng);
    starts.push_back(std::move(r));
  }

  double best = 0;
  Eigen::VectorXd best_x = starts.front();
  for (Eigen::VectorXd x : starts) {
    x /= vec_norm(x, p);
    for (int it = 0; it < 1000; ++it) {
      const Eigen::VectorXd y = m * x;
      const double val = vec_norm(y, p);
      if (val > best) {
        best = val;
        best_x = x;
      }
      if (val == 0) break;
      const Eigen::VectorXd z = m.transpose() * dual(y, p);
      const double zq = vec_norm(z, q);
      if (zq <= z.dot(x) * (1 + 1e-14)) break;
      x = dual(z, q);
    }
  }
  out.value = best;
  cert.lower = best;
  cert.upper = std::max(cert.upper, best);
  cert.vector = best_x;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace detail

// --- mismatch norms ----------------------------------------------------------

NormValue iso_norm(const SignedGraph& d) {
  NormValue out;
  out.value = d.empty() ? 0.0 : 1.0;
  out.exact = true;
  return out;
}

NormValue matrix_norm(const SignedMatrix& m, const NormSpec& spec, int cut_cap) {
  spec.validate();
  switch (spec.kind) {
    case NormKind::Iso: {
      NormValue out;
      out.value = m.isZero(0.0) ? 0.0 : 1.0;
      out.exact = true;
      return out;
    }
    case NormKind::EntrywiseP: return entrywise_norm(m, spec.p);
    case NormKind::OperatorP: return operator_norm(m, spec.p);
    case NormKind::AbsOperatorP: return abs_operator_norm(m, spec.p);
    case NormKind::Cut: return cut_norm_exact(m, cut_cap);
  }
  return {};
}

namespace {

SignedMatrix spec_matrix(const SignedGraph& d, const NormSpec& spec) {
  return spec.laplacian ? laplacian<double>(d) : adjacency<double>(d);
}

void lift_certificate(NormValue& v, const std::vector<Vertex>& vertices, int n) {
  if (!v.certificate) return;
  auto& c = *v.certificate;
  if (c.vector.size() > 0) {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < vertices.size(); ++i) full(vertices[i]) = c.vector(i);
    c.vector = std::move(full);
  }
  for (int& r : c.rows) r = vertices[r];
  for (int& col : c.cols) col = vertices[col];
}

}  // namespace

NormValue mismatch_norm(const SignedGraph& d, const NormSpec& spec, int cut_cap) {
  spec.validate();
  if (d.empty()) {
    NormValue zero;
    zero.exact = true;
    if (spec.kind == NormKind::EntrywiseP && !is_inf(spec.p)) zero.pth_power = 0.0;
    return zero;
  }
  if (spec.kind == NormKind::Iso) return iso_norm(d);

  const std::vector<Vertex> vertices = non_isolated(d);
  const SignedGraph core = induced(d, vertices);

  if (spec.is_operator() && !(spec.p == 1.0 || is_inf(spec.p))) {
    // Operator norms of a block-diagonal matrix are the maximum over blocks.
    NormValue best;
    double upper = 0;
    std::vector<Vertex> best_vertices;
    for (const auto& comp : component_vertex_sets(core)) {
      const SignedMatrix m = spec_matrix(induced(core, comp), spec);
      NormValue v = spec.kind == NormKind::OperatorP ? operator_norm(m, spec.p)
                                                     : abs_operator_norm(m, spec.p);
      if (v.certificate) upper = std::max(upper, v.certificate->upper);
      if (v.value > best.value || best_vertices.empty()) {
        best = std::move(v);
        best_vertices.clear();
        for (Vertex c : comp) best_vertices.push_back(vertices[c]);
      }
    }
    lift_certificate(best, best_vertices, d.order());
    if (best.certificate) best.certificate->upper = std::max(upper, best.value);
    return best;
  }

  NormValue v = matrix_norm(spec_matrix(core, spec), spec, cut_cap);
  lift_certificate(v, vertices, d.order());
  return v;
}

}  // namespace gmm
