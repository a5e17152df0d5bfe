#include "gmm/io.hpp"

#include <fstream>
#include <sstream>

namespace gmm {

namespace {

void expect(std::istream& in, const char* what) {
  if (!in) fail(ErrorKind::Parse, std::string("malformed input: expected ") + what);
}

void expect_end(std::istream& in) {
  std::string rest;
  if (in >> rest) fail(ErrorKind::Parse, "malformed input: trailing token '" + rest + "'");
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

nlohmann::json edge_list(const std::vector<Edge>& edges) {
  nlohmann::json a = nlohmann::json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

std::vector<Edge> edges_from(const nlohmann::json& j, const char* key) {
  std::vector<Edge> out;
  if (!j.contains(key)) return out;
  const auto& a = j.at(key);
  if (!a.is_array()) fail(ErrorKind::Parse, std::string("'") + key + "' must be an array");
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(ErrorKind::Parse, std::string("'") + key + "' entries must be [u, v] integer pairs");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

int order_from(const nlohmann::json& j) {
  if (!j.contains("n") || !j.at("n").is_number_integer())
    fail(ErrorKind::Parse, "JSON graph needs an integer field 'n'");
  return j.at("n").get<int>();
}

// Construction errors in parsed input are parse errors for the caller.
template <typename F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) fail(ErrorKind::Parse, e.what());
    throw;
  }
}

}  // namespace

Graph read_graph_text(std::istream& in) {
  return parsing([&] {
    long long n = 0, m = 0;
    in >> n >> m;
    expect(in, "header 'n m'");
    if (n < 0 || m < 0) fail(ErrorKind::Parse, "negative count in header");
    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
      int u = 0, v = 0;
      in >> u >> v;
      expect(in, "edge line 'u v'");
      edges.emplace_back(u, v);
    }
    expect_end(in);
    return Graph(static_cast<int>(n), std::move(edges));
  });
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

SignedGraph read_signed_text(std::istream& in) {
  return parsing([&] {
    long long n = 0, p = 0, q = 0;
    in >> n >> p >> q;
    expect(in, "header 'n p q'");
    if (n < 0 || p < 0 || q < 0) fail(ErrorKind::Parse, "negative count in header");
    std::vector<Edge> pos, neg;
    for (long long k = 0; k < p + q; ++k) {
      std::string sign;
      int u = 0, v = 0;
      in >> sign >> u >> v;
      expect(in, "edge line '+ u v' or '- u v'");
      const bool positive = k < p;
      if (sign != (positive ? "+" : "-"))
        fail(ErrorKind::Parse, "expected " + std::string(positive ? "'+'" : "'-'") +
                                   " edge, got '" + sign + "'");
      (positive ? pos : neg).emplace_back(u, v);
    }
    expect_end(in);
    return SignedGraph(static_cast<int>(n), std::move(pos), std::move(neg));
  });
}

void write_signed_text(std::ostream& out, const SignedGraph& d) {
  out << d.order() << ' ' << d.pos().size() << ' ' << d.neg().size() << '\n';
  for (const Edge& e : d.pos()) out << "+ " << e.u << ' ' << e.v << '\n';
  for (const Edge& e : d.neg()) out << "- " << e.u << ' ' << e.v << '\n';
}

nlohmann::json graph_to_json(const Graph& g, const std::vector<int>* colors) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = edge_list(g.edges());
  if (colors) j["colors"] = *colors;
  return j;
}

nlohmann::json signed_to_json(const SignedGraph& d) {
  nlohmann::json j;
  j["n"] = d.order();
  j["pos"] = edge_list(d.pos());
  j["neg"] = edge_list(d.neg());
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  return parsing([&] { return Graph(order_from(j), edges_from(j, "edges")); });
}

SignedGraph signed_from_json(const nlohmann::json& j) {
  return parsing(
      [&] { return SignedGraph(order_from(j), edges_from(j, "pos"), edges_from(j, "neg")); });
}

std::vector<int> colors_from_json(const nlohmann::json& j) {
  if (!j.contains("colors")) return {};
  try {
    return j.at("colors").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("'colors' must be an integer array: ") + e.what());
  }
}

Graph parse_graph(const std::string& text) {
  if (looks_like_json(text)) return graph_from_json(parse_json(text));
  std::istringstream in(text);
  return read_graph_text(in);
}

SignedGraph parse_signed(const std::string& text) {
  if (looks_like_json(text)) return signed_from_json(parse_json(text));
  std::istringstream in(text);
  return read_signed_text(in);
}

std::optional<ColoredGraph> parse_colored(const std::string& text) {
  if (!looks_like_json(text)) return std::nullopt;
  const auto j = parse_json(text);
  auto colors = colors_from_json(j);
  if (colors.empty() && !j.contains("colors")) return std::nullopt;
  return parsing([&] { return ColoredGraph(graph_from_json(j), std::move(colors)); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << content;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }
SignedGraph load_signed(const std::string& path) { return parse_signed(read_file(path)); }

std::string format_graph(const Graph& g, bool json, const std::vector<int>* colors) {
  if (json) return graph_to_json(g, colors).dump() + "\n";
  std::ostringstream out;
  write_graph_text(out, g);
  return out.str();
}

std::string format_signed(const SignedGraph& d, bool json) {
  if (json) return signed_to_json(d).dump() + "\n";
  std::ostringstream out;
  write_signed_text(out, d);
  return out.str();
}

}  // namespace gmm
