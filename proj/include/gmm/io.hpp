#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmm/graph.hpp"

namespace gmm {

/// Text formats. Graph: "n m" then m lines "u v". Signed graph: "n p q",
/// then p lines "+ u v" and q lines "- u v". Edges are written sorted.
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);
SignedGraph read_signed_text(std::istream& in);
void write_signed_text(std::ostream& out, const SignedGraph& d);

/// JSON mirrors: {"n", "edges", optional "colors"} and {"n", "pos", "neg"}.
nlohmann::json graph_to_json(const Graph& g, const std::vector<int>* colors = nullptr);
nlohmann::json signed_to_json(const SignedGraph& d);
Graph graph_from_json(const nlohmann::json& j);
SignedGraph signed_from_json(const nlohmann::json& j);
/// Colours are optional in the JSON form; empty when absent.
std::vector<int> colors_from_json(const nlohmann::json& j);

/// Reads either format; JSON is recognised by a leading '{'.
Graph parse_graph(const std::string& text);
SignedGraph parse_signed(const std::string& text);
std::optional<ColoredGraph> parse_colored(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Graph load_graph(const std::string& path);
SignedGraph load_signed(const std::string& path);

std::string format_graph(const Graph& g, bool json, const std::vector<int>* colors = nullptr);
std::string format_signed(const SignedGraph& d, bool json);

}  // namespace gmm
