// Command-line front end: norms, distances, decisions, approximations,
// instance generators and the reduction verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

#include "gmm/bounds.hpp"
#include "gmm/generators.hpp"
#include "gmm/io.hpp"
#include "gmm/norms.hpp"
#include "gmm/solver.hpp"
#include "gmm/verify.hpp"

namespace {

using nlohmann::json;
using namespace gmm;

enum Exit { kOk = 0, kParse = 1, kInfeasible = 2, kBudget = 3, kVerifyFailed = 4 };

// JSON has no infinity; non-finite values are written as strings.
json number(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

json norm_json(const NormValue& v) {
  json j;
  j["value"] = number(v.value);
  j["exact"] = v.exact;
  if (v.pth_power) j["pth_power"] = *v.pth_power;
  if (v.certificate) {
    const auto& c = *v.certificate;
    json cj;
    if (c.vector.size() > 0) cj["vector"] = std::vector<double>(c.vector.data(), c.vector.data() + c.vector.size());
    if (!c.rows.empty() || !c.cols.empty()) {
      cj["rows"] = c.rows;
      cj["cols"] = c.cols;
    }
    cj["lower"] = number(c.lower);
    cj["upper"] = number(c.upper);
    j["certificate"] = cj;
  }
  return j;
}

json solve_json(const SolveResult& r) {
  json j;
  j["value"] = number(r.value);
  j["exact"] = r.exact;
  j["budget_exhausted"] = r.budget_exhausted;
  j["alignment"] = r.alignment.map();
  j["nodes_explored"] = r.nodes_explored;
  j["lower_bound"] = {{"value", number(r.lower_bound_used.value)},
                      {"c", r.lower_bound_used.c},
                      {"witness", r.lower_bound_used.witness}};
  j["norm"] = norm_json(r.norm);
  return j;
}

json meta_json(const InstanceMeta& m, const std::vector<double>& ps) {
  json j;
  j["source"] = m.source;
  j["answer"] = to_string(m.answer);
  if (m.gap) {
    json low = {{"symbolic", m.gap->low_expr()}};
    json high = {{"symbolic", m.gap->high_expr()}};
    for (double p : ps) {
      low["at_p"][format_p(p)] = number(m.gap->low_at(p));
      high["at_p"][format_p(p)] = number(m.gap->high_at(p));
    }
    j["gap"] = {{"low", low}, {"high", high}};
  }
  if (m.claimed_distance) j["claimed_distance"] = *m.claimed_distance;
  if (!m.left_roles.empty()) j["left_roles"] = m.left_roles;
  if (!m.right_roles.empty()) j["right_roles"] = m.right_roles;
  if (!m.notes.empty()) j["notes"] = m.notes;
  return j;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

struct Options {
  std::string spec = "op:2";
  std::string threshold;
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 0;
  std::string p = "2";
  double eps = 1.0;
  std::string out;
  std::string format = "json";
  std::vector<std::string> inputs;
  // generators
  std::string gen_kind;
  int vertex = 0;
  std::string edge;
  int A = 0;
  std::string items;
  // verify
  std::vector<std::string> suites;
  int restarts = 10000;
};

bool as_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (as_json(o)) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

ColoredGraph load_colored(const std::string& path) {
  auto c = parse_colored(read_file(path));
  if (!c) fail(ErrorKind::Parse, "'" + path + "' must be a JSON graph with a 'colors' field");
  return *c;
}

int cmd_norm(const Options& o) {
  require(o.inputs.size() == 1, "norm expects one signed-graph file");
  const NormSpec spec = NormSpec::parse(o.spec);
  const NormValue v = mismatch_norm(load_signed(o.inputs[0]), spec);
  json j = norm_json(v);
  j["spec"] = spec.to_string();
  emit(o, j, format_p(v.value) + "\n");
  return kOk;
}

SolveOptions solve_options(const Options& o) {
  SolveOptions s;
  s.budget = o.budget;
  s.seed = o.seed;
  return s;
}

int cmd_dist(const Options& o) {
  require(o.inputs.size() == 2, "dist expects two graph files");
  const NormSpec spec = NormSpec::parse(o.spec);
  const SolveResult r =
      exact_distance(load_graph(o.inputs[0]), load_graph(o.inputs[1]), spec, solve_options(o));
  json j = solve_json(r);
  j["spec"] = spec.to_string();
  emit(o, j, format_p(r.value) + (r.exact ? "\n" : " (not certified optimal)\n"));
  return r.budget_exhausted ? kBudget : kOk;
}

int cmd_decide(const Options& o) {
  require(o.inputs.size() == 2, "decide expects two graph files");
  if (o.threshold.empty()) fail(ErrorKind::Parse, "decide needs --threshold p/q");
  const NormSpec spec = NormSpec::parse(o.spec);
  const Threshold t = Threshold::parse(o.threshold);
  const bool answer =
      decide_distance(load_graph(o.inputs[0]), load_graph(o.inputs[1]), spec, t, solve_options(o));
  json j = {{"answer", answer},
            {"spec", spec.to_string()},
            {"threshold", std::to_string(t.num) + "/" + std::to_string(t.den)}};
  emit(o, j, answer ? "true\n" : "false\n");
  return kOk;
}

int cmd_approx(const Options& o) {
  require(o.inputs.size() == 2, "approx expects two graph files");
  const double p = parse_p(o.p);
  const Graph g = load_graph(o.inputs[0]), h = load_graph(o.inputs[1]);
  const int d = h.max_degree();
  const double add = approx_additive(g, h, p);
  const double mult = approx_multiplicative(g, h, p);
  json j = {{"p", format_p(p)},
            {"additive", number(add)},
            {"multiplicative", number(mult)},
            {"d", d},
            {"additive_guarantee", "dist <= additive <= dist + " + std::to_string(2 * d)},
            {"multiplicative_guarantee",
             "multiplicative <= " + std::to_string(1 + 2 * d) + " * dist, and 0 iff dist = 0"}};
  std::ostringstream text;
  text << "additive " << add << "\nmultiplicative " << mult << "\n";
  emit(o, j, text.str());
  return kOk;
}

void write_instance(const Options& o, const ReductionInstance& inst, const json& extra) {
  const std::vector<double> ps{1.0, 2.0, kInf};
  json meta = meta_json(inst.meta, ps);
  meta.update(extra);
  const bool js = as_json(o);
  const std::vector<int>* lc = inst.colored && inst.colored->first.graph == inst.left
                                   ? &inst.colored->first.colors
                                   : nullptr;
  const std::vector<int>* rc = inst.colored && inst.colored->second.graph == inst.right
                                   ? &inst.colored->second.colors
                                   : nullptr;
  if (o.out.empty()) {
    json j = {{"left", graph_to_json(inst.left, lc)},
              {"right", graph_to_json(inst.right, rc)},
              {"meta", meta}};
    if (inst.colored && !lc) {
      j["colored_left"] = graph_to_json(inst.colored->first.graph, &inst.colored->first.colors);
      j["colored_right"] = graph_to_json(inst.colored->second.graph, &inst.colored->second.colors);
    }
    std::cout << j.dump() << '\n';
    return;
  }
  const std::string ext = js ? ".json" : ".g";
  write_file(o.out + ".left" + ext, format_graph(inst.left, js, lc));
  write_file(o.out + ".right" + ext, format_graph(inst.right, js, rc));
  if (inst.colored && !lc) {
    write_file(o.out + ".colored_left.json",
               format_graph(inst.colored->first.graph, true, &inst.colored->first.colors));
    write_file(o.out + ".colored_right.json",
               format_graph(inst.colored->second.graph, true, &inst.colored->second.colors));
  }
  write_file(o.out + ".meta.json", meta.dump(2) + "\n");
  std::cerr << "wrote " << o.out << ".{left,right}" << ext << " and " << o.out << ".meta.json\n";
}

int cmd_gen(const Options& o) {
  const std::string& k = o.gen_kind;
  auto one_input = [&]() {
    require(o.inputs.size() == 1, "gen " + k + " expects one graph file");
    return load_graph(o.inputs[0]);
  };
  if (k == "hamcycle") {
    write_instance(o, gen_hamcycle(one_input()), json::object());
  } else if (k == "path") {
    const Graph g = one_input();
    Edge e;
    if (o.edge.empty()) {
      require(g.order() > o.vertex && o.vertex >= 0 && g.degree(o.vertex) > 0,
              "vertex out of range");
      e = Edge(o.vertex, g.neighbors(o.vertex).front());
    } else {
      const auto uv = parse_int_list(o.edge);
      if (uv.size() != 2) fail(ErrorKind::Parse, "--edge expects 'u,v'");
      e = Edge(uv[0], uv[1]);
    }
    write_instance(o, gen_path_variant(g, o.vertex, e),
                   {{"removed_edge", {e.u, e.v}}, {"vertex", o.vertex}});
  } else if (k == "3part") {
    ThreePartitionInstance inst{o.A, parse_int_list(o.items)};
    write_instance(o, gen_threepartition_trees(inst), {{"A", inst.A}, {"items", inst.items}});
  } else if (k == "colorconv") {
    require(o.inputs.size() == 2, "gen colorconv expects two coloured JSON graph files");
    write_instance(o, gen_color_conversion(load_colored(o.inputs[0]), load_colored(o.inputs[1])),
                   json::object());
  } else if (k == "additive") {
    const AdditiveGadget g = gen_additive_gadget(one_input(), parse_p(o.p), o.eps);
    write_instance(o, g.instance,
                   {{"m", g.m},
                    {"o", g.o},
                    {"gadgets_left", g.gadgets_left},
                    {"gadgets_right", g.gadgets_right},
                    {"converted", g.converted}});
  } else if (k == "cut") {
    const CutGadget c = gen_cutnorm_instance(one_input());
    write_instance(o, c.instance, {{"leaves_unit", c.leaves_unit}});
  } else {
    fail(ErrorKind::Parse, "unknown generator '" + k + "'");
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.restarts = o.restarts;
  const auto names = o.suites.empty() ? verify_suite_names() : o.suites;
  bool all = true;
  json reports = json::array();
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, vo);
    all = all && r.passed;
    if (as_json(o)) {
      reports.push_back(
          {{"suite", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"checks", r.lines}});
    } else {
      for (const auto& line : r.lines) std::cout << "  " << line << '\n';
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s)\n";
    }
  }
  if (as_json(o)) std::cout << json{{"passed", all}, {"suites", reports}}.dump(2) << '\n';
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph distances from mismatch norms"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_solve = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "Norm: iso, ew:p, op:p, absop:p, cut, optional lap+ prefix")
        ->capture_default_str();
    sub->add_option("--budget", o.budget, "Branch-and-bound node budget")->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed for the incumbent local search")->capture_default_str();
  };

  auto* norm = app.add_subcommand("norm", "Evaluate a mismatch norm of a signed graph");
  norm->add_option("--spec", o.spec, "Norm spec")->capture_default_str();
  norm->add_option("file", o.inputs, "Signed graph file")->required()->expected(1);
  add_common(norm);

  auto* dist = app.add_subcommand("dist", "Exact distance between two graphs");
  add_solve(dist);
  dist->add_option("files", o.inputs, "Two graph files")->required()->expected(2);
  add_common(dist);

  auto* decide = app.add_subcommand("decide", "Decide whether dist >= p/q");
  add_solve(decide);
  decide->add_option("--threshold", o.threshold, "Threshold as p/q")->required();
  decide->add_option("files", o.inputs, "Two graph files")->required()->expected(2);
  add_common(decide);

  auto* approx = app.add_subcommand("approx", "Additive and multiplicative approximations");
  approx->add_option("--p", o.p, "Operator norm exponent (number or inf)")->capture_default_str();
  approx->add_option("files", o.inputs, "Two graph files")->required()->expected(2);
  add_common(approx);

  auto* gen = app.add_subcommand("gen", "Build a reduction instance");
  gen->add_option("kind", o.gen_kind, "hamcycle, path, 3part, colorconv, additive, cut")
      ->required()
      ->check(CLI::IsMember({"hamcycle", "path", "3part", "colorconv", "additive", "cut"}));
  gen->add_option("files", o.inputs, "Input graph file(s)");
  gen->add_option("--out", o.out, "Output prefix; stdout JSON when omitted");
  gen->add_option("--p", o.p, "Exponent for the additive gadget")->capture_default_str();
  gen->add_option("--eps", o.eps, "Additive error for the gadget")->capture_default_str();
  gen->add_option("--vertex", o.vertex, "Vertex v for the path variant")->capture_default_str();
  gen->add_option("--edge", o.edge, "Removed edge 'u,v' for the path variant");
  gen->add_option("--A", o.A, "3-Partition target sum");
  gen->add_option("--items", o.items, "3-Partition items, comma separated");
  add_common(gen);

  auto* verify = app.add_subcommand("verify", "Run the reduction verification suites");
  verify->add_option("suites", o.suites, "Suites to run (default: all)")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--restarts", o.restarts, "Local-search restarts for the NO instance")
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed")->capture_default_str();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*norm) return cmd_norm(o);
    if (*dist) return cmd_dist(o);
    if (*decide) return cmd_decide(o);
    if (*approx) return cmd_approx(o);
    if (*gen) return cmd_gen(o);
    if (*verify) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Infeasible: return kInfeasible;
      case ErrorKind::Budget: return kBudget;
      default: return kParse;
    }
  }
  return kOk;
}
