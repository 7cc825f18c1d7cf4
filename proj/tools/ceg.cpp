// Command-line front end: bounds, design, check, separator, reduce, export-dot.
//
// Exit codes: 0 success / affirmative verdict, 1 well-formed negative verdict
// (not connected, infeasible, nothing found), 2 usage or validation errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ceg/bounds.hpp"
#include "ceg/connectivity.hpp"
#include "ceg/constructions.hpp"
#include "ceg/dot.hpp"
#include "ceg/graph.hpp"
#include "ceg/reduction.hpp"

namespace {

using nlohmann::json;
using namespace ceg;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::bad_parameter, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::bad_parameter, "cannot write file: " + path);
  out << content;
}

std::string color_name(const ColoredEdgeGraph& g, ColorId c) {
  if (static_cast<int>(g.labels().colors.size()) == g.palette_size()) return g.labels().colors[c];
  return "c" + std::to_string(c);
}

std::string node_name(const ColoredEdgeGraph& g, NodeId v) {
  if (static_cast<int>(g.labels().nodes.size()) == g.node_count()) return g.labels().nodes[v];
  return std::to_string(v);
}

std::string brace_list(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "}";
}

void print_separator_text(const ColoredEdgeGraph& g, const ColorSeparator& sep) {
  std::vector<std::string> colors, side;
  for (ColorId c : sep.colors) colors.push_back(color_name(g, c));
  for (NodeId v : sep.side) side.push_back(node_name(g, v));
  std::cout << "separator: " << brace_list(colors) << " (size " << sep.colors.size() << ")\n";
  std::cout << "witness side: " << brace_list(side) << "\n";
}

json separator_json(const ColorSeparator& sep) {
  json j;
  j["colors"] = sep.colors;
  j["size"] = sep.colors.size();
  if (sep.pair)
    j["scope"] = {{"a", sep.pair->first}, {"b", sep.pair->second}};
  else
    j["scope"] = "graph";
  j["side"] = sep.side;
  return j;
}

json graph_json(const ColoredEdgeGraph& g) { return json::parse(serialize_graph(g)); }

// ---------------------------------------------------------------- bounds ---

int run_bounds(int n, int m, int t, bool as_json) {
  const auto r = bounds_report(n, m, t);
  if (as_json) {
    json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["t"] = r.t;
    j["degree_bound"] = r.degree_bound;
    j["mu_bound"] = r.mu_bound ? json(*r.mu_bound) : json(nullptr);
    j["case_bound"] = r.case_bound ? json(*r.case_bound) : json(nullptr);
    j["lambda_min"] = r.lambda_min ? json(*r.lambda_min) : json(nullptr);
    j["feasible"] = feasibility_name(r.feasible);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n=" << r.n << "  m=" << r.m << "  t=" << r.t << "\n";
    std::cout << "  degree bound    lambda >= " << r.degree_bound << "   (" << r.degree_source
              << ")\n";
    if (r.mu_bound)
      std::cout << "  partition bound lambda >= " << *r.mu_bound << "   (" << r.mu_source << ")\n";
    else
      std::cout << "  partition bound never met for t = m\n";
    if (r.case_bound)
      std::cout << "  case bound      lambda >= " << *r.case_bound << "   (" << r.case_source
                << ")\n";
    if (r.lambda_min)
      std::cout << "  lambda_min      " << *r.lambda_min << "\n";
    else
      std::cout << "  lambda_min      none within the " << static_cast<long long>(n) * (n - 1) / 2
                << " edges of K_n\n";
    std::cout << "verdict: " << feasibility_name(r.feasible) << " (" << r.verdict_source << ")\n";
  }
  return r.feasible == Feasibility::infeasible ? 1 : 0;
}

// ---------------------------------------------------------------- design ---

ColoredEdgeGraph build_spanning_path(int n, int m) {
  std::vector<ColoredEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 0});
  return ColoredEdgeGraph(n, m, std::move(edges));
}

int emit_design(const ColoredEdgeGraph& g, int t, const std::string& construction,
                const std::string& out_path, bool as_json) {
  if (!is_color_connected(g, t))  // builders verify too; never write unchecked output
    throw std::logic_error("design failed re-verification");
  const std::string text = serialize_graph(g);
  if (!out_path.empty()) write_file(out_path, text);
  if (as_json) {
    json j;
    j["construction"] = construction;
    j["n"] = g.node_count();
    j["m"] = g.palette_size();
    j["t"] = t;
    j["lambda"] = g.edge_count();
    if (out_path.empty())
      j["graph"] = graph_json(g);
    else
      j["path"] = out_path;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "construction: " << construction << "\n";
    std::cout << "n=" << g.node_count() << "  m=" << g.palette_size() << "  t=" << t
              << "  lambda=" << g.edge_count() << "\n";
    std::cout << "verified: survives any " << t << " color failure(s)\n";
    if (out_path.empty())
      std::cout << text;
    else
      std::cout << "wrote graph to " << out_path << "\n";
  }
  return 0;
}

int run_design(int n, int m, int t, std::optional<int> lambda, const std::string& out_path,
               bool as_json) {
  const auto r = bounds_report(n, m, t);
  if (r.feasible == Feasibility::infeasible) {
    run_bounds(n, m, t, as_json);
    return 1;
  }

  if (lambda) {  // explicit edge budget: exhaustive search only
    auto found = gadget_search(n, m, t, *lambda);
    if (!found) {
      if (as_json)
        std::cout << json{{"found", false}, {"lambda", *lambda}}.dump(2) << "\n";
      else
        std::cout << "no design with exactly " << *lambda << " edges exists\n";
      return 1;
    }
    return emit_design(*found, t, "exhaustive search", out_path, as_json);
  }

  if (t == 0) return emit_design(build_spanning_path(n, m), 0, "spanning path", out_path, as_json);
  if (m == t + 1)
    return emit_design(build_disjoint_spanning(n, m), t, "edge-disjoint spanning trees", out_path,
                       as_json);
  if (t == 1) return emit_design(build_t1(n, m), 1, "hub-and-rings", out_path, as_json);
  if (m == 4 && t == 2)
    return emit_design(build_m4_t2(n), 2, "glued gadgets (m=4)", out_path, as_json);
  if (m == 5 && t == 3)
    return emit_design(build_m5_t3(n), 3, "glued gadgets (m=5)", out_path, as_json);

  // No proven family: report the bounds, then try the minimum edge count
  // exhaustively (guarded).
  if (!as_json) run_bounds(n, m, t, false);
  auto found = gadget_search(n, m, t, static_cast<int>(*r.lambda_min));
  if (found) return emit_design(*found, t, "exhaustive search", out_path, as_json);
  if (as_json)
    std::cout << json{{"found", false}, {"lambda", *r.lambda_min}}.dump(2) << "\n";
  else
    std::cout << "no design with the minimum edge count " << *r.lambda_min
              << " found by exhaustive search\n";
  return 1;
}

// ----------------------------------------------------------------- check ---

int run_check(const std::string& path, int t, bool as_json) {
  const auto g = parse_graph(read_file(path));
  const bool ok = is_color_connected(g, t);
  std::optional<ColorSeparator> sep;
  if (!ok) sep = min_color_separator(g);
  if (as_json) {
    json j;
    j["t"] = t;
    j["connected"] = ok;
    if (sep) j["separator"] = separator_json(*sep);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "graph: n=" << g.node_count() << " m=" << g.palette_size()
              << " lambda=" << g.edge_count() << "\n";
    std::cout << "survives any " << t << " color failure(s): " << (ok ? "yes" : "no") << "\n";
    if (sep) print_separator_text(g, *sep);
  }
  return ok ? 0 : 1;
}

// ------------------------------------------------------------- separator ---

int run_separator(const std::string& path, std::optional<std::pair<int, int>> pair, bool as_json) {
  const auto g = parse_graph(read_file(path));
  const auto sep = pair ? min_color_separator(g, pair->first, pair->second)
                        : min_color_separator(g);
  if (as_json) {
    json j;
    j["separator"] = sep ? separator_json(*sep) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    if (pair)
      std::cout << "scope: pair (" << node_name(g, pair->first) << ", "
                << node_name(g, pair->second) << ")\n";
    else
      std::cout << "scope: whole graph\n";
    if (sep)
      print_separator_text(g, *sep);
    else
      std::cout << "no separator exists (scope has fewer than two nodes)\n";
  }
  return sep ? 0 : 1;
}

// ---------------------------------------------------------------- reduce ---

std::string sidecar_path(const std::string& out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
    return out.substr(0, out.size() - suffix.size()) + ".meta.json";
  return out + ".meta.json";
}

int run_reduce(const std::string& path, int t, const std::string& out_path, bool certify,
               bool as_json) {
  const auto source = parse_dimacs(read_file(path));
  const auto inst = vc_to_ceconnect(source, t);
  json meta;
  meta["a"] = inst.a;
  meta["b"] = inst.b;
  meta["t"] = inst.t;
  meta["source_nodes"] = source.n;
  meta["source_edges"] = source.edges.size();

  std::optional<bool> certified;
  if (certify) certified = certify_reduction(source, t);

  if (!out_path.empty()) {
    write_file(out_path, serialize_graph(inst.graph));
    write_file(sidecar_path(out_path), meta.dump(2) + "\n");
  }
  if (as_json) {
    json j;
    j["meta"] = meta;
    if (out_path.empty())
      j["graph"] = graph_json(inst.graph);
    else
      j["path"] = out_path;
    if (certified) j["certified"] = *certified;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "reduced instance: " << inst.graph.node_count() << " nodes (A=" << inst.a
              << ", B=" << inst.b << "), " << inst.graph.edge_count() << " edges, "
              << inst.graph.palette_size() << " colors, t=" << inst.t << "\n";
    if (!out_path.empty()) {
      std::cout << "wrote graph to " << out_path << "\n";
      std::cout << "wrote metadata to " << sidecar_path(out_path) << "\n";
    } else {
      std::cout << serialize_graph(inst.graph);
      std::cout << meta.dump(2) << "\n";
    }
    if (certified)
      std::cout << "certification: " << (*certified ? "ok" : "MISMATCH — this is a bug") << "\n";
  }
  return (certified && !*certified) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colored-edge network designer: build and verify topologies that survive"
               " correlated (same-color) link failures"};
  app.require_subcommand(1);

  int b_n = 0, b_m = 0, b_t = 0;
  bool b_json = false;
  auto* cmd_bounds = app.add_subcommand("bounds", "edge-count lower bounds and feasibility");
  cmd_bounds->add_option("-n", b_n, "node count")->required();
  cmd_bounds->add_option("-m", b_m, "palette (color/device-type) count")->required();
  cmd_bounds->add_option("-t", b_t, "failure budget: colors that may fail at once")->required();
  cmd_bounds->add_flag("--json", b_json, "machine-readable output");

  int d_n = 0, d_m = 0, d_t = 0, d_lambda = -1;
  std::string d_out;
  bool d_json = false;
  auto* cmd_design = app.add_subcommand("design", "build an edge-minimal survivable topology");
  cmd_design->add_option("-n", d_n, "node count")->required();
  cmd_design->add_option("-m", d_m, "palette (color/device-type) count")->required();
  cmd_design->add_option("-t", d_t, "failure budget: colors that may fail at once")->required();
  cmd_design->add_option("--lambda", d_lambda,
                         "exact edge budget; switches to exhaustive search (small instances)");
  cmd_design->add_option("--out", d_out, "write the graph JSON here instead of stdout");
  cmd_design->add_flag("--json", d_json, "machine-readable output");

  std::string c_path;
  int c_t = 0;
  bool c_json = false;
  auto* cmd_check = app.add_subcommand("check", "verify a graph against a failure budget");
  cmd_check->add_option("graph", c_path, "graph JSON file")->required();
  cmd_check->add_option("-t", c_t, "failure budget: colors that may fail at once")->required();
  cmd_check->add_flag("--json", c_json, "machine-readable output");

  std::string s_path;
  std::vector<int> s_pair;
  bool s_json = false;
  auto* cmd_sep = app.add_subcommand("separator", "minimum disconnecting color set with witness");
  cmd_sep->add_option("graph", s_path, "graph JSON file")->required();
  cmd_sep->add_option("pair", s_pair, "optional node pair A B (default: whole graph)")
      ->expected(0, 2);
  cmd_sep->add_flag("--json", s_json, "machine-readable output");

  std::string r_path, r_out;
  int r_t = 0;
  bool r_certify = false, r_json = false;
  auto* cmd_reduce =
      app.add_subcommand("reduce", "turn a vertex-cover instance into a pair-connectivity one");
  cmd_reduce->add_option("dimacs", r_path, "DIMACS edge-list file (p edge / e lines)")->required();
  cmd_reduce->add_option("-t", r_t, "cover size / failure budget")->required();
  cmd_reduce->add_option("--out", r_out, "write the graph JSON here (metadata goes alongside)");
  cmd_reduce->add_flag("--certify", r_certify,
                       "cross-check both sides of the reduction (small instances)");
  cmd_reduce->add_flag("--json", r_json, "machine-readable output");

  std::string e_path, e_out;
  bool e_json = false;
  auto* cmd_dot = app.add_subcommand("export-dot", "render a graph as Graphviz DOT");
  cmd_dot->add_option("graph", e_path, "graph JSON file")->required();
  cmd_dot->add_option("--out", e_out, "write DOT here instead of stdout");
  cmd_dot->add_flag("--json", e_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_bounds) return run_bounds(b_n, b_m, b_t, b_json);
    if (*cmd_design)
      return run_design(d_n, d_m, d_t,
                        d_lambda >= 0 ? std::optional<int>(d_lambda) : std::nullopt, d_out,
                        d_json);
    if (*cmd_check) return run_check(c_path, c_t, c_json);
    if (*cmd_sep) {
      if (s_pair.size() == 1)
        throw Error(Errc::bad_parameter, "separator needs either no pair or both nodes A B");
      std::optional<std::pair<int, int>> pair;
      if (s_pair.size() == 2) pair = std::make_pair(s_pair[0], s_pair[1]);
      return run_separator(s_path, pair, s_json);
    }
    if (*cmd_reduce) return run_reduce(r_path, r_t, r_out, r_certify, r_json);
    if (*cmd_dot) {
      const auto g = parse_graph(read_file(e_path));
      const auto dot = to_dot(g);
      if (!e_out.empty()) write_file(e_out, dot);
      if (e_json) {
        json j;
        if (e_out.empty())
          j["dot"] = dot;
        else
          j["path"] = e_out;
        std::cout << j.dump(2) << "\n";
      } else if (e_out.empty()) {
        std::cout << dot;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
