#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "propcon/bounds.hpp"
#include "propcon/coloring.hpp"
#include "propcon/enumerate.hpp"
#include "propcon/errors.hpp"
#include "propcon/family.hpp"
#include "propcon/graph.hpp"
#include "propcon/structure.hpp"
#include "propcon/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace propcon;

struct GraphInput {
  std::string graph6;
  std::string file;
  bool edgelist = false;
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  auto* g6 = cmd->add_option("--graph6", in.graph6, "inline graph6 string");
  auto* f = cmd->add_option("--file", in.file, "input file, '-' for stdin (default: stdin)");
  cmd->add_flag("--edgelist", in.edgelist, "read an edge list (\"n <order>\" header, \"u v\" lines)");
  g6->excludes(f);
}

std::string slurp(std::istream& is) {
  return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

std::string read_text(const std::string& file) {
  if (file.empty() || file == "-") return slurp(std::cin);
  std::ifstream f(file);
  if (!f) throw Error("cannot open '" + file + "'");
  return slurp(f);
}

Graph load_graph(const GraphInput& in) {
  if (!in.graph6.empty()) {
    if (in.edgelist) throw ContractError("--edgelist applies to --file/stdin input only");
    return parse_graph6(in.graph6);
  }
  std::string text = read_text(in.file);
  if (in.edgelist) return parse_edge_list(text);
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return parse_graph6(line);
  }
  throw ParseError("input contains no graph");
}

int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

json coloring_json(const Graph& g, const EdgeColoring& c) {
  json edges = json::array();
  for (int e = 0; e < g.edge_count(); ++e)
    edges.push_back({g.edges()[e].u, g.edges()[e].v, c.assignment[e]});
  return json{{"colors", c.colors}, {"edges", edges}};
}

int run_pc(const GraphInput& in, bool as_json) {
  Graph g = load_graph(in);
  PcResult r = pc_exact(g);
  if (as_json) {
    json j;
    j["graph6"] = emit_graph6(g);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["pc"] = r.pc;
    j["method"] = to_string(r.method);
    j["witness"] = coloring_json(g, r.witness);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "pc = " << r.pc << " (method: " << to_string(r.method) << ")\n";
    std::cout << emit_coloring(g, r.witness);
  }
  return 0;
}

int run_check(const GraphInput& in, const std::string& coloring_file, bool has_pair, int pu,
              int pv, bool as_json) {
  Graph g = load_graph(in);
  if ((in.file.empty() || in.file == "-") && in.graph6.empty() && coloring_file == "-")
    throw ContractError("graph and coloring cannot both come from stdin");
  EdgeColoring c = parse_coloring(read_text(coloring_file), g);

  if (has_pair) {
    auto path = proper_path_witness(g, c, pu, pv);
    if (as_json) {
      json j{{"u", pu}, {"v", pv}};
      j["proper_path"] = path ? json(*path) : json(nullptr);
      std::cout << j.dump() << "\n";
    } else if (path) {
      std::cout << "proper path:";
      for (int v : *path) std::cout << " " << v;
      std::cout << "\n";
    } else {
      std::cout << "no proper path between " << pu << " and " << pv << "\n";
    }
    return path ? 0 : 1;
  }

  bool ok = is_properly_connected(g, c);
  std::optional<std::pair<int, int>> bad;
  if (!ok) {
    for (int u = 0; u < g.vertex_count() && !bad; ++u)
      for (int v = u + 1; v < g.vertex_count() && !bad; ++v)
        if (!proper_path_witness(g, c, u, v)) bad = {u, v};
  }
  if (as_json) {
    json j{{"properly_connected", ok}};
    j["failing_pair"] = bad ? json({bad->first, bad->second}) : json(nullptr);
    std::cout << j.dump() << "\n";
  } else if (ok) {
    std::cout << "properly connected\n";
  } else {
    std::cout << "not properly connected: no proper path between " << bad->first << " and "
              << bad->second << "\n";
  }
  return ok ? 0 : 1;
}

int run_gstar(const GraphInput& in, bool as_json) {
  Graph g = load_graph(in);
  BridgeTree bt = build_bridge_tree(g);
  int bound = std::max(3, bt.max_node_degree);
  if (as_json) {
    json bridges = json::array();
    for (int e : bt.bridges) bridges.push_back({g.edges()[e].u, g.edges()[e].v});
    json comps = json::array();
    for (const auto& node : bt.nodes)
      comps.push_back({{"vertices", node.vertices}, {"singleton", node.singleton}});
    json j{{"bridges", bridges},
           {"components", comps},
           {"max_node_degree", bt.max_node_degree},
           {"pc_upper_bound", bound}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "bridges (" << bt.bridges.size() << "):";
    for (int e : bt.bridges) std::cout << " " << g.edges()[e].u << "-" << g.edges()[e].v;
    std::cout << "\ncomponents (" << bt.nodes.size() << "):";
    for (const auto& node : bt.nodes) {
      std::cout << " {";
      for (std::size_t i = 0; i < node.vertices.size(); ++i)
        std::cout << (i ? "," : "") << node.vertices[i];
      std::cout << "}";
    }
    std::cout << "\nmax node degree = " << bt.max_node_degree << "\npc upper bound = " << bound
              << "\n";
  }
  return 0;
}

int run_bounds(const std::string& variant, int n, int k, int t, int delta, int c, int m_part,
               bool as_json) {
  std::string v;
  for (char ch : variant)
    if (ch != '-' && ch != '_') v.push_back(static_cast<char>(std::tolower(ch)));

  if (v == "erdosgallai") {
    long long value = erdos_gallai_min_edges(c, n);
    if (as_json)
      std::cout << json{{"variant", "erdos-gallai"}, {"c", c}, {"n", n}, {"value", value}}.dump()
                << "\n";
    else
      std::cout << value << "\n";
    return 0;
  }
  if (v == "woodall") {
    WoodallBound w = woodall_min_edges(n, m_part);
    if (as_json)
      std::cout << json{{"variant", "woodall"},
                        {"n", n},
                        {"m_part", m_part},
                        {"t", w.t},
                        {"r", w.r},
                        {"threshold", w.threshold}}
                       .dump()
                << "\n";
    else
      std::cout << "t = " << w.t << ", r = " << w.r << ", threshold = " << w.threshold << "\n";
    return 0;
  }

  BoundResult r;
  if (v == "bridgesimple") {
    r = bridge_edge_bound_simple(n, t);
  } else if (v == "bridge") {
    r = bridge_edge_bound(n, t, delta);
  } else {
    ThresholdVariant tv;
    if (v == "gnk")
      tv = ThresholdVariant::g_nk;
    else if (v == "mainthm")
      tv = ThresholdVariant::main_thm;
    else if (v == "mainthmabstract")
      tv = ThresholdVariant::main_thm_abstract;
    else if (v == "thm34")
      tv = ThresholdVariant::thm34;
    else if (v == "conjecture")
      tv = ThresholdVariant::conjecture;
    else
      throw ParseError("unknown bounds variant '" + variant + "'");
    r = pc_size_threshold({tv, n, k, delta, t});
  }
  if (as_json)
    std::cout << json{{"variant", variant}, {"value", r.value}, {"m", r.m_used},
                      {"formula", r.formula}}
                     .dump()
              << "\n";
  else
    std::cout << r.value << "\n";
  return 0;
}

void print_violators(const VerifyReport& rep) {
  int shown = 0;
  for (const GraphRecord& r : rep.records) {
    if (!r.violation && !r.exception) continue;
    std::cout << "  " << (r.violation ? "VIOLATION " : "expected exception ") << r.graph6
              << " (m=" << r.m << ", delta=" << r.delta;
    if (r.pc_evaluated && !r.undecided) std::cout << ", pc=" << *r.pc;
    std::cout << ")\n";
    if (++shown == 50) {
      std::cout << "  ... further violators elided\n";
      break;
    }
  }
}

int report_exit(const VerifyReport& rep) {
  return rep.summary.violations == 0 && rep.summary.exceptions_match_expected ? 0 : 1;
}

void emit_report(const VerifyReport& rep, const std::string& format,
                 const std::string& records_path) {
  if (!records_path.empty()) {
    std::ofstream f(records_path);
    if (!f) throw Error("cannot open '" + records_path + "'");
    write_jsonl(rep, f);
  }
  if (format == "jsonl") {
    write_jsonl(rep, std::cout);
    return;
  }
  if (format == "csv") {
    write_csv(rep, std::cout);
    return;
  }
  const VerifySummary& s = rep.summary;
  std::cout << "task = " << s.task << ", n = " << s.n << ", source = " << s.source << "\n";
  std::cout << "scanned = " << s.scanned << ", records = " << s.records
            << ", hypothesis matched = " << s.hypothesis_matched << "\n";
  long long violators = s.violations + s.exception_matches;
  std::cout << "violators: " << violators;
  if (s.expected_exceptions > 0 || violators > 0) {
    if (s.exceptions_match_expected)
      std::cout << " (matches expected exception set)";
    else
      std::cout << " (MISMATCH: expected " << s.expected_exceptions << " exception(s), matched "
                << s.exception_matches << ", unexpected violations " << s.violations << ")";
  }
  std::cout << "\n";
  print_violators(rep);
  std::cout << "undecided = " << s.undecided << (s.exhaustive ? " (exhaustive)" : "") << "\n";
  if (s.task == theorem_tag_name(TheoremTag::thm_main_k3))
    std::cout << "abstract reading: matched = " << s.abstract_matched
              << ", violations = " << s.abstract_violations << "\n";
  std::cout << "wall time = " << s.wall_ms << " ms\n";
}

int run_verify(const std::string& theorem, int n, const std::string& source, int k,
               std::optional<int> min_degree, std::optional<int> min_size,
               std::optional<int> exact_bridges, bool widen_delta, int jobs,
               const std::string& format, const std::string& records_path) {
  VerifyTask task;
  task.theorem = parse_theorem_tag(theorem);
  task.n = n;
  task.source = source;
  task.k = k;
  task.min_degree = min_degree;
  task.min_size = min_size;
  task.exact_bridges = exact_bridges;
  task.widen_delta = widen_delta;
  task.jobs = jobs > 0 ? jobs : default_jobs();
  VerifyReport rep = run_verification(task);
  emit_report(rep, format, records_path);
  return report_exit(rep);
}

int run_search(int n, int delta, const std::string& source, int jobs, const std::string& format,
               const std::string& records_path) {
  VerifyReport rep = search_counterexamples(n, delta, source, jobs > 0 ? jobs : default_jobs());
  if (format == "human") {
    std::cout << "conjecture probe: n = " << n << ", min degree = " << delta << ", source = "
              << source << "\n";
    std::cout << "scanned = " << rep.summary.scanned
              << ", above threshold = " << rep.summary.hypothesis_matched << "\n";
    if (rep.summary.violations > 0) {
      std::cout << "COUNTEREXAMPLES FOUND: " << rep.summary.violations << "\n";
      print_violators(rep);
    } else {
      std::cout << "counterexamples found: 0"
                << (rep.summary.exhaustive ? " (exhaustive over this corpus)" : "") << "\n";
    }
    if (!rep.summary.exhaustive)
      std::cout << "undecided = " << rep.summary.undecided << "\n";
    if (!records_path.empty()) {
      std::ofstream f(records_path);
      if (!f) throw Error("cannot open '" + records_path + "'");
      write_jsonl(rep, f);
    }
  } else {
    emit_report(rep, format, records_path);
  }
  return rep.summary.violations == 0 ? 0 : 1;
}

int run_gen(const std::string& family, int n, int k, int delta, bool as_edgelist) {
  GraphFamily f;
  f.tag = parse_family_tag(family);
  f.n = n;
  f.k = k;
  f.delta = delta;
  Graph g = build_family(f);
  if (as_edgelist)
    std::cout << emit_edge_list(g);
  else
    std::cout << emit_graph6(g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proper connection number toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // pc
  auto* pc_cmd = app.add_subcommand("pc", "compute pc(G) with a witness coloring");
  GraphInput pc_in;
  bool pc_json = false;
  add_graph_input(pc_cmd, pc_in);
  pc_cmd->add_flag("--json", pc_json, "JSON output");
  pc_cmd->callback([&]() { rc = run_pc(pc_in, pc_json); });

  // check
  auto* check_cmd = app.add_subcommand("check", "check a coloring for proper connectivity");
  GraphInput check_in;
  std::string coloring_file;
  std::vector<int> pair;
  bool check_json = false;
  add_graph_input(check_cmd, check_in);
  check_cmd->add_option("--coloring", coloring_file, "coloring file ('k <K>' header, 'u v c' lines)")
      ->required();
  check_cmd->add_option("--pair", pair, "print a proper path for this vertex pair")->expected(2);
  check_cmd->add_flag("--json", check_json, "JSON output");
  check_cmd->callback([&]() {
    rc = run_check(check_in, coloring_file, pair.size() == 2, pair.empty() ? 0 : pair[0],
                   pair.empty() ? 0 : pair[1], check_json);
  });

  // gstar
  auto* gstar_cmd = app.add_subcommand("gstar", "bridge decomposition and the tree G*");
  GraphInput gstar_in;
  bool gstar_json = false;
  add_graph_input(gstar_cmd, gstar_in);
  gstar_cmd->add_flag("--json", gstar_json, "JSON output");
  gstar_cmd->callback([&]() { rc = run_gstar(gstar_in, gstar_json); });

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a size threshold or bound");
  std::string variant;
  int bn = 0, bk = 0, bt = 0, bdelta = 0, bc = 0, bm_part = 0;
  bool bounds_json = false;
  bounds_cmd
      ->add_option("--variant", variant,
                   "g-nk | main-thm | main-thm-abstract | thm34 | conjecture | bridge | "
                   "bridge-simple | erdos-gallai | woodall")
      ->required();
  bounds_cmd->add_option("--n", bn, "order")->required();
  bounds_cmd->add_option("--k", bk, "target number of colors");
  bounds_cmd->add_option("--t", bt, "bridge count");
  bounds_cmd->add_option("--delta", bdelta, "minimum degree");
  bounds_cmd->add_option("--c", bc, "circumference parameter (erdos-gallai)");
  bounds_cmd->add_option("--m-part", bm_part, "part size m (woodall)");
  bounds_cmd->add_flag("--json", bounds_json, "JSON output");
  bounds_cmd->callback(
      [&]() { rc = run_bounds(variant, bn, bk, bt, bdelta, bc, bm_part, bounds_json); });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "replay a claim over a graph corpus");
  std::string theorem, source = "builtin", format = "human", records_path;
  int vn = 0, vk = 2, vjobs = 0;
  std::optional<int> min_degree, min_size, exact_bridges;
  bool widen_delta = false;
  verify_cmd->add_option("--theorem", theorem, "claim tag (see README)")->required();
  verify_cmd->add_option("--n", vn, "graph order")->required();
  verify_cmd->add_option("--source", source, "'builtin' (n <= 8), a graph6 file, or '-'");
  verify_cmd->add_option("--k", vk, "color budget for thm-gnk / thm-main-k3");
  verify_cmd->add_option("--min-degree", min_degree, "only graphs with delta >= this");
  verify_cmd->add_option("--min-size", min_size, "only graphs with at least this many edges");
  verify_cmd->add_option("--exact-bridges", exact_bridges, "only graphs with exactly t bridges");
  verify_cmd->add_flag("--widen-delta", widen_delta, "thm-k2-d2: delta >= 2 instead of = 2");
  verify_cmd->add_option("--jobs", vjobs, "parallel evaluation width (0 = all cores)");
  verify_cmd->add_option("--format", format, "human | jsonl | csv")
      ->check(CLI::IsMember({"human", "jsonl", "csv"}));
  verify_cmd->add_option("--records", records_path, "also write JSONL records to this file");
  verify_cmd->callback([&]() {
    rc = run_verify(theorem, vn, source, vk, min_degree, min_size, exact_bridges, widen_delta,
                    vjobs, format, records_path);
  });

  // search
  auto* search_cmd = app.add_subcommand("search", "hunt for conjecture counterexamples");
  int sn = 0, sdelta = 3, sjobs = 0;
  std::string ssource = "builtin", sformat = "human", srecords;
  search_cmd->add_option("--n", sn, "graph order")->required();
  search_cmd->add_option("--delta", sdelta, "minimum degree (>= 3)");
  search_cmd->add_option("--source", ssource, "'builtin' (n <= 8), a graph6 file, or '-'");
  search_cmd->add_option("--jobs", sjobs, "parallel evaluation width (0 = all cores)");
  search_cmd->add_option("--format", sformat, "human | jsonl | csv")
      ->check(CLI::IsMember({"human", "jsonl", "csv"}));
  search_cmd->add_option("--records", srecords, "also write JSONL records to this file");
  search_cmd->callback([&]() { rc = run_search(sn, sdelta, ssource, sjobs, sformat, srecords); });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "emit a named construction");
  std::string family;
  int gn = 0, gk = 0, gdelta = 0;
  bool gen_edgelist = false;
  gen_cmd
      ->add_option("--family", family,
                   "complete | path | cycle | star | g-star-1 | g-star-2 | g-1 | g-n | g-k")
      ->required();
  gen_cmd->add_option("--n", gn, "order (families that take one)");
  gen_cmd->add_option("--k", gk, "g-k: color budget");
  gen_cmd->add_option("--delta", gdelta, "g-k: minimum degree");
  gen_cmd->add_flag("--edgelist", gen_edgelist, "emit an edge list instead of graph6");
  gen_cmd->callback([&]() { rc = run_gen(family, gn, gk, gdelta, gen_edgelist); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
