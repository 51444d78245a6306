// Command-line front end: graph generators, spec/pec checks, canonicalization,
// exact solvers, bound tables, Gray constructions, hypercube embedding, and
// the experiment suite.
//
// Exit codes: 0 success, 1 check failure (e.g. not a spec), 2 usage error,
// 3 budget or size guard.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pec/bounds.hpp"
#include "pec/coloring.hpp"
#include "pec/experiments.hpp"
#include "pec/graph.hpp"
#include "pec/gray.hpp"
#include "pec/json_io.hpp"
#include "pec/solver.hpp"
#include "pec/util.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

pec::Graph load_graph(const std::string& path) {
  json parsed;
  if (path.empty() || path == "-") {
    std::cin >> parsed;
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    in >> parsed;
  }
  return pec::graph_from_json(parsed);
}

// Colorings arrive inline ("1,2,1,3" in edge-id order) or as a JSON file.
pec::EdgeColoring load_coloring(const std::string& inline_colors,
                                const std::string& file, int edge_count) {
  if (!inline_colors.empty()) {
    std::vector<int> colors;
    std::stringstream stream(inline_colors);
    std::string token;
    while (std::getline(stream, token, ',')) colors.push_back(std::stoi(token));
    if (static_cast<int>(colors.size()) != edge_count)
      throw std::invalid_argument("coloring has wrong number of edges");
    return pec::EdgeColoring(colors);
  }
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open coloring file: " + file);
    json parsed;
    in >> parsed;
    return pec::coloring_from_json(parsed, edge_count);
  }
  throw std::invalid_argument("a coloring is required (--coloring or --coloring-file)");
}

std::chrono::milliseconds parse_budget(const std::string& text) {
  if (text.empty()) return std::chrono::milliseconds(120'000);
  std::size_t pos = 0;
  const long long value = std::stoll(text, &pos);
  const std::string unit = text.substr(pos);
  if (unit == "ms") return std::chrono::milliseconds(value);
  if (unit.empty() || unit == "s") return std::chrono::milliseconds(value * 1000);
  if (unit == "m") return std::chrono::milliseconds(value * 60'000);
  throw std::invalid_argument("bad budget suffix: " + unit);
}

pec::Graph generate(const std::string& family, const std::vector<int>& args) {
  const auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("family " + family + " needs " +
                                  std::to_string(count) + " parameter(s)");
  };
  if (family == "complete") { need(1); return pec::complete_graph(args[0]); }
  if (family == "complete_bipartite") { need(2); return pec::complete_bipartite(args[0], args[1]); }
  if (family == "path") { need(1); return pec::path_graph(args[0]); }
  if (family == "path_power") { need(2); return pec::path_power(args[0], args[1]); }
  if (family == "bip_path_power") { need(2); return pec::bipartite_path_power(args[0], args[1]); }
  if (family == "cycle") { need(1); return pec::cycle_graph(args[0]); }
  if (family == "hypercube") { need(1); return pec::hypercube_graph(args[0]); }
  if (family == "knn_path") { need(1); return pec::knn_path_graph(args[0]).graph; }
  if (family == "hub_family") { need(1); return pec::hub_family_graph(args[0]).graph; }
  throw std::invalid_argument("unknown family: " + family);
}

int run(int argc, char** argv) {
  CLI::App app{"parity edge-coloring toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph as JSON (or DOT)");
  std::string gen_family;
  std::vector<int> gen_args;
  bool gen_dot = false;
  gen->add_option("family", gen_family,
                  "complete|complete_bipartite|path|path_power|bip_path_power|"
                  "cycle|hypercube|knn_path|hub_family")
      ->required();
  gen->add_option("params", gen_args, "family parameters");
  gen->add_flag("--dot", gen_dot, "emit DOT instead of JSON");

  // shared coloring options
  const auto add_coloring_opts = [](CLI::App* cmd, std::string& graph,
                                    std::string& colors, std::string& file) {
    cmd->add_option("--graph", graph, "graph JSON file ('-' or omit for stdin)");
    cmd->add_option("--coloring", colors, "comma list in edge-id order");
    cmd->add_option("--coloring-file", file, "coloring JSON file");
  };

  auto* check_spec = app.add_subcommand("check-spec", "strong parity check");
  std::string cs_graph, cs_colors, cs_file;
  int cs_root = 0;
  add_coloring_opts(check_spec, cs_graph, cs_colors, cs_file);
  check_spec->add_option("--root", cs_root, "root vertex (default 0)");

  auto* check_pec = app.add_subcommand("check-pec", "parity check (path search)");
  std::string cp_graph, cp_colors, cp_file;
  int cp_max_vertices = 24;
  add_coloring_opts(check_pec, cp_graph, cp_colors, cp_file);
  check_pec->add_option("--max-vertices", cp_max_vertices,
                        "path-enumeration vertex budget");

  auto* canon = app.add_subcommand("canonicalize", "coset labeling and phi*");
  std::string ca_graph, ca_colors, ca_file;
  int ca_root = 0;
  add_coloring_opts(canon, ca_graph, ca_colors, ca_file);
  canon->add_option("--root", ca_root, "root vertex (default 0)");

  auto* phat = app.add_subcommand("phat", "exact strong parity number");
  std::string ph_graph, ph_budget;
  phat->add_option("--graph", ph_graph, "graph JSON file ('-' or omit for stdin)");
  phat->add_option("--budget", ph_budget, "wall budget, e.g. 60s or 500ms");

  auto* pnum = app.add_subcommand("p", "exact parity number");
  std::string p_graph, p_budget;
  pnum->add_option("--graph", p_graph, "graph JSON file ('-' or omit for stdin)");
  pnum->add_option("--budget", p_budget, "wall budget, e.g. 60s or 500ms");

  auto* bounds = app.add_subcommand("bounds", "path-power bound table (TSV)");
  std::vector<int> bounds_n;
  bounds->add_option("--n", bounds_n, "path lengths")->required();

  auto* hopf = app.add_subcommand("hopf-stiefel", "evaluate s o t");
  int hopf_s = 0, hopf_t = 0;
  bool hopf_binomial = false;
  hopf->add_option("s", hopf_s)->required();
  hopf->add_option("t", hopf_t)->required();
  hopf->add_flag("--binomial", hopf_binomial, "use the binomial-parity route");

  auto* gray = app.add_subcommand("gray", "Gray-code coloring of a path power");
  int gray_n = 0, gray_ell = 0;
  long long gray_trim = -1;
  gray->add_option("--n", gray_n, "number of vertices");
  gray->add_option("--ell", gray_ell, "power");
  gray->add_option("--check-trim", gray_trim,
                   "run the exhaustive trim sweep up to this m");

  auto* embed = app.add_subcommand("embed", "hypercube embedding when phat = ceil(lg n)");
  std::string em_graph, em_budget;
  embed->add_option("--graph", em_graph, "graph JSON file ('-' or omit for stdin)");
  embed->add_option("--budget", em_budget, "wall budget");

  auto* experiment = app.add_subcommand("experiment", "run acceptance experiments");
  std::string exp_id;
  std::uint64_t exp_seed = 0;
  bool exp_json = false;
  experiment->add_option("id", exp_id, "experiment id or 'run-all'")->required();
  experiment->add_option("--seed", exp_seed, "seed for randomized suites");
  experiment->add_flag("--json", exp_json, "emit rows as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) {
    const pec::Graph g = generate(gen_family, gen_args);
    if (gen_dot)
      std::cout << pec::graph_to_dot(g);
    else
      std::cout << pec::graph_to_json(g).dump() << "\n";
    return kExitOk;
  }

  if (check_spec->parsed()) {
    const pec::Graph g = load_graph(cs_graph);
    const pec::EdgeColoring phi = load_coloring(cs_colors, cs_file, g.edge_count());
    const pec::Canonicalization result = pec::canonicalize(g, phi, cs_root);
    std::cout << pec::canonicalization_to_json(result).dump() << "\n";
    return result.spec ? kExitOk : kExitCheckFailed;
  }

  if (check_pec->parsed()) {
    const pec::Graph g = load_graph(cp_graph);
    const pec::EdgeColoring phi = load_coloring(cp_colors, cp_file, g.edge_count());
    pec::PecBudget budget;
    budget.max_vertices = cp_max_vertices;
    const bool ok = pec::is_pec(g, phi, budget);
    std::cout << json{{"pec", ok}}.dump() << "\n";
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (canon->parsed()) {
    const pec::Graph g = load_graph(ca_graph);
    const pec::EdgeColoring phi = load_coloring(ca_colors, ca_file, g.edge_count());
    std::cout << pec::canonicalization_to_json(pec::canonicalize(g, phi, ca_root))
                     .dump()
              << "\n";
    return kExitOk;
  }

  if (phat->parsed()) {
    const pec::Graph g = load_graph(ph_graph);
    const pec::PhatResult result = pec::exact_phat(g, {parse_budget(ph_budget)});
    json out = {{"status", result.exact ? "exact" : "interval"},
                {"lower", result.lower},
                {"upper", result.upper}};
    if (result.exact) out["value"] = result.value;
    if (result.witness) out["witness"] = pec::labeling_to_json(*result.witness);
    std::cout << out.dump() << "\n";
    return result.exact ? kExitOk : kExitBudget;
  }

  if (pnum->parsed()) {
    const pec::Graph g = load_graph(p_graph);
    const pec::PResult result = pec::exact_p(g, {parse_budget(p_budget)});
    json out = {{"status", result.exact ? "exact" : "interval"},
                {"lower", result.lower},
                {"upper", result.upper}};
    if (result.exact) out["value"] = result.value;
    if (result.witness) out["witness"] = pec::coloring_to_json(*result.witness);
    std::cout << out.dump() << "\n";
    return result.exact ? kExitOk : kExitBudget;
  }

  if (bounds->parsed()) {
    std::cout << "n\tell\tlower\tgray_count\tupper\n";
    for (int n : bounds_n) {
      for (int ell = 1; ell <= pec::ceil_lg(static_cast<std::uint64_t>(n)); ++ell) {
        const pec::PathPowerBounds b = pec::path_power_bounds(n, ell);
        const pec::GrayColoring coloring = pec::gray_coloring(n, ell);
        std::cout << n << "\t" << ell << "\t" << b.lower << "\t"
                  << coloring.coloring.num_colors() << "\t" << b.upper << "\n";
      }
    }
    return kExitOk;
  }

  if (hopf->parsed()) {
    std::cout << (hopf_binomial ? pec::hopf_stiefel_binomial(hopf_s, hopf_t)
                                : pec::hopf_stiefel(hopf_s, hopf_t))
              << "\n";
    return kExitOk;
  }

  if (gray->parsed()) {
    if (gray_trim >= 0) {
      long long checked = 0, failures = 0;
      for (long long m = 0; m <= gray_trim; ++m) {
        for (long long r = 0; 2 * r <= m; ++r) {
          for (long long q : {r - 1, r}) {
            if (q < 0 || q > m - r) continue;
            ++checked;
            if (pec::trim_check(q, r, m).status != pec::TrimCheck::Status::holds)
              ++failures;
          }
        }
      }
      std::cout << json{{"checked", checked}, {"failures", failures}}.dump()
                << "\n";
      return failures == 0 ? kExitOk : kExitCheckFailed;
    }
    if (gray_n < 2 || gray_ell < 1)
      throw std::invalid_argument("gray: need --n and --ell");
    const pec::GrayColoring result = pec::gray_coloring(gray_n, gray_ell);
    json census = json::object();
    json bounds_json;
    if (result.in_regime) {
      for (const auto& [k, count] : pec::color_census(gray_n, gray_ell))
        census[std::to_string(k)] = count;
      const pec::PathPowerBounds b = pec::path_power_bounds(gray_n, gray_ell);
      bounds_json = {{"lower", b.lower}, {"upper", b.upper}};
    }
    json out = {{"n", gray_n},
                {"ell", gray_ell},
                {"in_regime", result.in_regime},
                {"labels", pec::labeling_to_json(result.labeling).at("labels")},
                {"coloring", pec::coloring_to_json(result.coloring)},
                {"num_colors", result.coloring.num_colors()},
                {"census", census},
                {"bounds", bounds_json}};
    std::cout << out.dump() << "\n";
    return kExitOk;
  }

  if (embed->parsed()) {
    const pec::Graph g = load_graph(em_graph);
    const auto result = pec::hypercube_embedding(g, {parse_budget(em_budget)});
    if (!result) {
      std::cout << json{{"embedding", nullptr}}.dump() << "\n";
      return kExitCheckFailed;
    }
    json coords = json::array();
    for (std::uint64_t c : result->coords) {
      std::ostringstream hex;
      hex << std::hex << c;
      coords.push_back(hex.str());
    }
    std::cout << json{{"dimension", result->dimension}, {"embedding", coords}}.dump()
              << "\n";
    return kExitOk;
  }

  if (experiment->parsed()) {
    const std::vector<pec::ExperimentReport> rows =
        exp_id == "run-all" ? pec::run_all_experiments(exp_seed)
                            : pec::run_experiment(exp_id, exp_seed);
    bool all_pass = true;
    json json_rows = json::array();
    for (const auto& r : rows) {
      all_pass = all_pass && r.pass;
      if (exp_json) {
        json_rows.push_back({{"experiment", r.experiment},
                             {"input", r.input},
                             {"expected", r.expected},
                             {"actual", r.actual},
                             {"source", r.source},
                             {"pass", r.pass},
                             {"seconds", r.seconds}});
      } else {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.experiment << ": "
                  << r.input << " | expected " << r.expected << " | got "
                  << r.actual << "\n";
      }
    }
    if (exp_json) std::cout << json_rows.dump() << "\n";
    return all_pass ? kExitOk : kExitCheckFailed;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pec::BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
