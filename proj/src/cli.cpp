#include "mixspec/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "mixspec/catalog.hpp"
#include "mixspec/classify.hpp"
#include "mixspec/dioph.hpp"
#include "mixspec/graph6.hpp"
#include "mixspec/isomorphism.hpp"
#include "mixspec/mixext.hpp"
#include "mixspec/reduction.hpp"
#include "mixspec/spectra.hpp"
#include "mixspec/verify.hpp"

namespace mixspec {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Graph read_graph(const std::string& arg, std::istream& in) {
  std::string text = arg;
  if (text.empty() || text == "-") {
    if (!std::getline(in, text)) throw UsageError("no graph6 input on stdin");
  }
  return parse_graph6(text);
}

Graph graph_from_edge_text(const std::string& text, int order) {
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("edge '" + item + "' is not of the form u-v (offset " + std::to_string(start) + ")");
    try {
      std::size_t used_u = 0;
      std::size_t used_v = 0;
      const int u = std::stoi(item.substr(0, dash), &used_u);
      const int v = std::stoi(item.substr(dash + 1), &used_v);
      if (used_u != dash || used_v != item.size() - dash - 1) throw std::invalid_argument("trailing characters");
      edges.emplace_back(u, v);
      max_vertex = std::max({max_vertex, u, v});
    } catch (const std::logic_error&) {
      throw UsageError("edge '" + item + "' is not of the form u-v (offset " + std::to_string(start) + ")");
    }
    start = end + 1;
  }
  return graph_from_edges(order > 0 ? order : max_vertex + 1, edges);
}

Graph resolve_base(const std::string& name) {
  Graph g;
  if (parse_named_graph(name, g)) return g;
  return parse_graph6(name);
}

Json summary_json(const Graph& g) {
  const auto s = spectral_summary(g);
  Json j;
  j["graph6"] = write_graph6(g);
  j["order"] = s.order;
  j["m0"] = s.m0;
  j["m_neg1"] = s.m_neg1;
  j["n_pos"] = s.n_pos;
  j["n_lt_neg1"] = s.n_lt_neg1;
  j["n_between"] = s.n_between;
  j["char_poly"] = adjacency_char_poly(g).to_string();
  return j;
}

Json witnesses_json(const std::vector<ForbiddenWitness>& witnesses) {
  Json list = Json::array();
  for (const auto& w : witnesses) list.push_back({{"name", w.name}, {"vertices", members(w.vertices)}});
  return list;
}

Json classify_json(const Graph& g) {
  const auto sub = subclass(g);
  Json j;
  j["graph6"] = write_graph6(g);
  j["order"] = g.order();
  j["in_class_G"] = in_class_G(g);
  j["in_G0"] = sub.in_G0;
  j["in_Gpp"] = sub.in_Gpp;
  Json labels = Json::array();
  for (const auto& l : classify(g)) {
    labels.push_back({{"family", l.family},
                      {"params", l.params},
                      {"base", l.base_name},
                      {"base_graph6", write_graph6(l.base)},
                      {"type", l.type}});
  }
  j["labels"] = labels;
  j["witnesses"] = witnesses_json(forbidden_scan(g));
  return j;
}

Json certificate_json(const dioph::Certificate& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    terms.push_back({{"coef", t.coef},
                     {"monomial", t.monomial.to_string()},
                     {"bounded", t.bounded.to_string()},
                     {"threshold", t.threshold}});
  }
  Json j;
  j["equation"] = c.equation;
  j["multiplier"] = c.multiplier;
  j["terms"] = terms;
  j["remainder"] = c.remainder.to_string();
  j["lower"] = c.lower;
  j["identity_holds"] = c.identity_holds;
  j["remainder_negative"] = c.remainder_negative;
  j["cases"] = c.cases;
  j["case_branches"] = c.case_branches;
  j["complete"] = c.complete;
  return j;
}

Json solve_json(const dioph::SolveReport& r) {
  Json j;
  j["family"] = r.family;
  j["bound"] = r.bound;
  j["solutions"] = r.solutions;
  j["brute_force"] = r.brute_force;
  j["brute_force_agrees"] = r.brute_force_agrees;
  j["certificate"] = certificate_json(r.certificate);
  return j;
}

Json nosol_json(const dioph::NoSolutionReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"pattern", c.pattern},
                      {"lower", c.lower},
                      {"det_q_factors", c.det_q_factors},
                      {"det_q_plus_i_factors", c.det_q_plus_i_factors},
                      {"det_q_definite", c.det_q_definite},
                      {"det_q_plus_i_definite", c.det_q_plus_i_definite},
                      {"tuples_scanned", c.tuples_scanned},
                      {"zeros_found", c.zeros_found}});
  }
  Json j;
  j["family"] = "nosol";
  j["bound"] = r.bound;
  j["all_clear"] = r.all_clear;
  j["checks"] = checks;
  return j;
}

std::optional<std::string> catalog_name(const Graph& g) {
  const auto key = canonical_form(g);
  for (const auto& e : forbidden_catalog()) {
    if (e.graph.order() == g.order() && canonical_form(e.graph) == key) return e.name;
  }
  return std::nullopt;
}

Json mine_json(int max_n) {
  const auto mined = minimal_forbidden(max_n, interlacing_admissible);
  Json graphs = Json::array();
  std::vector<std::string> found;
  int extras = 0;
  for (const auto& g : mined) {
    const auto name = catalog_name(g);
    if (name) {
      found.push_back(*name);
    } else {
      ++extras;
    }
    graphs.push_back({{"graph6", write_graph6(g)}, {"order", g.order()}, {"catalog", name ? Json(*name) : Json()}});
  }
  Json missing = Json::array();
  for (const auto& e : forbidden_catalog()) {
    if (e.graph.order() <= max_n && std::find(found.begin(), found.end(), e.name) == found.end()) missing.push_back(e.name);
  }
  Json j;
  j["max_n"] = max_n;
  j["graphs"] = graphs;
  j["extras"] = extras;
  j["catalog_missing"] = missing;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed extensions and graphs with few eigenvalues outside {-1, 0}", "mixspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string graph_arg;
  std::string edges_arg;
  int edges_order = 0;
  auto* spectrum = app.add_subcommand("spectrum", "Exact spectral summary as JSON");
  spectrum->add_option("graph", graph_arg, "graph6 string (stdin if omitted)");
  spectrum->add_option("--edges", edges_arg, "edge list such as 0-1,1-2");
  spectrum->add_option("--order", edges_order, "vertex count for --edges (default: largest vertex + 1)");

  auto* classify_cmd = app.add_subcommand("classify", "Class membership, family labels and forbidden witnesses");
  classify_cmd->add_option("graph", graph_arg, "graph6 string (stdin if omitted)");

  std::string base_arg;
  std::string type_arg;
  auto* expand_cmd = app.add_subcommand("expand", "graph6 of a mixed extension");
  expand_cmd->add_option("--base", base_arg, "base graph: short name (K3, P4, C5, K2,3, G7, ...) or graph6")->required();
  expand_cmd->add_option("--type", type_arg, "type such as \"3,.,-2\"")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Twin reduction to a base graph and type");
  reduce_cmd->add_option("graph", graph_arg, "graph6 string (stdin if omitted)");

  std::string scan_arg;
  bool mine = false;
  int mine_max_n = 6;
  auto* forbidden_cmd = app.add_subcommand("forbidden", "Scan for or mine minimal forbidden induced subgraphs");
  auto* scan_opt = forbidden_cmd->add_option("--scan", scan_arg, "graph6 string to scan");
  auto* mine_opt = forbidden_cmd->add_flag("--mine", mine, "mine minimal graphs violating n_pos <= 2 and n_lt_neg1 <= 1");
  forbidden_cmd->add_option("--max-n", mine_max_n, "largest order to mine (1..7)")->check(CLI::Range(1, 7));
  scan_opt->excludes(mine_opt);
  forbidden_cmd->require_option(1, 2);

  std::string family;
  long long bound = 30;
  auto* solve_cmd = app.add_subcommand("solve", "Certified Diophantine solution lists");
  solve_cmd->add_option("--family", family, "bipP4, iii, iv or nosol")
      ->required()
      ->check(CLI::IsMember({"bipP4", "iii", "iv", "nosol"}));
  solve_cmd->add_option("--bound", bound, "brute-force cross-check bound")->check(CLI::Range(8LL, 1000LL));

  VerifyConfig config;
  std::string report_path;
  bool timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-validate spectral and constructive membership");
  verify_cmd->add_option("--max-n", config.max_n, "largest order (default 8)")->check(CLI::Range(1, 10));
  verify_cmd->add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1, 1024));
  auto* catalog_opt = verify_cmd->add_option("--catalog", "graph6 file to check instead of generating");
  verify_cmd->add_option("--report", report_path, "write the JSON report here instead of stdout");
  verify_cmd->add_flag("--timings", timings, "include wall times in the report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) {
      const Graph g = edges_arg.empty() ? read_graph(graph_arg, in) : graph_from_edge_text(edges_arg, edges_order);
      out << summary_json(g).dump(2) << "\n";
    } else if (classify_cmd->parsed()) {
      out << classify_json(read_graph(graph_arg, in)).dump(2) << "\n";
    } else if (expand_cmd->parsed()) {
      const Graph base = resolve_base(base_arg);
      out << write_graph6(expand(base, parse_type(type_arg))) << "\n";
    } else if (reduce_cmd->parsed()) {
      const auto r = reduce_mixed(read_graph(graph_arg, in));
      Json j;
      j["base"] = write_graph6(r.base);
      j["type"] = r.type;
      out << j.dump(2) << "\n";
    } else if (forbidden_cmd->parsed()) {
      if (mine) {
        out << mine_json(mine_max_n).dump(2) << "\n";
      } else {
        Json j;
        j["witnesses"] = witnesses_json(forbidden_scan(parse_graph6(scan_arg)));
        out << j.dump(2) << "\n";
      }
    } else if (solve_cmd->parsed()) {
      if (family == "nosol") {
        const auto r = dioph::verify_no_solution_patterns(bound);
        out << nosol_json(r).dump(2) << "\n";
        return r.all_clear ? kExitOk : kExitDiscrepancy;
      }
      const auto r = family == "bipP4" ? dioph::solve_bip_P4(bound)
                     : family == "iii" ? dioph::solve_thm10_iii(bound)
                                       : dioph::solve_thm10_iv(bound);
      out << solve_json(r).dump(2) << "\n";
      const bool certified = r.certificate.identity_holds && r.certificate.remainder_negative && r.certificate.complete;
      return certified && r.brute_force_agrees ? kExitOk : kExitDiscrepancy;
    } else if (verify_cmd->parsed()) {
      if (catalog_opt->count() > 0) {
        config.catalog = catalog_opt->as<std::string>();
      } else if (const char* env = std::getenv("GRAPH_CATALOG"); env != nullptr && *env != '\0') {
        config.catalog = env;
      }
      const auto report = run_verification(config, &err);
      const std::string text = report_json(report, timings);
      if (report_path.empty()) {
        out << text;
      } else {
        std::ofstream file(report_path);
        if (!file) throw UsageError("cannot write report to " + report_path);
        file << text;
      }
      return report.discrepancies.empty() ? kExitOk : kExitDiscrepancy;
    }
  } catch (const Graph6Error& e) {
    err << "error: malformed graph6 at position " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const TypeParseError& e) {
    err << "error: malformed type at position " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace mixspec
