// ncg: command-line front end for the non-commuting graph toolkit.

#include "ncg/catalog.hpp"
#include "ncg/graph.hpp"
#include "ncg/harness.hpp"
#include "ncg/planarity.hpp"
#include "ncg/spectrum.hpp"
#include "ncg/todd_coxeter.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ncg;

struct GroupOptions {
  std::string family;
  std::optional<std::int64_t> p, q, m, n, k, z, exponent;
  std::vector<std::string> generators{"a", "b"};
  std::vector<std::string> relators;
  std::size_t cosetBound = 100000;

  void attach(CLI::App* app) {
    app->add_option("--family", family, "group family, e.g. Dihedral, SuzukiSz2, Presentation")->required();
    app->add_option("--p", p);
    app->add_option("--q", q);
    app->add_option("--m", m);
    app->add_option("--n", n);
    app->add_option("--k", k);
    app->add_option("--exponent", exponent);
    app->add_option("--z", z, "take the direct product with Cyclic(z) when z > 1");
    app->add_option("--generators", generators, "Presentation only")->delimiter(',');
    app->add_option("--relators", relators, "Presentation only, e.g. \"a^4,b^2,abab\"")->delimiter(',');
    app->add_option("--coset-bound", cosetBound, "Presentation only");
  }

  [[nodiscard]] GroupSpec spec() const {
    const auto f = parse_family(family);
    if (!f) throw CLI::ValidationError("--family", "unknown family " + family);
    GroupSpec spec;
    if (*f == Family::Presentation) {
      spec = GroupSpec::from_presentation(make_presentation(generators, relators, cosetBound));
    } else {
      std::map<std::string, std::int64_t> params;
      auto put = [&](const char* key, const std::optional<std::int64_t>& v) {
        if (v) params[key] = *v;
      };
      put("p", p);
      put("q", q);
      put("m", m);
      put("n", n);
      put("k", k);
      put("exponent", exponent);
      spec = GroupSpec::make(*f, std::move(params));
    }
    if (z && *z > 1) spec = GroupSpec::product(spec, GroupSpec::make(Family::Cyclic, {{"k", *z}}));
    return spec;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

ReportFormat format_or_throw(const std::string& name) {
  const auto f = parse_format(name);
  if (!f) throw CLI::ValidationError("--format", "expected json, csv or table");
  return *f;
}

OracleMode oracle_or_throw(const std::string& name) {
  const auto o = parse_oracle(name);
  if (!o) throw CLI::ValidationError("--oracle", "expected clique, numeric or both");
  return *o;
}

int cmd_build(const GroupOptions& go) {
  const auto g = build(go.spec());
  const auto pr = commutativity_degree_both(g);
  std::cout << "group: " << g.spec().name() << "\n"
            << "order: " << g.order() << "\n"
            << "center: " << center(g).size() << "\n"
            << "centralizers: " << centralizer_count(g) << "\n"
            << "Pr (pairs): " << to_display(pr.byPairs) << "\n"
            << "Pr (classes): " << to_display(pr.byClasses) << "\n";
  return pr.agree() ? 0 : 1;
}

int cmd_graph(const GroupOptions& go) {
  const auto g = build(go.spec());
  const auto graph = non_commuting_graph(g);
  const auto cliques = clique_decomposition(complement(graph));
  std::cout << "V: " << graph.vertex_count() << "\n"
            << "E: " << graph.edge_count() << "\n"
            << "commuting cliques: " << (cliques ? cliques->to_string() : std::string("not a clique union")) << "\n";
  if (graph.vertex_count() <= kMaxPlanarityVertices) std::cout << "planar: " << (is_planar(graph) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_spectrum(const GroupOptions& go, OracleMode oracle) {
  const auto g = build(go.spec());
  const auto graph = non_commuting_graph(g);
  int code = 0;
  std::optional<LaplacianSpectrum> byCliques;
  std::optional<LaplacianSpectrum> byNumeric;
  if (oracle != OracleMode::NumericOnly) {
    if (const auto cliques = clique_decomposition(complement(graph))) {
      byCliques = spectrum_from_cliques(*cliques, graph.vertex_count());
      std::cout << "clique: " << byCliques->to_string() << "\n";
    } else {
      std::cout << "clique: not a clique union\n";
      code = 1;
    }
  }
  if (oracle != OracleMode::CliqueOnly) {
    byNumeric = spectrum_numeric(graph);
    std::cout << "numeric: " << byNumeric->to_string() << (byNumeric->certified ? " (certified)" : "") << "\n";
    if (!byNumeric->certified) {
      std::cout << "warning: " << byNumeric->warning << "\n";
      code = 1;
    }
  }
  if (byCliques && byNumeric) {
    const bool agree = *byCliques == *byNumeric;
    std::cout << "oracles agree: " << (agree ? "yes" : "no") << "\n";
    if (!agree) code = 1;
  }
  return code;
}

int cmd_energy(const GroupOptions& go, OracleMode oracle) {
  const auto r = run_case(go.spec(), std::nullopt, CaseOptions{oracle, {}});
  if (r.verdict.kind == VerdictKind::Error) {
    std::cerr << "error: " << r.verdict.reason << "\n";
    return 1;
  }
  std::cout << "LE: " << to_display(r.leComputed) << "\n";
  return 0;
}

int cmd_verify(const GroupOptions& go, const std::string& resultName, OracleMode oracle, const std::string& format) {
  const auto id = parse_result(resultName);
  if (!id) throw CLI::ValidationError("--result", "unknown result " + resultName);
  const std::vector<CaseResult> results{run_case(go.spec(), id, CaseOptions{oracle, {}})};
  std::cout << emit_report(results, format_or_throw(format));
  const auto& v = results.front().verdict;
  if (!v.reason.empty()) std::cerr << verdict_name(v.kind) << ": " << v.reason << "\n";
  return exit_code(results);
}

struct SweepOptions {
  std::string config = "defaults";
  std::string format = "table";
  std::string out;
  std::string expectErrata;
  std::string oracle;
  std::optional<std::size_t> maxOrder;
  unsigned threads = 0;
  bool timings = false;
};

int cmd_sweep(const SweepOptions& so) {
  auto cfg = so.config == "defaults" ? default_sweep() : parse_sweep_config(read_file(so.config));
  if (!so.oracle.empty()) cfg.oracle = oracle_or_throw(so.oracle);
  if (so.maxOrder) cfg.maxGroupOrder = *so.maxOrder;
  if (so.threads) cfg.threads = so.threads;
  const auto format = format_or_throw(so.format);
  const auto results = run_sweep(cfg);
  write_output(emit_report(results, format, ReportOptions{so.timings}), so.out);
  if (so.expectErrata.empty()) return exit_code(results);
  const auto expected = parse_expected_errata(read_file(so.expectErrata));
  for (const auto& line : compare_errata(results, expected)) std::cerr << line << "\n";
  return exit_code_with_errata(results, expected);
}

int cmd_planarity(std::size_t maxOrder, const std::string& format) {
  const auto survey = planarity_survey(maxOrder);
  std::cout << emit_survey(survey, format_or_throw(format));
  if (!survey.planarSetAsExpected) std::cerr << survey.message << "\n";
  return survey.planarSetAsExpected ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian energy of non-commuting graphs of finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ncg 1.0.0");

  GroupOptions go;
  std::string oracle = "both";
  std::string resultName;
  std::string format = "table";

  auto* build_cmd = app.add_subcommand("build", "order, |Z(G)|, centralizer count and Pr(G)");
  go.attach(build_cmd);
  auto* graph_cmd = app.add_subcommand("graph", "vertex and edge counts and the commuting clique structure");
  go.attach(graph_cmd);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum of the non-commuting graph");
  go.attach(spectrum_cmd);
  spectrum_cmd->add_option("--oracle", oracle, "clique, numeric or both");
  auto* energy_cmd = app.add_subcommand("energy", "exact Laplacian energy");
  go.attach(energy_cmd);
  energy_cmd->add_option("--oracle", oracle, "clique, numeric or both");
  auto* verify_cmd = app.add_subcommand("verify", "compare one result's closed form with the computed energy");
  go.attach(verify_cmd);
  verify_cmd->add_option("--result", resultName, "e.g. Thm2.1, Cor2.6, PropPr2")->required();
  verify_cmd->add_option("--oracle", oracle, "clique, numeric or both");
  verify_cmd->add_option("--format", format, "json, csv or table");

  SweepOptions so;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a batch of cases and report verdicts");
  sweep_cmd->add_option("--config", so.config, "JSON config path, or 'defaults'");
  sweep_cmd->add_option("--format", so.format, "json, csv or table");
  sweep_cmd->add_option("--out", so.out, "output path; stdout when absent");
  sweep_cmd->add_option("--expect-errata", so.expectErrata, "JSON list of the expected Mismatch cases");
  sweep_cmd->add_option("--oracle", so.oracle, "override the config's oracle mode");
  sweep_cmd->add_option("--max-order", so.maxOrder, "override the config's maxGroupOrder");
  sweep_cmd->add_option("--threads", so.threads, "worker threads; NCG_THREADS when absent");
  sweep_cmd->add_flag("--timings", so.timings, "include wall times");

  std::size_t maxOrder = 16;
  std::string surveyFormat = "table";
  auto* planarity_cmd = app.add_subcommand("planarity", "planarity of every catalog group up to an order");
  planarity_cmd->add_option("--max-order", maxOrder)->check(CLI::Range(1, 16));
  planarity_cmd->add_option("--format", surveyFormat, "json, csv or table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build_cmd) return cmd_build(go);
    if (*graph_cmd) return cmd_graph(go);
    if (*spectrum_cmd) return cmd_spectrum(go, oracle_or_throw(oracle));
    if (*energy_cmd) return cmd_energy(go, oracle_or_throw(oracle));
    if (*verify_cmd) return cmd_verify(go, resultName, oracle_or_throw(oracle), format);
    if (*sweep_cmd) return cmd_sweep(so);
    if (*planarity_cmd) return cmd_planarity(maxOrder, surveyFormat);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
