#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commgraph/report.hpp"

namespace {

using namespace commgraph;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + out_path + "'");
  }
  out << text;
}

int cmd_analyze(const std::string& ring_spec, double budget,
                const std::string& format, std::uint64_t cap) {
  const RingPtr ring = Ring::make(parse_ring_spec(ring_spec));
  const CommutingGraph graph(ring, cap);
  const Invariants inv = invariants(graph, budget);
  std::cout << (format == "json" ? invariants_json(graph, inv)
                                 : invariants_table(graph, inv));
  return 0;
}

int cmd_verify(const std::string& ring_spec, double budget,
               const std::string& format, std::uint64_t cap) {
  VerifyOptions options;
  options.budget_seconds = budget;
  options.vertex_cap = cap;
  const VerifyReport report =
      build_verify_report(parse_ring_spec(ring_spec), options);
  std::cout << (format == "json" ? verify_json(report)
                                 : verify_table(report));
  return report.all_gating_match() ? 0 : 1;
}

int cmd_conjecture(std::uint64_t max_n, double budget,
                   const std::string& format, std::uint64_t cap) {
  VerifyOptions options;
  options.budget_seconds = budget;
  options.vertex_cap = cap;
  const auto rows = conjecture_sweep(max_n, options);
  std::cout << (format == "json" ? conjecture_json(rows)
                                 : conjecture_table(rows));
  return 0;
}

int cmd_export(const std::string& ring_spec, double budget,
               const std::string& format, const std::string& out_path,
               std::uint64_t cap) {
  const RingPtr ring = Ring::make(parse_ring_spec(ring_spec));
  const CommutingGraph graph(ring, cap);
  std::string text;
  if (format == "dot") {
    text = export_dot(graph);
  } else if (format == "csv-degrees") {
    text = export_csv_degrees(graph);
  } else {
    text = invariants_json(graph, invariants(graph, budget));
  }
  write_output(text, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for commuting graphs of 2x2 upper triangular matrices "
      "over finite commutative rings"};
  app.require_subcommand(1);

  std::string ring_spec;
  double budget = 60.0;
  std::string format = "table";
  std::string export_format;
  std::string out_path;
  std::uint64_t cap = 20000;
  std::uint64_t max_n = 10;

  const std::string ring_help =
      "Ring description: zmod:<n>, gf:<p>^<n>[:<coeffs>], "
      "prod:<spec>,<spec>";

  CLI::App* analyze =
      app.add_subcommand("analyze", "Build the graph and report invariants");
  analyze->add_option("--ring", ring_spec, ring_help)->required();
  analyze->add_option("--budget", budget,
                      "Solver budget in seconds per extremal quantity");
  analyze->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  analyze->add_option("--cap", cap, "Vertex cap for graph construction");

  CLI::App* verify = app.add_subcommand(
      "verify", "Check every applicable closed form against measurement");
  verify->add_option("--ring", ring_spec, ring_help)->required();
  verify->add_option("--budget", budget,
                     "Solver budget in seconds per extremal quantity");
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--cap", cap, "Vertex cap for graph construction");

  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "Sweep the claimed independence number over zmod:n");
  conjecture->add_option("--max-n", max_n, "Largest modulus to test");
  conjecture->add_option("--budget", budget,
                         "Solver budget in seconds per modulus");
  conjecture->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  conjecture->add_option("--cap", cap, "Vertex cap for graph construction");

  CLI::App* exp =
      app.add_subcommand("export", "Write the graph in an exchange format");
  exp->add_option("--ring", ring_spec, ring_help)->required();
  exp->add_option("--format", export_format, "Export format")
      ->required()
      ->check(CLI::IsMember({"dot", "csv-degrees", "json-report"}));
  exp->add_option("--out", out_path, "Output file (stdout when omitted)");
  exp->add_option("--budget", budget,
                  "Solver budget in seconds (json-report only)");
  exp->add_option("--cap", cap, "Vertex cap for graph construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(ring_spec, budget, format, cap);
    if (*verify) return cmd_verify(ring_spec, budget, format, cap);
    if (*conjecture) return cmd_conjecture(max_n, budget, format, cap);
    if (*exp) return cmd_export(ring_spec, budget, export_format, out_path, cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
