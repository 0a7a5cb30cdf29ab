// distlap: spectral-radius bounds for distance Laplacians of small graphs.
//
//   distlap analyze <input> [--format table|json] [--target L|Q|both]
//   distlap scan [--enumerate N | --graph6 PATH] [--slack X] [--dedup] [--threads T]

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "distlap/enumerate.hpp"
#include "distlap/errors.hpp"
#include "distlap/report.hpp"
#include "distlap/scan.hpp"

namespace {

int run_analyze(const std::string& input, const std::string& format, const std::string& target) {
  const auto doc = distlap::build_report(distlap::resolve_graph_input(input));
  if (format == "json") {
    std::cout << distlap::dump_canonical(distlap::to_json(doc)) << "\n";
  } else {
    const auto t = target == "L"   ? distlap::TableTarget::Laplacian
                   : target == "Q" ? distlap::TableTarget::SignlessLaplacian
                                   : distlap::TableTarget::Both;
    std::cout << distlap::render_table(doc, t);
  }
  return doc.bounds.all_satisfied() ? 0 : 3;
}

int run_scan(int enumerate, const std::string& graph6_path, double slack, bool dedup, unsigned threads) {
  distlap::ScanResult result;
  if (!graph6_path.empty()) {
    if (graph6_path == "-") {
      result = distlap::scan_conjecture_graph6(std::cin, slack);
    } else {
      std::ifstream in(graph6_path);
      if (!in) throw distlap::ParseError("cannot open " + graph6_path);
      result = distlap::scan_conjecture_graph6(in, slack);
    }
  } else {
    if (enumerate < 3 || enumerate > distlap::kMaxEnumerationOrder)
      throw std::invalid_argument("--enumerate needs 3 <= N <= " +
                                  std::to_string(distlap::kMaxEnumerationOrder) +
                                  " (the n3 bound needs n >= 3; use --graph6 for larger graphs)");
    result = distlap::scan_conjecture_enumerated(enumerate, slack, dedup, threads);
  }
  std::cout << distlap::dump_canonical(distlap::to_json(result)) << "\n";
  std::cerr << distlap::summary_text(result);
  // counterexamples are findings, not failures
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance Laplacian spectral-radius bounds"};
  app.set_version_flag("--version", std::string(DISTLAP_VERSION));
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Spectra, bounds and equality diagnoses of one graph");
  std::string input, format = "table", target = "both";
  analyze->add_option("input", input, "edge-list file, .g6 file, builtin (K5, P4, C6, S5) or graph6 string")
      ->required();
  analyze->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  analyze->add_option("--target", target, "L, Q or both")->check(CLI::IsMember({"L", "Q", "both"}));

  auto* scan = app.add_subcommand("scan", "Test n3 <= d2 on graphs that are not transmission regular");
  int enumerate = 0;
  std::string graph6_path;
  double slack = 1e-7;
  bool dedup = false;
  unsigned threads = 0;
  auto* enum_opt = scan->add_option("--enumerate", enumerate, "all connected graphs on N labelled vertices");
  auto* g6_opt = scan->add_option("--graph6", graph6_path, "graph6 file, one graph per line ('-' for stdin)");
  enum_opt->excludes(g6_opt);
  scan->add_option("--slack", slack, "margins below -slack are counterexamples")->check(CLI::NonNegativeNumber);
  scan->add_flag("--dedup", dedup, "one graph per isomorphism class");
  scan->add_option("--threads", threads, "worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(input, format, target);
    if (enum_opt->count() == 0 && g6_opt->count() == 0) {
      std::cerr << "scan: one of --enumerate or --graph6 is required\n";
      return 2;
    }
    return run_scan(enumerate, graph6_path, slack, dedup, threads);
  } catch (const std::exception& e) {
    std::cerr << "distlap: " << e.what() << "\n";
    return 1;
  }
}
