#include <doctest.h>

#include "distlap/errors.hpp"
#include "distlap/graph6.hpp"
#include "distlap/report.hpp"

using namespace distlap;

namespace {

const std::string kFixtures = DISTLAP_FIXTURE_DIR;

}  // namespace

TEST_CASE("table number formatting") {
  CHECK(format_table_value(63) == "63");
  CHECK(format_table_value(62.99999) == "63");
  CHECK(format_table_value(21.874) == "21.8740");
  CHECK(format_table_value(19.37228132) == "19.3723");
  CHECK(format_table_value(-1e-12) == "0");
  CHECK(format_table_value(0.00005) == "0.0001");   // binary value lies above the tie
  CHECK(format_table_value(0.03125) == "0.0312");   // exact tie, rounds to even
  CHECK(format_table_value(0.09375) == "0.0938");
}

TEST_CASE("Ex2 table row") {
  const auto doc = build_report(resolve_graph_input(kFixtures + "/ex2.edges"));
  const auto table = render_table(doc, TableTarget::Laplacian);
  CHECK(table.find("29.4919 | 63 | 21.8740 | 27 | 21 | 21.4782") != std::string::npos);
  CHECK(table.find("L spectral radius: 19.3723") != std::string::npos);
  CHECK(table.find("Q spectral") == std::string::npos);
}

TEST_CASE("G3 signless rows") {
  const auto doc = build_report(resolve_graph_input(kFixtures + "/g3.edges"));
  const auto table = render_table(doc, TableTarget::SignlessLaplacian);
  CHECK(table.find("Q spectral radius: 45.4891") != std::string::npos);
  CHECK(table.find("| 44.2380\n") != std::string::npos);
  CHECK(table.find("| 50.1151 | 47.5590 | 47.2386") != std::string::npos);
}

TEST_CASE("K4 reports equality everywhere it should") {
  const auto doc = build_report(resolve_graph_input("K4"));
  const auto table = render_table(doc, TableTarget::Both);
  CHECK(table.find("L_N3 (n3): complete-graph") != std::string::npos);
  CHECK(table.find("Q_CS7 (CS7): complete-graph") != std::string::npos);
  CHECK(table.find("Q_TB_UP (tb): transmission-regular") != std::string::npos);
  CHECK(table.find("VIOLATED") == std::string::npos);
}

TEST_CASE("JSON round trip is byte identical") {
  const std::vector<std::string> inputs{"K5", "P6", "C7", "S5", "Bg", kFixtures + "/g1.edges", kFixtures + "/ex2.edges"};
  for (const auto& input : inputs) {
    const auto doc = build_report(resolve_graph_input(input));
    const std::string first = dump_canonical(to_json(doc));
    const auto reparsed = report_from_json(nlohmann::json::parse(first));
    const std::string second = dump_canonical(to_json(reparsed));
    CHECK(first == second);
    CHECK(reparsed.graph == doc.graph);
    CHECK(reparsed.l_spectrum == doc.l_spectrum);
    CHECK(reparsed.diagnoses == doc.diagnoses);
    CHECK(dump_canonical(nlohmann::json::parse(first)) == first);
  }
}

TEST_CASE("JSON content") {
  const auto j = to_json(build_report(Graph::path(3)));
  CHECK(j.at("schema_version") == "1.0");
  CHECK(j.at("graph").at("graph6") == "Bg");
  CHECK(j.at("graph").at("n") == 3);
  CHECK(j.at("spectra").at("L").size() == 3);
  CHECK(j.at("bounds").size() == kBoundTable.size());
  const auto& d1 = j.at("bounds").at(static_cast<std::size_t>(BoundId::L_D1));
  CHECK(d1.at("applicable") == false);
  CHECK(d1.at("value").is_null());
  CHECK(j.at("timing_ms").contains("spectra"));
  CHECK_THROWS(report_from_json(nlohmann::json::parse(R"({"schema_version": "1.0"})")));
}

TEST_CASE("input resolution") {
  CHECK(resolve_graph_input("K6") == Graph::complete(6));
  CHECK(resolve_graph_input("P4") == Graph::path(4));
  CHECK(resolve_graph_input("C5") == Graph::cycle(5));
  CHECK(resolve_graph_input("S4") == Graph::star(4));
  CHECK(resolve_graph_input("D~{") == Graph::complete(5));
  CHECK_THROWS_AS(resolve_graph_input("no such thing"), ParseError);
  CHECK_THROWS_AS(build_report(resolve_graph_input("B?")), DisconnectedGraph);
}

TEST_CASE("scan documents") {
  const auto r = scan_conjecture_enumerated(5, 1e-7, false, 1);
  const auto j = to_json(r);
  CHECK(j.at("graphs_seen") == 728);
  CHECK(j.at("counterexample_found") == r.has_counterexample());
  CHECK(j.at("holds_weak") == !r.has_counterexample());
  CHECK(j.at("histogram").at("counts").size() == margin_bucket_edges().size() + 1);
  const auto text = summary_text(r);
  CHECK(text.find("tested 715") != std::string::npos);

  const auto empty = to_json(ScanResult{});
  CHECK(empty.at("min_margin").is_null());

  const std::vector<Graph> k4{Graph::complete(4)};
  const auto s = to_json(scan_soundness(k4));
  CHECK(s.at("clean") == true);
  CHECK(s.at("graphs_checked") == 1);
}
