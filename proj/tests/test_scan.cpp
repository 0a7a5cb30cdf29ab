#include <doctest.h>

#include <fstream>
#include <sstream>

#include "distlap/bounds.hpp"
#include "distlap/graph6.hpp"
#include "distlap/scan.hpp"

using namespace distlap;

namespace {

Graph load(const std::string& name) {
  std::ifstream in(std::string(DISTLAP_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return parse_edge_list(s.str());
}

}  // namespace

TEST_CASE("single fixtures") {
  const std::vector<Graph> ex2{load("ex2.edges")};
  const auto r = scan_conjecture(ex2);
  CHECK(r.skipped_regular == 1);
  CHECK(r.graphs_tested == 0);
  CHECK(r.min_margin == std::numeric_limits<double>::infinity());

  // margin of the reference values 38.5963 - 36.4199
  const std::vector<Graph> g2{load("g2.edges")};
  const auto m = scan_conjecture(g2);
  CHECK(m.graphs_tested == 1);
  CHECK(std::abs(m.min_margin - (38.5963 - 36.4199)) <= 1e-3);
  CHECK_FALSE(m.has_counterexample());
}

TEST_CASE("n = 4 sweep") {
  const auto r = scan_conjecture_enumerated(4);
  CHECK(r.graphs_seen == 38);
  CHECK(r.graphs_tested + r.skipped_regular == 38);
  CHECK(r.skipped_regular == 4);  // K4, C4 in three labellings
  CHECK_FALSE(r.has_counterexample());
  CHECK(r.histogram.size() == margin_bucket_edges().size() + 1);
  std::uint64_t total = 0;
  for (auto c : r.histogram) total += c;
  CHECK(total == r.graphs_tested);
  // the star K1,3 gives d2 = n3 exactly
  CHECK(std::abs(r.min_margin) <= 1e-9);
  CHECK(r.equality_count == 4);
}

TEST_CASE("stars from five vertices on violate n3 <= d2") {
  const std::vector<Graph> stars{Graph::star(5), Graph::star(6)};
  const auto r = scan_conjecture(stars);
  REQUIRE(r.counterexamples.size() == 2);
  const auto& k14 = r.counterexamples[0].graph6 == encode_graph6(Graph::star(5)) ? r.counterexamples[0]
                                                                                 : r.counterexamples[1];
  CHECK(k14.n3 == doctest::Approx(11));
  CHECK(k14.d2 == doctest::Approx(7 + std::sqrt(13.6)));
  CHECK(r.min_margin < -r.slack);
}

TEST_CASE("counterexamples exist iff min margin is below -slack") {
  for (int n = 3; n <= 5; ++n) {
    const auto r = scan_conjecture_enumerated(n);
    CHECK(r.has_counterexample() == (r.min_margin < -r.slack));
  }
}

TEST_CASE("thread count does not change the result") {
  const auto one = scan_conjecture_enumerated(5, 1e-7, false, 1);
  const auto four = scan_conjecture_enumerated(5, 1e-7, false, 4);
  CHECK(one == four);
  const auto dedup = scan_conjecture_enumerated(5, 1e-7, true, 3);
  CHECK(dedup.graphs_seen == 21);
}

TEST_CASE("graph6 stream") {
  std::istringstream in(">>graph6<<Bw\n\nBg\nnot-graph6\nB?\n" + encode_graph6(load("g1.edges")) + "\r\n");
  const auto r = scan_conjecture_graph6(in);
  CHECK(r.graphs_seen == 4);  // the disconnected line is seen, then recorded as an error
  CHECK(r.skipped_regular == 1);
  CHECK(r.graphs_tested == 2);
  REQUIRE(r.errors.size() == 2);  // undecodable line and the disconnected B?
  CHECK(r.errors[0].graph6 == "B?");
  CHECK(r.errors[1].graph6 == "not-graph6");
}

TEST_CASE("scan rejects n < 3") { CHECK_THROWS(scan_conjecture_enumerated(2)); }

TEST_CASE("soundness sweep is clean on n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const auto r = scan_soundness_enumerated(n, false, 2);
    INFO("n = ", n);
    for (const auto& v : r.violations) INFO(v.graph6, " ", v.check, " ", v.detail);
    CHECK(r.clean());
    CHECK(r.checks_run > r.graphs_checked);
  }
}

TEST_CASE("soundness on K7 and the fixtures") {
  const std::vector<Graph> k7{Graph::complete(7)};
  const auto r = scan_soundness(k7);
  CHECK(r.clean());
  CHECK(r.equality_hits.at("L_N3") == 1);
  CHECK(r.equality_hits.at("Q_CS7") == 1);

  std::vector<Graph> fixtures;
  for (const char* f : {"ex1.edges", "ex2.edges", "g1.edges", "g2.edges", "g3.edges"}) fixtures.push_back(load(f));
  const auto s = scan_soundness(fixtures);
  for (const auto& v : s.violations) INFO(v.graph6, " ", v.check, " ", v.detail);
  CHECK(s.clean());
  CHECK(s.graphs_checked == 5);
}

TEST_CASE("sampling is seeded and connected") {
  const auto a = sample_connected(7, 50, 42);
  const auto b = sample_connected(7, 50, 42);
  CHECK(a == b);
  for (const auto& g : a) CHECK(is_connected(g));
  CHECK(sample_connected(7, 50, 43) != a);
}
