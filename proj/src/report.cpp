#include "distlap/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "distlap/errors.hpp"
#include "distlap/graph6.hpp"

namespace distlap {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string_view target_name(Target t) { return t == Target::Laplacian ? "L" : "Q"; }
std::string_view side_name(Side s) { return s == Side::Lower ? "lower" : "upper"; }

json diagnosis_json(const EqualityDiagnosis& d) {
  return {{"bound", to_string(d.bound)},
          {"equality_within_tol", d.equality_within_tol},
          {"certificate", to_string(d.certificate)}};
}

EqualityDiagnosis diagnosis_from_json(const json& j) {
  EqualityDiagnosis d;
  const auto id = bound_from_string(j.at("bound").get<std::string>());
  const auto cert = certificate_from_string(j.at("certificate").get<std::string>());
  if (!id || !cert) throw std::invalid_argument("unknown bound or certificate in report");
  d.bound = *id;
  d.equality_within_tol = j.at("equality_within_tol").get<bool>();
  d.certificate = *cert;
  return d;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<double> spectrum_values(const Spectrum<double>& s) { return s.values; }

}  // namespace

ReportDocument build_report(const Graph& g) {
  ReportDocument doc;
  doc.graph = g;
  doc.graph6 = encode_graph6(g);

  auto t = Clock::now();
  GraphAnalysis a{g, compute_distance_data(g), {}, {}, {}, {}};
  doc.timing_ms.emplace_back("distances", elapsed_ms(t));

  t = Clock::now();
  a.operators = build_operators(a.distances);
  doc.timing_ms.emplace_back("operators", elapsed_ms(t));

  t = Clock::now();
  a.d_spectrum = eig_symmetric(a.operators.d_mat.cast<double>());
  a.l_spectrum = eig_symmetric(a.operators.l_mat.cast<double>());
  a.q_spectrum = eig_symmetric(a.operators.q_mat.cast<double>());
  doc.timing_ms.emplace_back("spectra", elapsed_ms(t));
  doc.d_spectrum = spectrum_values(a.d_spectrum);
  doc.l_spectrum = spectrum_values(a.l_spectrum);
  doc.q_spectrum = spectrum_values(a.q_spectrum);

  t = Clock::now();
  doc.bounds = evaluate_bounds(a);
  doc.timing_ms.emplace_back("bounds", elapsed_ms(t));
  for (const auto& e : doc.bounds.entries)
    if (e.diagnosis) doc.diagnoses.push_back(*e.diagnosis);
  return doc;
}

json to_json(const ReportDocument& doc) {
  json edges = json::array();
  for (const auto& e : doc.graph.edges()) edges.push_back({e.u, e.v});

  json bounds = json::array();
  for (const auto& e : doc.bounds.entries) {
    const auto& meta = info(e.id);
    json b = {{"id", meta.name},
              {"label", meta.label},
              {"target", target_name(meta.target)},
              {"side", side_name(meta.side)},
              {"applicable", e.value.has_value()},
              {"value", e.value ? json(*e.value) : json(nullptr)},
              {"satisfied", e.satisfied},
              {"gap", e.gap}};
    b["diagnosis"] = e.diagnosis ? diagnosis_json(*e.diagnosis) : json(nullptr);
    bounds.push_back(std::move(b));
  }

  json diagnoses = json::array();
  for (const auto& d : doc.diagnoses) diagnoses.push_back(diagnosis_json(d));

  json timing = json::object();
  for (const auto& [stage, ms] : doc.timing_ms) timing[stage] = ms;

  return {{"schema_version", doc.schema_version},
          {"graph", {{"n", doc.graph.order()}, {"edges", edges}, {"graph6", doc.graph6}}},
          {"spectra", {{"D", doc.d_spectrum}, {"L", doc.l_spectrum}, {"Q", doc.q_spectrum}}},
          {"radii", {{"L", doc.bounds.l_radius}, {"Q", doc.bounds.q_radius}}},
          {"bounds", bounds},
          {"diagnoses", diagnoses},
          {"timing_ms", timing}};
}

ReportDocument report_from_json(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();

  const auto& g = j.at("graph");
  std::vector<Edge> edges;
  for (const auto& e : g.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  doc.graph = Graph(g.at("n").get<int>(), std::move(edges));
  doc.graph6 = g.at("graph6").get<std::string>();

  const auto& s = j.at("spectra");
  doc.d_spectrum = s.at("D").get<std::vector<double>>();
  doc.l_spectrum = s.at("L").get<std::vector<double>>();
  doc.q_spectrum = s.at("Q").get<std::vector<double>>();

  doc.bounds.graph_id = doc.graph6;
  doc.bounds.l_radius = j.at("radii").at("L").get<double>();
  doc.bounds.q_radius = j.at("radii").at("Q").get<double>();
  for (const auto& b : j.at("bounds")) {
    BoundEntry e;
    const auto id = bound_from_string(b.at("id").get<std::string>());
    if (!id) throw std::invalid_argument("unknown bound id in report");
    e.id = *id;
    if (!b.at("value").is_null()) e.value = b.at("value").get<double>();
    e.satisfied = b.at("satisfied").get<bool>();
    e.gap = b.at("gap").get<double>();
    if (!b.at("diagnosis").is_null()) e.diagnosis = diagnosis_from_json(b.at("diagnosis"));
    doc.bounds.entries.push_back(e);
  }
  for (const auto& d : j.at("diagnoses")) doc.diagnoses.push_back(diagnosis_from_json(d));
  for (const auto& [stage, ms] : j.at("timing_ms").items()) doc.timing_ms.emplace_back(stage, ms.get<double>());
  return doc;
}

std::string dump_canonical(const json& j) { return j.dump(); }

std::string format_table_value(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  if (s.size() > 5 && s.compare(s.size() - 5, 5, ".0000") == 0) s.resize(s.size() - 5);
  if (s == "-0") s = "0";
  return s;
}

std::string render_table(const ReportDocument& doc, TableTarget target) {
  std::ostringstream out;
  auto row = [&](std::string_view title, std::initializer_list<BoundId> ids) {
    std::string labels, values;
    bool any = false;
    for (BoundId id : ids) {
      const auto& e = doc.bounds.entry(id);
      if (!labels.empty()) {
        labels += " | ";
        values += " | ";
      }
      labels += info(id).label;
      values += e.value ? format_table_value(*e.value) : std::string("-");
      any = any || e.value.has_value();
    }
    if (!any) return;
    out << title << "\n  " << labels << "\n  " << values << "\n";
  };
  auto spectrum = [&](std::string_view name, const std::vector<double>& v) {
    out << name << " spectrum:";
    for (double x : v) out << ' ' << format_table_value(x);
    out << "\n";
  };

  out << "graph " << doc.graph6 << "  n=" << doc.graph.order() << " m=" << doc.graph.size() << "\n";
  if (target != TableTarget::SignlessLaplacian) {
    spectrum("L", doc.l_spectrum);
    out << "L spectral radius: " << format_table_value(doc.bounds.l_radius) << "\n";
    row("L upper bounds", {BoundId::L_I1, BoundId::L_D1, BoundId::L_D2, BoundId::L_N1,
                           BoundId::L_N2, BoundId::L_N3});
    row("L transmission-regular bounds", {BoundId::L_R1, BoundId::L_R2});
  }
  if (target != TableTarget::Laplacian) {
    spectrum("Q", doc.q_spectrum);
    out << "Q spectral radius: " << format_table_value(doc.bounds.q_radius) << "\n";
    row("Q transmission bounds", {BoundId::Q_TB_LO, BoundId::Q_TB_UP});
    row("Q lower bounds", {BoundId::Q_I3, BoundId::Q_I5, BoundId::Q_CI5});
    row("Q upper bounds", {BoundId::Q_I4, BoundId::Q_I6, BoundId::Q_I2, BoundId::Q_CS6, BoundId::Q_CS7});
  }

  bool header = false;
  for (const auto& d : doc.diagnoses) {
    const auto t = info(d.bound).target;
    if (!d.equality_within_tol) continue;
    if ((t == Target::Laplacian && target == TableTarget::SignlessLaplacian) ||
        (t == Target::SignlessLaplacian && target == TableTarget::Laplacian))
      continue;
    if (!header) out << "equality cases\n";
    header = true;
    out << "  " << info(d.bound).name << " (" << info(d.bound).label << "): " << to_string(d.certificate) << "\n";
  }
  for (const auto& e : doc.bounds.entries)
    if (e.value && !e.satisfied) out << "VIOLATED " << to_string(e.id) << " gap " << e.gap << "\n";
  return out.str();
}

// ------------------------------------------------------------------ scans

json to_json(const ScanResult& r) {
  auto cases = [](const std::vector<MarginCase>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back({{"graph6", c.graph6}, {"n3", c.n3}, {"d2", c.d2}, {"margin", c.margin()}});
    return a;
  };
  json errors = json::array();
  for (const auto& e : r.errors) errors.push_back({{"graph6", e.graph6}, {"message", e.message}});

  return {{"slack", r.slack},
          {"graphs_seen", r.graphs_seen},
          {"graphs_tested", r.graphs_tested},
          {"skipped_regular", r.skipped_regular},
          {"skipped_small", r.skipped_small},
          {"min_margin", finite_or_null(r.min_margin)},
          {"min_margin_graph", r.min_margin_graph},
          {"counterexample_found", r.has_counterexample()},
          {"counterexamples", cases(r.counterexamples)},
          {"equality_count", r.equality_count},
          {"equality_cases", cases(r.equality_cases)},
          {"holds_weak", !r.has_counterexample()},
          {"holds_strict", !r.has_counterexample() && r.equality_count == 0},
          {"histogram", {{"upper_edges", margin_bucket_edges()}, {"counts", r.histogram}}},
          {"errors", errors}};
}

std::string summary_text(const ScanResult& r) {
  std::ostringstream out;
  out << "graphs seen " << r.graphs_seen << ", tested " << r.graphs_tested << ", skipped (transmission regular) "
      << r.skipped_regular << ", skipped (n < 3) " << r.skipped_small << "\n";
  if (r.graphs_tested > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", r.min_margin);
    out << "min margin d2 - n3 = " << buf << " at " << r.min_margin_graph << "\n";
  }
  out << "counterexamples (margin < -" << r.slack << "): " << r.counterexamples.size() << "\n";
  out << "equality within tolerance: " << r.equality_count << "\n";
  out << "n3 <= d2 (weak): " << (r.has_counterexample() ? "refuted" : "holds")
      << "; n3 < d2 (strict): " << (!r.has_counterexample() && r.equality_count == 0 ? "holds" : "refuted") << "\n";
  const auto& edges = margin_bucket_edges();
  out << "margin histogram:";
  for (std::size_t i = 0; i < r.histogram.size(); ++i) {
    out << (i == 0 ? " " : ", ");
    if (i < edges.size()) out << "<=" << edges[i];
    else out << ">" << edges.back();
    out << ": " << r.histogram[i];
  }
  out << "\n";
  if (!r.errors.empty()) out << "errors: " << r.errors.size() << "\n";
  return out.str();
}

json to_json(const SoundnessReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"graph6", v.graph6}, {"check", v.check}, {"detail", v.detail}});
  return {{"graphs_checked", r.graphs_checked},
          {"checks_run", r.checks_run},
          {"trees_checked", r.trees_checked},
          {"violations", violations},
          {"equality_hits", r.equality_hits},
          {"noncomplete_n3_equalities", r.noncomplete_n3_equalities},
          {"clean", r.clean()}};
}

std::string summary_text(const SoundnessReport& r) {
  std::ostringstream out;
  out << "graphs " << r.graphs_checked << ", checks " << r.checks_run << ", trees " << r.trees_checked
      << ", violations " << r.violations.size() << "\n";
  for (std::size_t i = 0; i < r.violations.size() && i < 20; ++i)
    out << "  " << r.violations[i].graph6 << " " << r.violations[i].check << " " << r.violations[i].detail << "\n";
  return out.str();
}

// ------------------------------------------------------------------ input

Graph resolve_graph_input(const std::string& input) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) {
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (fs::path(input).extension() == ".g6") {
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos) return parse_graph6(line);
      }
      throw ParseError("no graph in " + input);
    }
    return parse_edge_list(text);
  }

  static const std::regex builtin("^([KPCS])([0-9]+)$");
  std::smatch m;
  if (std::regex_match(input, m, builtin)) {
    const int n = std::stoi(m[2].str());
    switch (m[1].str()[0]) {
      case 'K': return Graph::complete(n);
      case 'P': return Graph::path(n);
      case 'C': return Graph::cycle(n);
      default: return Graph::star(n);
    }
  }
  return parse_graph6(input);
}

}  // namespace distlap
