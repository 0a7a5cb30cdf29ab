#pragma once

// Report documents for the command-line front end: the analyze pipeline with
// stage timings, JSON (de)serialisation and fixed-width text tables.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "distlap/bounds.hpp"
#include "distlap/graph.hpp"
#include "distlap/scan.hpp"

namespace distlap {

inline constexpr std::string_view kSchemaVersion = "1.0";

struct ReportDocument {
  std::string schema_version{kSchemaVersion};
  Graph graph{1};
  std::string graph6;
  std::vector<double> d_spectrum;
  std::vector<double> l_spectrum;
  std::vector<double> q_spectrum;
  BoundReport bounds;
  std::vector<EqualityDiagnosis> diagnoses;               ///< one per applicable bound
  std::vector<std::pair<std::string, double>> timing_ms;  ///< stage name, wall milliseconds
};

/// Runs distances, operators, spectra, bounds and diagnoses on `g`.
ReportDocument build_report(const Graph& g);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

/// Compact dump; keys are sorted and doubles use the shortest round-trip form,
/// so parse + dump reproduces the input bytes.
std::string dump_canonical(const nlohmann::json& j);

enum class TableTarget { Laplacian, SignlessLaplacian, Both };

/// Four decimals, or an integer when the rounded value ends in .0000. Ties
/// follow the C library, which rounds the exact binary value half to even.
std::string format_table_value(double x);

/// Rows of bound values joined by " | ", one row per bound group:
/// L (i1 d1 d2 n1 n2 n3), Q lower (i3 i5 CI5), Q upper (i4 i6 i2 CS6 CS7).
std::string render_table(const ReportDocument& doc, TableTarget target);

nlohmann::json to_json(const ScanResult& r);
std::string summary_text(const ScanResult& r);

nlohmann::json to_json(const SoundnessReport& r);
std::string summary_text(const SoundnessReport& r);

/// Existing file (".g6" read as graph6, anything else as an edge list), a
/// builtin K<n>, P<n>, C<n> or S<n>, or else an inline graph6 string.
Graph resolve_graph_input(const std::string& input);

}  // namespace distlap
