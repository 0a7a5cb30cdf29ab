#pragma once

// Sweeps over graph streams. Accumulators are mergeable so that workers can
// each own one; merging is order independent (minima, counts, lists sorted by
// graph6 encoding), which keeps results deterministic.

#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "distlap/bound_id.hpp"
#include "distlap/graph.hpp"

namespace distlap {

struct MarginCase {
  std::string graph6;
  double n3 = 0;  ///< trace/Frobenius Laplacian bound
  double d2 = 0;  ///< distance Frobenius bound

  double margin() const { return d2 - n3; }
  friend bool operator==(const MarginCase&, const MarginCase&) = default;
};

struct ScanError {
  std::string graph6;
  std::string message;
  friend bool operator==(const ScanError&, const ScanError&) = default;
};

/// Margin histogram bucket upper edges; the last bucket is open.
inline const std::vector<double>& margin_bucket_edges() {
  static const std::vector<double> edges{0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  return edges;
}

/// Outcome of checking "n3 <= d2" on graphs that are not transmission regular.
/// Margins below -slack are counterexamples; margins in [-slack, 0] are
/// reported separately as equality within tolerance.
struct ScanResult {
  double slack = 1e-7;
  std::uint64_t graphs_seen = 0;
  std::uint64_t graphs_tested = 0;
  std::uint64_t skipped_regular = 0;
  std::uint64_t skipped_small = 0;  ///< n < 3
  double min_margin = std::numeric_limits<double>::infinity();
  std::string min_margin_graph;
  std::vector<MarginCase> counterexamples;
  std::uint64_t equality_count = 0;
  std::vector<MarginCase> equality_cases;  ///< first kMaxListed by encoding
  std::vector<std::uint64_t> histogram;    ///< margin_bucket_edges().size() + 1 buckets, tested graphs only
  std::vector<ScanError> errors;

  static constexpr std::size_t kMaxListed = 100;

  bool has_counterexample() const { return !counterexamples.empty(); }
  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

class ConjectureAccumulator {
 public:
  explicit ConjectureAccumulator(double slack = 1e-7);

  /// Records per-graph failures in `errors` rather than throwing.
  void add(const Graph& g);
  void record_error(std::string graph6, std::string message);
  void merge(const ConjectureAccumulator& other);
  ScanResult result() const;

 private:
  ScanResult r_;
};

ScanResult scan_conjecture(std::span<const Graph> graphs, double slack = 1e-7);

/// Exhaustive sweep over connected graphs on n vertices (3 <= n <= 7),
/// split across `threads` workers (0 = hardware concurrency).
ScanResult scan_conjecture_enumerated(int n, double slack = 1e-7, bool dedup = false,
                                      unsigned threads = 0);

/// One graph6 string per line; blank lines and ">>graph6<<" headers are
/// skipped, undecodable lines are recorded as errors.
ScanResult scan_conjecture_graph6(std::istream& in, double slack = 1e-7);

struct Violation {
  std::string graph6;
  std::string check;
  std::string detail;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// Aggregate of every bound, identity and equality check over a stream.
struct SoundnessReport {
  std::uint64_t graphs_checked = 0;
  std::uint64_t checks_run = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> equality_hits;     ///< bound name -> graphs attaining it
  std::vector<std::string> noncomplete_n3_equalities;      ///< graph6, sorted
  std::uint64_t trees_checked = 0;

  bool clean() const { return violations.empty(); }
};

class SoundnessAccumulator {
 public:
  void add(const Graph& g);
  void merge(const SoundnessAccumulator& other);
  SoundnessReport result() const;

 private:
  SoundnessReport r_;
};

SoundnessReport scan_soundness(std::span<const Graph> graphs);

/// Exhaustive labelled sweep over connected graphs on n vertices (2 <= n <= 7).
SoundnessReport scan_soundness_enumerated(int n, bool dedup = false, unsigned threads = 0);

/// `count` connected graphs on n vertices drawn uniformly from edge subsets
/// (rejecting disconnected ones) with a fixed seed.
std::vector<Graph> sample_connected(int n, std::size_t count, std::uint64_t seed);

}  // namespace distlap
