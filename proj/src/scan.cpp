#include "distlap/scan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "distlap/bounds.hpp"
#include "distlap/certification.hpp"
#include "distlap/enumerate.hpp"
#include "distlap/errors.hpp"
#include "distlap/graph6.hpp"

namespace distlap {
namespace {

auto by_graph6 = [](const auto& a, const auto& b) { return a.graph6 < b.graph6; };

template <typename T, typename Less>
void merge_sorted(std::vector<T>& into, const std::vector<T>& from, Less less,
                  std::size_t cap = std::numeric_limits<std::size_t>::max()) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end(), less);
  if (into.size() > cap) into.resize(cap);
}

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits the edge-subset range of order n over workers; each worker fills its
// own accumulator and the results are merged in worker order.
template <typename Accumulator>
Accumulator sweep_enumerated(int n, bool dedup, unsigned threads, const Accumulator& prototype) {
  const std::uint64_t total = edge_subset_count(n);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(threads), total));
  std::vector<Accumulator> parts(workers, prototype);
  auto run = [&](unsigned w) {
    const std::uint64_t first = total * w / workers;
    const std::uint64_t last = total * (w + 1) / workers;
    enumerate_connected(n, first, last, dedup, [&](const Graph& g) { parts[w].add(g); });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Accumulator out = prototype;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- conjecture

ConjectureAccumulator::ConjectureAccumulator(double slack) {
  r_.slack = slack;
  r_.histogram.assign(margin_bucket_edges().size() + 1, 0);
}

void ConjectureAccumulator::add(const Graph& g) {
  ++r_.graphs_seen;
  if (g.order() < 3) {
    ++r_.skipped_small;
    return;
  }
  std::string code = encode_graph6(g);
  try {
    const auto dd = compute_distance_data(g);
    if (transmission_regularity(dd)) {
      ++r_.skipped_regular;
      return;
    }
    MarginCase c{code, laplacian_frobenius_bound(dd), distance_frobenius_bound(dd)};
    const double margin = c.margin();
    ++r_.graphs_tested;

    if (margin < r_.min_margin || (margin == r_.min_margin && code < r_.min_margin_graph)) {
      r_.min_margin = margin;
      r_.min_margin_graph = code;
    }
    if (margin < -r_.slack) {
      r_.counterexamples.push_back(std::move(c));
    } else if (margin <= 0) {
      ++r_.equality_count;
      if (r_.equality_cases.size() < ScanResult::kMaxListed) r_.equality_cases.push_back(std::move(c));
    }
    const auto& edges = margin_bucket_edges();
    auto bucket = static_cast<std::size_t>(
        std::lower_bound(edges.begin(), edges.end(), margin) - edges.begin());
    ++r_.histogram[bucket];
  } catch (const std::exception& e) {
    r_.errors.push_back({std::move(code), e.what()});
  }
}

void ConjectureAccumulator::record_error(std::string graph6, std::string message) {
  r_.errors.push_back({std::move(graph6), std::move(message)});
}

void ConjectureAccumulator::merge(const ConjectureAccumulator& other) {
  const auto& o = other.r_;
  r_.graphs_seen += o.graphs_seen;
  r_.graphs_tested += o.graphs_tested;
  r_.skipped_regular += o.skipped_regular;
  r_.skipped_small += o.skipped_small;
  r_.equality_count += o.equality_count;
  if (o.min_margin < r_.min_margin ||
      (o.min_margin == r_.min_margin && o.min_margin_graph < r_.min_margin_graph)) {
    r_.min_margin = o.min_margin;
    r_.min_margin_graph = o.min_margin_graph;
  }
  merge_sorted(r_.counterexamples, o.counterexamples, by_graph6);
  merge_sorted(r_.equality_cases, o.equality_cases, by_graph6, ScanResult::kMaxListed);
  merge_sorted(r_.errors, o.errors, by_graph6);
  for (std::size_t i = 0; i < r_.histogram.size(); ++i) r_.histogram[i] += o.histogram[i];
}

ScanResult ConjectureAccumulator::result() const {
  ScanResult out = r_;
  std::sort(out.counterexamples.begin(), out.counterexamples.end(), by_graph6);
  std::sort(out.equality_cases.begin(), out.equality_cases.end(), by_graph6);
  std::sort(out.errors.begin(), out.errors.end(), by_graph6);
  return out;
}

ScanResult scan_conjecture(std::span<const Graph> graphs, double slack) {
  ConjectureAccumulator acc(slack);
  for (const auto& g : graphs) acc.add(g);
  return acc.result();
}

ScanResult scan_conjecture_enumerated(int n, double slack, bool dedup, unsigned threads) {
  if (n < 3) throw NotApplicable("the conjecture scan needs n >= 3");
  return sweep_enumerated(n, dedup, threads, ConjectureAccumulator(slack)).result();
}

ScanResult scan_conjecture_graph6(std::istream& in, double slack) {
  ConjectureAccumulator acc(slack);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with(">>graph6<<")) line.erase(0, 10);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      acc.add(parse_graph6(line));
    } catch (const ParseError& e) {
      acc.record_error(line, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return acc.result();
}

// ---------------------------------------------------------------- soundness

void SoundnessAccumulator::add(const Graph& g) {
  if (g.order() < 2) return;
  ++r_.graphs_checked;
  const std::string code = encode_graph6(g);
  auto check = [&](bool ok, std::string name, std::string detail = {}) {
    ++r_.checks_run;
    if (!ok) r_.violations.push_back({code, std::move(name), std::move(detail)});
  };

  std::optional<GraphAnalysis> analysis;
  try {
    analysis = analyze(g);
  } catch (const std::exception& e) {
    check(false, "analysis", e.what());
    return;
  }
  const GraphAnalysis& a = *analysis;
  const auto& dd = a.distances;
  const auto& ops = a.operators;
  const int n = g.order();
  const double rho_l = a.l_radius();
  const double rho_q = a.q_radius();

  // distance matrix and operator invariants, exact
  bool metric = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      metric = metric && dd.dist(i, j) == dd.dist(j, i) && (i == j) == (dd.dist(i, j) == 0);
      for (int k = 0; k < n; ++k) metric = metric && dd.dist(i, k) <= dd.dist(i, j) + dd.dist(j, k);
    }
  check(metric, "distance-metric");
  check(2 * dd.wiener == dd.tr.sum(), "wiener-transmission-sum");
  check(ops.l_mat.dense().trace() == 2 * dd.wiener && ops.q_mat.dense().trace() == 2 * dd.wiener,
        "operator-trace");
  check((ops.l_mat.dense() + ops.q_mat.dense() == IntMatrix(2 * dd.tr.asDiagonal())), "operator-sum");
  check(ops.l_mat.dense().rowwise().sum().isZero(), "laplacian-row-sums");
  check(ops.b_mat.minCoeff() >= 0, "brauer-matrix-nonnegative");
  check((ops.b_mat * IntVector::Ones(n)).cwiseEqual(dd.p.sum()).all(), "brauer-matrix-row-sums");
  {
    const IntVector q1 = ops.q_mat.dense() * IntVector::Ones(n);
    const IntVector q2 = ops.q_mat.dense() * q1;
    check(q2 == IntVector(2 * dd.tr.cwiseAbs2() + 2 * dd.sdd), "q-squared-row-sums");
  }

  // spectral identities
  auto rel_close = [](double x, double y, double rel) { return std::abs(x - y) <= rel * std::max(1.0, std::abs(y)); };
  auto sum = [](const Spectrum<double>& s) { double t = 0; for (double v : s.values) t += v; return t; };
  auto sum_sq = [](const Spectrum<double>& s) { double t = 0; for (double v : s.values) t += v * v; return t; };
  const double l_norm = frobenius_norm(ops.l_mat);
  const double q_norm = frobenius_norm(ops.q_mat);
  check(rel_close(sum(a.l_spectrum), 2.0 * dd.wiener, 1e-8), "laplacian-trace-identity");
  check(rel_close(sum_sq(a.l_spectrum), l_norm * l_norm, 1e-8), "laplacian-frobenius-identity");
  check(rel_close(sum(a.q_spectrum), 2.0 * dd.wiener, 1e-8), "signless-trace-identity");
  check(rel_close(sum_sq(a.q_spectrum), q_norm * q_norm, 1e-8), "signless-frobenius-identity");
  check(a.l_spectrum.smallest() >= -1e-9 * l_norm && a.q_spectrum.smallest() >= -1e-9 * q_norm,
        "operator-spectra-nonnegative");
  check(std::abs(a.l_spectrum.smallest()) <= 1e-9 * l_norm &&
            a.l_spectrum[static_cast<std::size_t>(n) - 2] > equality_tolerance(rho_l),
        "laplacian-simple-zero");
  try {
    check(rel_close(spectral_radius_nonneg(ops.q_mat.dense()), rho_q, 1e-8), "perron-root-agreement");
    check(rel_close(spectral_radius_nonneg(ops.b_mat), static_cast<double>(dd.p.sum()), 1e-8),
          "brauer-perron-root");
  } catch (const std::exception& e) {
    check(false, "power-iteration", e.what());
  }
  if (auto k = transmission_regularity(dd)) {
    bool ok = true;
    const double kk = static_cast<double>(*k);
    for (int i = 0; i < n; ++i) {
      ok = ok && std::abs(a.l_spectrum[i] - (kk - a.d_spectrum[n - 1 - i])) <= 1e-8 * std::max(1.0, kk);
      ok = ok && std::abs(a.q_spectrum[i] - (kk + a.d_spectrum[i])) <= 1e-8 * std::max(1.0, kk);
    }
    check(ok, "transmission-regular-spectra");
  }

  // bounds, with diagnoses
  try {
    const auto report = evaluate_bounds(a);
    for (const auto& e : report.entries) {
      if (!e.value) continue;
      std::ostringstream detail;
      detail.precision(17);
      detail << "value " << *e.value << ", gap " << e.gap;
      check(e.satisfied, "bound:" + std::string(to_string(e.id)), detail.str());
      if (e.diagnosis && e.diagnosis->equality_within_tol) ++r_.equality_hits[std::string(to_string(e.id))];
    }
    const auto& n2 = report.entry(BoundId::L_N2);
    const auto& n1 = report.entry(BoundId::L_N1);
    check(*n2.value <= *n1.value + soundness_slack(*n1.value), "row-difference-dominance");
    const auto& n3 = report.entry(BoundId::L_N3);
    if (n3.diagnosis && n3.diagnosis->certificate == Certificate::ThreeDistinctLaplacianEigenvalues)
      r_.noncomplete_n3_equalities.push_back(code);
  } catch (const std::exception& e) {
    check(false, "diagnosis", e.what());
  }

  // every L eigenvalue but the zero one is at least n
  if (n >= 3) {
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i) ok = ok && a.l_spectrum[i] >= n - soundness_slack(rho_l);
    check(ok, "laplacian-eigenvalues-at-least-n");
    check(check_top_multiplicity(a.l_spectrum, g), "top-multiplicity");
  }

  // transmission-weighted distance sums, exact
  {
    const std::int64_t t = dd.min_transmission(), T = dd.max_transmission();
    const std::int64_t nn = n;
    bool ok = true;
    for (int u = 0; u < n; ++u) {
      const std::int64_t lo = 2 * dd.wiener + (t - 1) * dd.tr(u) - (nn - 1) * t;
      const std::int64_t hi = 2 * dd.wiener + (T - 1) * dd.tr(u) - (nn - 1) * T;
      ok = ok && lo <= dd.sdd(u) && dd.sdd(u) <= hi;
    }
    check(ok, "weighted-distance-sum-interval");

    for (const std::int64_t x : {t, T}) {
      const double c1 = -static_cast<double>(x - 1);
      const std::array<double, 3> coeffs{0.0, c1, 1.0};
      const Eigen::VectorXd rows = polynomial_row_sums(ops.q_mat, coeffs);
      const double p_rho = rho_q * rho_q + c1 * rho_q;
      const double slack = 1e-7 + 1e-9 * std::abs(p_rho) + 1e-12 * rho_q * rho_q;
      check(rows.minCoeff() <= p_rho + slack && p_rho <= rows.maxCoeff() + slack,
            "polynomial-row-sum-interval");
    }
  }

  if (g.is_tree()) {
    ++r_.trees_checked;
    check(check_tree_determinant(g, dd), "tree-determinant");
  }
}

void SoundnessAccumulator::merge(const SoundnessAccumulator& other) {
  const auto& o = other.r_;
  r_.graphs_checked += o.graphs_checked;
  r_.checks_run += o.checks_run;
  r_.trees_checked += o.trees_checked;
  merge_sorted(r_.violations, o.violations, std::less<>());
  for (const auto& [k, v] : o.equality_hits) r_.equality_hits[k] += v;
  merge_sorted(r_.noncomplete_n3_equalities, o.noncomplete_n3_equalities, std::less<>());
}

SoundnessReport SoundnessAccumulator::result() const {
  SoundnessReport out = r_;
  std::sort(out.violations.begin(), out.violations.end());
  std::sort(out.noncomplete_n3_equalities.begin(), out.noncomplete_n3_equalities.end());
  return out;
}

SoundnessReport scan_soundness(std::span<const Graph> graphs) {
  SoundnessAccumulator acc;
  for (const auto& g : graphs) acc.add(g);
  return acc.result();
}

SoundnessReport scan_soundness_enumerated(int n, bool dedup, unsigned threads) {
  return sweep_enumerated(n, dedup, threads, SoundnessAccumulator{}).result();
}

std::vector<Graph> sample_connected(int n, std::size_t count, std::uint64_t seed) {
  const std::uint64_t total = edge_subset_count(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  std::vector<Graph> out;
  out.reserve(count);
  while (out.size() < count) {
    Graph g = graph_from_mask(n, pick(rng));
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace distlap
