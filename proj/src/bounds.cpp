#include "distlap/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "distlap/errors.hpp"
#include "distlap/graph6.hpp"

namespace distlap {
namespace {

using Wide = long double;

// Radicands that should be >= 0 analytically; small negatives are rounding.
double guarded_sqrt(Wide radicand, Wide scale, const char* what) {
  if (radicand < 0) {
    if (radicand < Wide(-1e-9) * std::max(Wide(1), std::abs(scale)))
      throw TheoremViolation(std::string("negative radicand in ") + what);
    return 0.0;
  }
  return static_cast<double>(std::sqrt(radicand));
}

void require_order(const DistanceData& dd, Eigen::Index min, const char* what) {
  if (dd.order() < min)
    throw NotApplicable(std::string(what) + " needs at least " + std::to_string(min) + " vertices");
}

Wide squared_distance_norm(const DistanceData& dd) {
  return static_cast<Wide>(squared_frobenius_norm(dd.dist));
}

Wide sum_squared_transmissions(const DistanceData& dd) {
  Wide s = 0;
  for (Eigen::Index i = 0; i < dd.tr.size(); ++i) s += Wide(dd.tr(i)) * Wide(dd.tr(i));
  return s;
}

// ||Tr -/+ D||_F^2: the diagonal and off-diagonal parts do not overlap.
Wide squared_operator_norm(const DistanceData& dd) {
  return sum_squared_transmissions(dd) + squared_distance_norm(dd);
}

double quadratic_root(double x, double two_w, double n) {
  const double b = x - 1.0;
  return (b + std::sqrt(b * b + 8.0 * (x * x + two_w - (n - 1.0) * x))) / 2.0;
}

Interval min_max(const Eigen::VectorXd& v) { return {v.minCoeff(), v.maxCoeff()}; }

}  // namespace

Eigen::VectorXd column_distance_terms(const DistanceData& dd) {
  const double n = static_cast<double>(dd.order());
  const Eigen::VectorXd col_sq = dd.dist.cast<double>().cwiseAbs2().colwise().sum().transpose();
  return dd.tr.cast<double>() + ((n - 1.0) * col_sq).cwiseSqrt();
}

double column_distance_bound(const DistanceData& dd) { return column_distance_terms(dd).maxCoeff(); }

double wiener_bound(const DistanceData& dd) {
  require_order(dd, 4, "the Wiener-index bound");
  const auto n = dd.order();
  return static_cast<double>(2 * dd.wiener - n * (n - 2));
}

double distance_frobenius_bound(const DistanceData& dd, double d_frob) {
  const double n = static_cast<double>(dd.order());
  const Wide radicand = Wide(d_frob) * Wide(d_frob) - sum_squared_transmissions(dd) / n;
  return static_cast<double>(dd.max_transmission()) +
         guarded_sqrt(radicand, Wide(d_frob) * Wide(d_frob), "the distance Frobenius bound");
}

double distance_frobenius_bound(const DistanceData& dd) {
  const Wide n = dd.order();
  const Wide radicand = (n * squared_distance_norm(dd) - sum_squared_transmissions(dd)) / n;
  return static_cast<double>(dd.max_transmission()) +
         guarded_sqrt(radicand, squared_distance_norm(dd), "the distance Frobenius bound");
}

double max_distance_sum_bound(const DistanceData& dd) { return static_cast<double>(dd.p.sum()); }

double row_difference_bound(const DistanceData& dd) {
  require_order(dd, 2, "the row-difference bound");
  const Eigen::Index n = dd.order();
  std::int64_t best = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      std::int64_t s = dd.tr(i) + dd.tr(j) + 2 * dd.dist(i, j);
      for (Eigen::Index k = 0; k < n; ++k)
        if (k != i && k != j) s += std::abs(dd.dist(i, k) - dd.dist(j, k));
      best = std::max(best, s);
    }
  }
  return static_cast<double>(best) / 2.0;
}

double laplacian_frobenius_bound(const DistanceData& dd, double l_frob) {
  require_order(dd, 3, "the Laplacian Frobenius bound");
  const Wide n = dd.order();
  const Wide two_w = 2 * Wide(dd.wiener);
  const Wide l_sq = Wide(l_frob) * Wide(l_frob);
  const Wide radicand = (n - 2) / (n - 1) * (l_sq - two_w * two_w / (n - 1));
  return static_cast<double>(two_w / (n - 1)) +
         guarded_sqrt(radicand, l_sq, "the Laplacian Frobenius bound");
}

double laplacian_frobenius_bound(const DistanceData& dd) {
  require_order(dd, 3, "the Laplacian Frobenius bound");
  const Wide n = dd.order();
  const Wide two_w = 2 * Wide(dd.wiener);
  const Wide l_sq = squared_operator_norm(dd);
  // (n-2)/(n-1)^2 * ((n-1) ||L||^2 - (2W)^2), exact numerator
  const Wide numerator = (n - 1) * l_sq - two_w * two_w;
  const Wide radicand = (n - 2) * numerator / ((n - 1) * (n - 1));
  return static_cast<double>(two_w / (n - 1)) +
         guarded_sqrt(radicand, l_sq, "the Laplacian Frobenius bound");
}

RegularBounds transmission_regular_bounds(const DistanceData& dd, double d_frob) {
  require_order(dd, 2, "the transmission-regular bounds");
  const auto k = transmission_regularity(dd);
  if (!k) throw NotApplicable("graph is not transmission regular");
  const Wide n = dd.order();
  const Wide kk = Wide(*k);
  const Wide d_sq = Wide(d_frob) * Wide(d_frob);
  RegularBounds r;
  r.c1 = static_cast<double>(kk) + guarded_sqrt(d_sq - kk * kk, d_sq, "c1");
  r.c2 = static_cast<double>(n * kk / (n - 1)) +
         guarded_sqrt((n - 2) / (n - 1) * (d_sq - n * kk * kk / (n - 1)), d_sq, "c2");
  if (r.c2 > r.c1 + soundness_slack(r.c1))
    throw TheoremViolation("transmission-regular bounds out of order: c2 > c1");
  return r;
}

RegularBounds transmission_regular_bounds(const DistanceData& dd) {
  return transmission_regular_bounds(dd, static_cast<double>(std::sqrt(squared_distance_norm(dd))));
}

Interval transmission_bounds(const DistanceData& dd) {
  return {2.0 * static_cast<double>(dd.min_transmission()),
          2.0 * static_cast<double>(dd.max_transmission())};
}

Eigen::VectorXd second_degree_ratio_terms(const DistanceData& dd) {
  require_order(dd, 2, "the second-degree ratio bounds");
  const Eigen::VectorXd tr = dd.tr.cast<double>();
  return tr + dd.sdd.cast<double>().cwiseQuotient(tr);
}

Interval second_degree_ratio_bounds(const DistanceData& dd) {
  return min_max(second_degree_ratio_terms(dd));
}

Eigen::VectorXd second_degree_root_terms(const DistanceData& dd) {
  const IntVector row_sums_q2 = 2 * dd.sdd + 2 * dd.tr.cwiseAbs2();
  return row_sums_q2.cast<double>().cwiseSqrt();
}

Interval second_degree_root_bounds(const DistanceData& dd) {
  return min_max(second_degree_root_terms(dd));
}

Interval quadratic_row_sum_bounds(const DistanceData& dd) {
  require_order(dd, 2, "the quadratic row-sum bounds");
  const double n = static_cast<double>(dd.order());
  const double two_w = 2.0 * static_cast<double>(dd.wiener);
  Interval r{quadratic_root(static_cast<double>(dd.min_transmission()), two_w, n),
             quadratic_root(static_cast<double>(dd.max_transmission()), two_w, n)};
  const auto tb = transmission_bounds(dd);
  if (r.lower < tb.lower - soundness_slack(tb.lower) || r.upper > tb.upper + soundness_slack(tb.upper))
    throw TheoremViolation("quadratic row-sum bounds fall outside the transmission bounds");
  return r;
}

double signless_frobenius_bound(const DistanceData& dd, double q_frob) {
  require_order(dd, 2, "the signless Frobenius bound");
  const Wide n = dd.order();
  const Wide two_w = 2 * Wide(dd.wiener);
  const Wide q_sq = Wide(q_frob) * Wide(q_frob);
  return static_cast<double>(two_w / n) +
         guarded_sqrt((n - 1) / n * (q_sq - two_w * two_w / n), q_sq, "the signless Frobenius bound");
}

double signless_frobenius_bound(const DistanceData& dd) {
  require_order(dd, 2, "the signless Frobenius bound");
  const Wide n = dd.order();
  const Wide two_w = 2 * Wide(dd.wiener);
  const Wide q_sq = squared_operator_norm(dd);
  const Wide radicand = (n - 1) * (n * q_sq - two_w * two_w) / (n * n);
  return static_cast<double>(two_w / n) + guarded_sqrt(radicand, q_sq, "the signless Frobenius bound");
}

GraphAnalysis analyze(const Graph& g) {
  GraphAnalysis a{g, compute_distance_data(g), {}, {}, {}, {}};
  a.operators = build_operators(a.distances);
  a.d_spectrum = eig_symmetric(a.operators.d_mat.cast<double>());
  a.l_spectrum = eig_symmetric(a.operators.l_mat.cast<double>());
  a.q_spectrum = eig_symmetric(a.operators.q_mat.cast<double>());
  return a;
}

bool is_applicable(BoundId id, const DistanceData& dd) {
  const auto& meta = info(id);
  if (dd.order() < meta.min_order) return false;
  if (meta.needs_transmission_regular && !transmission_regularity(dd)) return false;
  return true;
}

std::optional<double> evaluate_bound(BoundId id, const DistanceData& dd) {
  if (!is_applicable(id, dd)) return std::nullopt;
  switch (id) {
    case BoundId::L_I1:
    case BoundId::Q_I2: return column_distance_bound(dd);
    case BoundId::L_D1: return wiener_bound(dd);
    case BoundId::L_D2: return distance_frobenius_bound(dd);
    case BoundId::L_N1: return max_distance_sum_bound(dd);
    case BoundId::L_N2: return row_difference_bound(dd);
    case BoundId::L_N3: return laplacian_frobenius_bound(dd);
    case BoundId::L_R1: return transmission_regular_bounds(dd).c1;
    case BoundId::L_R2: return transmission_regular_bounds(dd).c2;
    case BoundId::Q_TB_LO: return transmission_bounds(dd).lower;
    case BoundId::Q_TB_UP: return transmission_bounds(dd).upper;
    case BoundId::Q_I3: return second_degree_ratio_bounds(dd).lower;
    case BoundId::Q_I4: return second_degree_ratio_bounds(dd).upper;
    case BoundId::Q_I5: return second_degree_root_bounds(dd).lower;
    case BoundId::Q_I6: return second_degree_root_bounds(dd).upper;
    case BoundId::Q_CI5: return quadratic_row_sum_bounds(dd).lower;
    case BoundId::Q_CS6: return quadratic_row_sum_bounds(dd).upper;
    case BoundId::Q_CS7: return signless_frobenius_bound(dd);
  }
  return std::nullopt;
}

bool BoundReport::all_satisfied() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.satisfied; });
}

BoundReport evaluate_bounds(const GraphAnalysis& a) {
  const auto& dd = a.distances;
  const int n = a.graph.order();
  BoundReport report;
  report.graph_id = encode_graph6(a.graph);
  report.l_radius = a.l_radius();
  report.q_radius = a.q_radius();

  std::optional<std::array<EqualityDiagnosis, 2>> tb;
  for (const auto& meta : kBoundTable) {
    BoundEntry e;
    e.id = meta.id;
    e.value = evaluate_bound(meta.id, dd);
    if (e.value) {
      const double rho = meta.target == Target::Laplacian ? report.l_radius : report.q_radius;
      const double slack = soundness_slack(rho);
      e.gap = meta.side == Side::Upper ? *e.value - rho : rho - *e.value;
      e.satisfied = e.gap >= -slack;

      switch (meta.id) {
        case BoundId::L_N1:
          e.diagnosis = diagnose_max_distance_sum(a.operators, a.l_spectrum, dd);
          break;
        case BoundId::L_N3:
        case BoundId::L_R2:
          e.diagnosis = diagnose_laplacian_frobenius(a.l_spectrum, dd, meta.id);
          break;
        case BoundId::Q_CS7:
          e.diagnosis = diagnose_signless_frobenius(a.q_spectrum, dd);
          break;
        case BoundId::Q_TB_LO:
        case BoundId::Q_TB_UP:
          if (!tb) tb = diagnose_transmission_bounds(a.q_spectrum, dd);
          e.diagnosis = (*tb)[meta.id == BoundId::Q_TB_LO ? 0 : 1];
          break;
        case BoundId::L_I1:
        case BoundId::Q_I2:
          e.diagnosis = diagnose_uniform_vertex_terms(meta.id, column_distance_terms(dd), *e.value,
                                                      rho, false);
          break;
        case BoundId::Q_I3:
        case BoundId::Q_I4:
          e.diagnosis = diagnose_uniform_vertex_terms(meta.id, second_degree_ratio_terms(dd),
                                                      *e.value, rho, true);
          break;
        case BoundId::Q_I5:
        case BoundId::Q_I6:
          e.diagnosis = diagnose_uniform_vertex_terms(meta.id, second_degree_root_terms(dd),
                                                      *e.value, rho, true);
          break;
        default:
          e.diagnosis = diagnose_attainment(meta.id, *e.value, rho, n);
          break;
      }
    }
    report.entries.push_back(e);
  }
  return report;
}

BoundReport compute_all_bounds(const Graph& g) { return evaluate_bounds(analyze(g)); }

}  // namespace distlap
