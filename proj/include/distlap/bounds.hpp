#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distlap/bound_id.hpp"
#include "distlap/certification.hpp"
#include "distlap/graph.hpp"
#include "distlap/operators.hpp"
#include "distlap/spectral.hpp"

namespace distlap {

struct Interval {
  double lower = 0;
  double upper = 0;
};

/// Per-vertex Tr(v_i) + sqrt((n-1) sum_k d_{k,i}^2).
Eigen::VectorXd column_distance_terms(const DistanceData& dd);
/// max of column_distance_terms; bounds both radii (L_I1 and Q_I2).
double column_distance_bound(const DistanceData& dd);

/// 2W - n(n-2). Throws NotApplicable for n < 4.
double wiener_bound(const DistanceData& dd);

/// max Tr + sqrt(||D||_F^2 - sum Tr^2 / n). Strict for n >= 3.
double distance_frobenius_bound(const DistanceData& dd, double d_frob);
double distance_frobenius_bound(const DistanceData& dd);

/// Sum of vertex eccentricities p_i, the Perron root of B = L + 1 p^T.
double max_distance_sum_bound(const DistanceData& dd);

/// Half the largest l1 distance between two rows of B.
double row_difference_bound(const DistanceData& dd);

/// 2W/(n-1) + sqrt((n-2)/(n-1) (||L||_F^2 - (2W)^2/(n-1))). Requires n >= 3.
/// The argument-free overload uses the exact integer norm.
double laplacian_frobenius_bound(const DistanceData& dd, double l_frob);
double laplacian_frobenius_bound(const DistanceData& dd);

struct RegularBounds {
  double c1 = 0;  ///< k + sqrt(||D||^2 - k^2), strict
  double c2 = 0;  ///< n k/(n-1) + sqrt((n-2)/(n-1) (||D||^2 - n k^2/(n-1)))
};

/// Throws NotApplicable unless the graph is transmission regular with n >= 2.
RegularBounds transmission_regular_bounds(const DistanceData& dd, double d_frob);
RegularBounds transmission_regular_bounds(const DistanceData& dd);

/// [2 min Tr, 2 max Tr].
Interval transmission_bounds(const DistanceData& dd);

/// Per-vertex Tr + T_i / Tr with T the second distance degree.
Eigen::VectorXd second_degree_ratio_terms(const DistanceData& dd);
Interval second_degree_ratio_bounds(const DistanceData& dd);

/// Per-vertex sqrt(2 T_i + 2 Tr^2), the square root of a row sum of Q^2.
Eigen::VectorXd second_degree_root_terms(const DistanceData& dd);
Interval second_degree_root_bounds(const DistanceData& dd);

/// (x - 1 + sqrt((x - 1)^2 + 8 (x^2 + 2W - (n-1) x))) / 2 at x = min Tr and x = max Tr.
Interval quadratic_row_sum_bounds(const DistanceData& dd);

/// 2W/n + sqrt((n-1)/n (||Q||_F^2 - (2W)^2/n)).
double signless_frobenius_bound(const DistanceData& dd, double q_frob);
double signless_frobenius_bound(const DistanceData& dd);

/// Everything derived from one graph that the bounds and checks consume.
struct GraphAnalysis {
  Graph graph;
  DistanceData distances;
  OperatorBundle operators;
  Spectrum<double> d_spectrum;
  Spectrum<double> l_spectrum;
  Spectrum<double> q_spectrum;

  double l_radius() const { return l_spectrum.largest(); }
  double q_radius() const { return q_spectrum.largest(); }
};

/// Distances, operators and the three spectra. Throws DisconnectedGraph.
GraphAnalysis analyze(const Graph& g);

bool is_applicable(BoundId id, const DistanceData& dd);

struct BoundEntry {
  BoundId id = BoundId::L_I1;
  std::optional<double> value;  ///< empty when not applicable
  bool satisfied = true;
  double gap = 0;  ///< value - rho for upper bounds, rho - value for lower bounds
  std::optional<EqualityDiagnosis> diagnosis;
};

struct BoundReport {
  std::string graph_id;  ///< graph6 encoding
  double l_radius = 0;
  double q_radius = 0;
  std::vector<BoundEntry> entries;  ///< one per BoundId, in enum order

  const BoundEntry& entry(BoundId id) const { return entries.at(static_cast<std::size_t>(id)); }
  bool all_satisfied() const;
};

/// Value of one bound, or empty if not applicable.
std::optional<double> evaluate_bound(BoundId id, const DistanceData& dd);

/// All bounds with satisfaction, gap and equality diagnosis. Diagnoses may
/// throw TheoremViolation.
BoundReport evaluate_bounds(const GraphAnalysis& a);
BoundReport compute_all_bounds(const Graph& g);

}  // namespace distlap
