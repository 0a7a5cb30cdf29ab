#pragma once

// Equality-case diagnostics. Each check compares a bound against the computed
// spectral radius at `equality_tolerance` and cross-examines the structural
// condition that the corresponding theorem attaches to equality. A
// contradiction throws TheoremViolation: on correct input it means a bug.

#include <array>
#include <string_view>

#include "distlap/bound_id.hpp"
#include "distlap/graph.hpp"
#include "distlap/operators.hpp"
#include "distlap/spectral.hpp"

namespace distlap {

enum class Certificate {
  None,
  CompleteGraph,
  ThreeDistinctLaplacianEigenvalues,
  BReducibleNecessary,
  TransmissionRegular,
  UniformVertexTerms,
  Attained,  ///< bound met, no structural characterisation available
};

std::string_view to_string(Certificate c);
std::optional<Certificate> certificate_from_string(std::string_view s);

/// `certificate == Certificate::None` iff `!equality_within_tol`.
struct EqualityDiagnosis {
  BoundId bound = BoundId::L_I1;
  bool equality_within_tol = false;
  Certificate certificate = Certificate::None;

  friend bool operator==(const EqualityDiagnosis&, const EqualityDiagnosis&) = default;
};

/// Sum-of-eccentricities bound (L_N1). Equality forces B = L + 1p^T to be
/// reducible; reducibility alone does not force equality.
EqualityDiagnosis diagnose_max_distance_sum(const OperatorBundle& ops,
                                            const Spectrum<double>& l_spectrum,
                                            const DistanceData& dd);

/// Trace/Frobenius bound on the Laplacian side (L_N3, and L_R2 which
/// coincides with it on transmission-regular graphs). Equality holds iff the
/// spectrum is {rho, ((2W - rho)/(n - 2))^(n-2), 0}; the complete graph is the
/// case where the middle value equals rho. Requires n >= 3.
EqualityDiagnosis diagnose_laplacian_frobenius(const Spectrum<double>& l_spectrum,
                                               const DistanceData& dd,
                                               BoundId id = BoundId::L_N3);

/// Trace/Frobenius bound on the signless side (Q_CS7): equality iff complete.
EqualityDiagnosis diagnose_signless_frobenius(const Spectrum<double>& q_spectrum,
                                              const DistanceData& dd);

/// Twice min/max transmission (Q_TB_LO, Q_TB_UP): equality on either side iff
/// transmission regular, in which case rho(Q) = 2k.
std::array<EqualityDiagnosis, 2> diagnose_transmission_bounds(const Spectrum<double>& q_spectrum,
                                                              const DistanceData& dd);

/// Bounds of the form max_i / min_i of a per-vertex quantity. Equality
/// requires the quantity to be constant; with `iff` a constant quantity must
/// also give equality.
EqualityDiagnosis diagnose_uniform_vertex_terms(BoundId id, const Eigen::VectorXd& terms,
                                                double value, double target, bool iff);

/// Any other bound. A strict bound met within tolerance on n >= 3 vertices is
/// a violation.
EqualityDiagnosis diagnose_attainment(BoundId id, double value, double target, int order);

/// Largest distance Laplacian eigenvalue has multiplicity n - 1 iff the graph
/// is complete. Requires n > 2.
bool check_top_multiplicity(const Spectrum<double>& l_spectrum, const Graph& g);

/// det D(T) = (-1)^(n-1) (n-1) 2^(n-2) for trees on n >= 2 vertices, checked
/// to 1e-6 relative. Throws NotApplicable for non-trees.
bool check_tree_determinant(const Graph& g, const DistanceData& dd);

}  // namespace distlap
