#include "distlap/certification.hpp"

#include <cmath>
#include <string>

#include "distlap/bounds.hpp"
#include "distlap/errors.hpp"

namespace distlap {
namespace {

constexpr std::array<std::pair<Certificate, std::string_view>, 7> kCertificateNames{{
    {Certificate::None, "none"},
    {Certificate::CompleteGraph, "complete-graph"},
    {Certificate::ThreeDistinctLaplacianEigenvalues, "three-distinct-L-eigenvalues"},
    {Certificate::BReducibleNecessary, "B-reducible-necessary"},
    {Certificate::TransmissionRegular, "transmission-regular"},
    {Certificate::UniformVertexTerms, "uniform-vertex-terms"},
    {Certificate::Attained, "attained"},
}};

bool all_distances_one(const DistanceData& dd) {
  return dd.order() < 2 || dd.dist.maxCoeff() == 1;
}

[[noreturn]] void violation(BoundId id, const std::string& what) {
  throw TheoremViolation(std::string(to_string(id)) + ": " + what);
}

}  // namespace

std::string_view to_string(Certificate c) {
  for (const auto& [cert, name] : kCertificateNames)
    if (cert == c) return name;
  return "none";
}

std::optional<Certificate> certificate_from_string(std::string_view s) {
  for (const auto& [cert, name] : kCertificateNames)
    if (name == s) return cert;
  return std::nullopt;
}

EqualityDiagnosis diagnose_max_distance_sum(const OperatorBundle& ops,
                                            const Spectrum<double>& l_spectrum,
                                            const DistanceData& dd) {
  const double bound = max_distance_sum_bound(dd);
  const double rho = l_spectrum.largest();
  const bool equal = std::abs(rho - bound) <= equality_tolerance(bound);
  const bool irreducible = is_irreducible(ops.b_mat);
  if (equal && irreducible)
    violation(BoundId::L_N1, "bound attained although B is irreducible");
  if (equal) return {BoundId::L_N1, true, Certificate::BReducibleNecessary};
  return {BoundId::L_N1, false, Certificate::None};
}

EqualityDiagnosis diagnose_laplacian_frobenius(const Spectrum<double>& l_spectrum,
                                               const DistanceData& dd, BoundId id) {
  const auto n = static_cast<std::size_t>(dd.order());
  if (n < 3) throw NotApplicable("Laplacian Frobenius bound needs n >= 3");
  const double bound = laplacian_frobenius_bound(dd);
  const double rho = l_spectrum.largest();
  const double tol = equality_tolerance(bound);
  const bool equal = std::abs(rho - bound) <= tol;

  // equality <=> the n-2 middle eigenvalues coincide
  const double middle = (2.0 * static_cast<double>(dd.wiener) - rho) / static_cast<double>(n - 2);
  bool shape = std::abs(l_spectrum.smallest()) <= tol;
  for (std::size_t i = 1; i + 1 < n; ++i) shape = shape && std::abs(l_spectrum[i] - middle) <= tol;

  if (equal != shape)
    violation(id, equal ? "bound attained but the spectrum is not {rho, m^(n-2), 0}"
                        : "spectrum is {rho, m^(n-2), 0} but the bound is not attained");
  if (!equal) return {id, false, Certificate::None};

  const bool top_is_n_minus_1_fold = multiplicity(l_spectrum, rho, tol) == static_cast<int>(n - 1);
  if (top_is_n_minus_1_fold != all_distances_one(dd))
    violation(id, "multiplicity n-1 of the largest eigenvalue disagrees with completeness");
  return {id, true,
          top_is_n_minus_1_fold ? Certificate::CompleteGraph
                                : Certificate::ThreeDistinctLaplacianEigenvalues};
}

EqualityDiagnosis diagnose_signless_frobenius(const Spectrum<double>& q_spectrum,
                                              const DistanceData& dd) {
  const double bound = signless_frobenius_bound(dd);
  const double rho = q_spectrum.largest();
  const bool equal = std::abs(rho - bound) <= equality_tolerance(bound);
  const bool complete = all_distances_one(dd);
  if (equal != complete)
    violation(BoundId::Q_CS7, equal ? "bound attained by a non-complete graph"
                                    : "complete graph does not attain the bound");
  if (!equal) return {BoundId::Q_CS7, false, Certificate::None};
  return {BoundId::Q_CS7, true, Certificate::CompleteGraph};
}

std::array<EqualityDiagnosis, 2> diagnose_transmission_bounds(const Spectrum<double>& q_spectrum,
                                                              const DistanceData& dd) {
  const auto tb = transmission_bounds(dd);
  const double rho = q_spectrum.largest();
  const bool lower_eq = std::abs(rho - tb.lower) <= equality_tolerance(tb.lower);
  const bool upper_eq = std::abs(rho - tb.upper) <= equality_tolerance(tb.upper);
  const auto k = transmission_regularity(dd);
  if ((lower_eq || upper_eq) != k.has_value())
    violation(lower_eq ? BoundId::Q_TB_LO : BoundId::Q_TB_UP,
              k ? "transmission-regular graph does not attain 2k"
                : "bound attained by a graph that is not transmission regular");
  if (k && std::abs(rho - 2.0 * static_cast<double>(*k)) > equality_tolerance(rho))
    violation(BoundId::Q_TB_UP, "spectral radius differs from 2k");

  auto make = [](BoundId id, bool eq) {
    return EqualityDiagnosis{id, eq, eq ? Certificate::TransmissionRegular : Certificate::None};
  };
  return {make(BoundId::Q_TB_LO, lower_eq), make(BoundId::Q_TB_UP, upper_eq)};
}

EqualityDiagnosis diagnose_uniform_vertex_terms(BoundId id, const Eigen::VectorXd& terms,
                                                double value, double target, bool iff) {
  const double tol = equality_tolerance(value);
  const bool equal = std::abs(value - target) <= tol;
  const bool uniform = terms.maxCoeff() - terms.minCoeff() <= tol;
  if (equal && !uniform) violation(id, "bound attained but the vertex terms are not constant");
  if (iff && uniform && !equal) violation(id, "vertex terms are constant but the bound is not attained");
  return {id, equal, equal ? Certificate::UniformVertexTerms : Certificate::None};
}

EqualityDiagnosis diagnose_attainment(BoundId id, double value, double target, int order) {
  const bool equal = std::abs(value - target) <= equality_tolerance(value);
  if (equal && info(id).strict && order >= 3) violation(id, "strict bound attained");
  return {id, equal, equal ? Certificate::Attained : Certificate::None};
}

bool check_top_multiplicity(const Spectrum<double>& l_spectrum, const Graph& g) {
  const int n = g.order();
  if (n <= 2) throw NotApplicable("multiplicity check needs n > 2");
  const bool full = multiplicity(l_spectrum, l_spectrum.largest()) == n - 1;
  return full == g.is_complete();
}

bool check_tree_determinant(const Graph& g, const DistanceData& dd) {
  const int n = g.order();
  if (n < 2 || !g.is_tree()) throw NotApplicable("determinant formula applies to trees on n >= 2 vertices");
  const double expected = ((n - 1) % 2 == 0 ? 1.0 : -1.0) * (n - 1) * std::ldexp(1.0, n - 2);
  return std::abs(determinant(dd.dist) - expected) <= 1e-6 * std::abs(expected);
}

}  // namespace distlap
