#pragma once

#include <span>

#include "distlap/graph.hpp"
#include "distlap/spectral.hpp"

namespace distlap {

/// Distance-based operators of a connected graph, kept in exact integers.
struct OperatorBundle {
  SymMatrix<std::int64_t> d_mat;  ///< distance matrix D
  SymMatrix<std::int64_t> l_mat;  ///< distance Laplacian Tr - D
  SymMatrix<std::int64_t> q_mat;  ///< distance signless Laplacian Tr + D
  IntMatrix b_mat;                ///< L + 1 p^T; nonnegative, not symmetric
};

OperatorBundle build_operators(const DistanceData& dd);

/// Row sums of c0 I + c1 Q + c2 Q^2, evaluated as matrix-vector products
/// against the all-ones vector. Throws std::invalid_argument for degree > 2.
template <typename Scalar>
Eigen::VectorXd polynomial_row_sums(const SymMatrix<Scalar>& q, std::span<const double> coeffs) {
  if (coeffs.size() > 3) throw std::invalid_argument("polynomial degree must be at most 2");
  const Eigen::Index n = q.order();
  const Eigen::MatrixXd m = q.dense().template cast<double>();
  Eigen::VectorXd power = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) power = m * power;
    sums += coeffs[k] * power;
  }
  return sums;
}

}  // namespace distlap
