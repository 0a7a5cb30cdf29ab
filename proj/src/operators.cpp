#include "distlap/operators.hpp"

namespace distlap {

OperatorBundle build_operators(const DistanceData& dd) {
  const Eigen::Index n = dd.order();
  const IntMatrix transmissions = dd.tr.asDiagonal();
  OperatorBundle ops{
      SymMatrix<std::int64_t>(dd.dist),
      SymMatrix<std::int64_t>(transmissions - dd.dist),
      SymMatrix<std::int64_t>(transmissions + dd.dist),
      IntMatrix(n, n),
  };
  ops.b_mat = ops.l_mat.dense() + IntVector::Ones(n) * dd.p.transpose();
  return ops;
}

}  // namespace distlap
