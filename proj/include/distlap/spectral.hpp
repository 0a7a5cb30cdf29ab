#pragma once

// Dense matrix utilities: Frobenius norms, a cyclic Jacobi eigensolver for
// symmetric matrices, Perron root by power iteration, and irreducibility of a
// nonnegative pattern. Everything is templated on the scalar type and works on
// Eigen expressions.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "distlap/errors.hpp"

namespace distlap {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Floating type used for results derived from a scalar (double for integers).
template <typename Scalar>
using RealOf = std::conditional_t<std::is_floating_point_v<Scalar>, Scalar, double>;

/// Square matrix that is exactly symmetric. Construction validates; the
/// stored matrix is never mutated afterwards.
template <typename Scalar>
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(DenseMatrix<Scalar> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("symmetric matrix must be square");
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
      for (Eigen::Index i = 0; i < j; ++i)
        if (m_(i, j) != m_(j, i))
          throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
  }

  Eigen::Index order() const noexcept { return m_.rows(); }
  const DenseMatrix<Scalar>& dense() const noexcept { return m_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  template <typename Target>
  SymMatrix<Target> cast() const {
    return SymMatrix<Target>(m_.template cast<Target>().eval());
  }

 private:
  DenseMatrix<Scalar> m_;
};

/// Eigenvalues in nonincreasing order.
template <typename Scalar>
struct Spectrum {
  std::vector<Scalar> values;
  Scalar tol = Scalar(0);

  std::size_t size() const noexcept { return values.size(); }
  Scalar largest() const { return values.front(); }
  Scalar smallest() const { return values.back(); }
  Scalar operator[](std::size_t i) const { return values[i]; }
};

template <typename Derived>
auto squared_frobenius_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs2().sum();
}

template <typename Derived>
RealOf<typename Derived::Scalar> frobenius_norm(const Eigen::MatrixBase<Derived>& m) {
  using Real = RealOf<typename Derived::Scalar>;
  return std::sqrt(m.template cast<Real>().cwiseAbs2().sum());
}

template <typename Scalar>
RealOf<Scalar> frobenius_norm(const SymMatrix<Scalar>& m) {
  return frobenius_norm(m.dense());
}

struct EigenOptions {
  double tol = 1e-12;   ///< stop when max |off-diagonal| <= tol * ||A||_F
  int max_sweeps = 100;
};

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
/// Throws ConvergenceError if the off-diagonal target is not reached.
template <typename Scalar>
Spectrum<Scalar> eig_symmetric(const SymMatrix<Scalar>& sym, const EigenOptions& opt = {}) {
  static_assert(std::is_floating_point_v<Scalar>, "cast integer matrices before diagonalising");
  const Eigen::Index n = sym.order();
  if (n == 0) throw std::invalid_argument("empty matrix");

  DenseMatrix<Scalar> a = sym.dense();
  const Scalar norm = frobenius_norm(a);
  const Scalar target = static_cast<Scalar>(opt.tol) * norm;

  auto max_off_diagonal = [&] {
    Scalar off = 0;
    for (Eigen::Index j = 1; j < n; ++j)
      for (Eigen::Index i = 0; i < j; ++i) off = std::max(off, std::abs(a(i, j)));
    return off;
  };

  Scalar off = max_off_diagonal();
  int sweep = 0;
  for (; off > target && sweep < opt.max_sweeps; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        Scalar t;
        if (std::abs(theta) > Scalar(1e150)) {
          t = Scalar(1) / (Scalar(2) * theta);
        } else {
          t = Scalar(1) / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
          if (theta < 0) t = -t;
        }
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = Scalar(0);
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
      }
    }
    off = max_off_diagonal();
  }
  if (off > target)
    throw ConvergenceError("Jacobi eigensolver did not converge after " + std::to_string(sweep) +
                               " sweeps",
                           static_cast<double>(off));

  Spectrum<Scalar> spec;
  spec.tol = static_cast<Scalar>(opt.tol);
  spec.values.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) spec.values[i] = a(i, i);
  std::stable_sort(spec.values.begin(), spec.values.end(), std::greater<>());

  Scalar sum = 0;
  for (Scalar v : spec.values) sum += v;
  const Scalar trace_err = std::abs(sum - sym.dense().trace());
  if (trace_err > Scalar(1e-9) * std::max(norm, Scalar(1)))
    throw ConvergenceError("eigenvalue sum drifted from the trace", static_cast<double>(trace_err));
  return spec;
}

template <typename Derived>
void require_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() > 0 && m.minCoeff() < 0)
    throw std::invalid_argument("matrix has a negative entry");
}

struct PowerOptions {
  double tol = 1e-12;
  int max_iterations = 200000;
};

/// Spectral radius of a square nonnegative matrix. Iterates on m + I so that
/// period-two oscillation of imprimitive matrices cannot stall convergence.
template <typename Derived>
RealOf<typename Derived::Scalar> spectral_radius_nonneg(const Eigen::MatrixBase<Derived>& m,
                                                        const PowerOptions& opt = {}) {
  using Real = RealOf<typename Derived::Scalar>;
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  require_nonnegative(m);
  const Eigen::Index n = m.rows();
  const DenseMatrix<Real> a = m.template cast<Real>();

  DenseVector<Real> x = DenseVector<Real>::Constant(n, Real(1) / std::sqrt(Real(n)));
  Real previous = std::numeric_limits<Real>::infinity();
  for (int it = 0; it < opt.max_iterations; ++it) {
    DenseVector<Real> y = a * x + x;
    const Real rayleigh = x.dot(y);
    const Real rho = rayleigh - Real(1);
    if (std::abs(rayleigh - previous) < Real(opt.tol) * (Real(1) + std::abs(rho))) return rho;
    previous = rayleigh;
    x = y / y.norm();
  }
  throw ConvergenceError("power iteration did not converge",
                         static_cast<double>((a * x - (x.dot(a * x)) * x).norm()));
}

/// True iff the digraph with an arc i -> j for every m(i, j) > 0 is strongly
/// connected. A 1x1 matrix counts as irreducible.
template <typename Derived>
bool is_irreducible(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  require_nonnegative(m);
  const Eigen::Index n = m.rows();
  if (n <= 1) return true;

  auto reaches_all = [&](bool transpose) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Eigen::Index> stack{0};
    seen[0] = 1;
    Eigen::Index count = 1;
    while (!stack.empty()) {
      const Eigen::Index u = stack.back();
      stack.pop_back();
      for (Eigen::Index v = 0; v < n; ++v) {
        const Scalar w = transpose ? m(v, u) : m(u, v);
        if (w > Scalar(0) && !seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return reaches_all(false) && reaches_all(true);
}

/// Default grouping tolerance for multiplicity counts.
inline double multiplicity_tolerance(double lambda) { return 1e-6 * (1.0 + std::abs(lambda)); }

template <typename Scalar>
int multiplicity(const Spectrum<Scalar>& s, Scalar lambda, Scalar tol) {
  return static_cast<int>(std::count_if(s.values.begin(), s.values.end(),
                                        [&](Scalar v) { return std::abs(v - lambda) <= tol; }));
}

template <typename Scalar>
int multiplicity(const Spectrum<Scalar>& s, Scalar lambda) {
  return multiplicity(s, lambda, static_cast<Scalar>(multiplicity_tolerance(lambda)));
}

/// Number of clusters when eigenvalues closer than `tol` are merged.
template <typename Scalar>
int distinct_count(const Spectrum<Scalar>& s, Scalar tol) {
  if (s.values.empty()) return 0;
  int groups = 1;
  for (std::size_t i = 1; i < s.values.size(); ++i)
    if (s.values[i - 1] - s.values[i] > tol) ++groups;
  return groups;
}

/// Determinant by LU with partial pivoting.
template <typename Derived>
RealOf<typename Derived::Scalar> determinant(const Eigen::MatrixBase<Derived>& m) {
  using Real = RealOf<typename Derived::Scalar>;
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  return Eigen::PartialPivLU<DenseMatrix<Real>>(m.template cast<Real>()).determinant();
}

}  // namespace distlap
