#include <doctest.h>

#include <random>

#include "distlap/enumerate.hpp"
#include "distlap/operators.hpp"
#include "distlap/spectral.hpp"
#include "oracles.hpp"

using namespace distlap;

namespace {

oracle::Mat to_rows(const Eigen::MatrixXd& m) {
  oracle::Mat out(m.rows(), std::vector<double>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-10, 10);
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) m(i, j) = m(j, i) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("symmetric matrix validation") {
  Eigen::MatrixXd a(2, 2);
  a << 1, 2, 3, 4;
  CHECK_THROWS_AS(SymMatrix<double>{a}, std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix<double>(Eigen::MatrixXd(2, 3)), std::invalid_argument);
  a(1, 0) = 2;
  CHECK(SymMatrix<double>{a}.order() == 2);
}

TEST_CASE("Jacobi eigenvalues match the Sturm bisection oracle") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 10;
    const Eigen::MatrixXd m = random_symmetric(rng, n);
    const auto spec = eig_symmetric(SymMatrix<double>(m));
    const auto ref = oracle::sturm_eigenvalues(to_rows(m));
    REQUIRE(spec.size() == ref.size());
    for (int i = 0; i < n; ++i) CHECK(spec[i] == doctest::Approx(ref[i]).epsilon(1e-9).scale(10));
    for (int i = 1; i < n; ++i) CHECK(spec[i - 1] >= spec[i]);
  }
}

TEST_CASE("Jacobi handles diagonal, repeated and single-entry input") {
  Eigen::MatrixXd d = Eigen::Vector3d(1, 3, 2).asDiagonal();
  CHECK(eig_symmetric(SymMatrix<double>(d)).values == std::vector<double>{3, 2, 1});
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(4, 4);
  const auto s = eig_symmetric(SymMatrix<double>(ones));
  CHECK(s.largest() == doctest::Approx(4));
  CHECK(multiplicity(s, 0.0) == 3);
  CHECK(distinct_count(s, 1e-9) == 2);
  CHECK(eig_symmetric(SymMatrix<double>(Eigen::MatrixXd::Constant(1, 1, -2.5))).values ==
        std::vector<double>{-2.5});
  CHECK_THROWS_AS(eig_symmetric(SymMatrix<double>(Eigen::MatrixXd(0, 0))), std::invalid_argument);
}

TEST_CASE("non-convergence is reported") {
  std::mt19937_64 rng(7);
  const Eigen::MatrixXd m = random_symmetric(rng, 8);
  CHECK_THROWS_AS(eig_symmetric(SymMatrix<double>(m), EigenOptions{1e-300, 1}), ConvergenceError);
}

TEST_CASE("Frobenius norms") {
  Eigen::Matrix2d m;
  m << 1, -2, -2, 3;
  CHECK(squared_frobenius_norm(m) == 18);
  CHECK(frobenius_norm(m) == doctest::Approx(std::sqrt(18.0)));
  IntMatrix im(2, 2);
  im << 1, 2, 2, 2;
  CHECK(frobenius_norm(SymMatrix<std::int64_t>(im)) == doctest::Approx(std::sqrt(13.0)));
}

TEST_CASE("power iteration finds the Perron root") {
  Eigen::Matrix2d a;
  a << 2, 1, 1, 2;
  CHECK(spectral_radius_nonneg(a) == doctest::Approx(3).epsilon(1e-12));
  // imprimitive: a bipartite adjacency oscillates without the shift
  Eigen::Matrix2d swap;
  swap << 0, 1, 1, 0;
  CHECK(spectral_radius_nonneg(swap) == doctest::Approx(1).epsilon(1e-12));
  Eigen::Matrix2d neg;
  neg << 1, -1, 0, 1;
  CHECK_THROWS_AS(spectral_radius_nonneg(neg), std::invalid_argument);

  for (int n = 2; n <= 5; ++n)
    enumerate_connected(n, false, [&](const Graph& g) {
      const auto ops = build_operators(compute_distance_data(g));
      const auto spec = eig_symmetric(ops.q_mat.cast<double>());
      REQUIRE(spectral_radius_nonneg(ops.q_mat.dense()) == doctest::Approx(spec.largest()).epsilon(1e-9));
    });
}

TEST_CASE("irreducibility") {
  Eigen::Matrix3d cyc;
  cyc << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  CHECK(is_irreducible(cyc));
  Eigen::Matrix3d tri;
  tri << 1, 1, 1, 0, 1, 1, 0, 0, 1;
  CHECK_FALSE(is_irreducible(tri));
  CHECK(is_irreducible(Eigen::MatrixXd::Zero(1, 1)));
  CHECK_FALSE(is_irreducible(Eigen::MatrixXd::Zero(2, 2)));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    IntMatrix m(n, n);
    oracle::IMat rows(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = m(i, j) = u(rng);
    const double ref = static_cast<double>(oracle::cofactor_det(rows));
    CHECK(determinant(m) == doctest::Approx(ref).epsilon(1e-9).scale(1));
  }
}

TEST_CASE("multiplicity tolerance scales with magnitude") {
  Spectrum<double> s{{1000.0 + 1e-4, 1000.0, 1.0}, 0};
  CHECK(multiplicity(s, 1000.0) == 2);
  CHECK(multiplicity(s, 1000.0, 1e-6) == 1);
  CHECK(multiplicity_tolerance(0) == doctest::Approx(1e-6));
}
