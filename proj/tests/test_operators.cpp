#include <doctest.h>

#include <array>

#include "distlap/enumerate.hpp"
#include "distlap/operators.hpp"
#include "oracles.hpp"

using namespace distlap;

TEST_CASE("P3 operators by hand") {
  const auto ops = build_operators(compute_distance_data(Graph::path(3)));
  IntMatrix q(3, 3), l(3, 3), b(3, 3);
  q << 3, 1, 2, 1, 2, 1, 2, 1, 3;
  l << 3, -1, -2, -1, 2, -1, -2, -1, 3;
  b << 5, 0, 0, 1, 3, 1, 0, 0, 5;
  CHECK(ops.q_mat.dense() == q);
  CHECK(ops.l_mat.dense() == l);
  CHECK(ops.b_mat == b);
  CHECK(ops.d_mat.dense().diagonal().isZero());

  const auto ls = eig_symmetric(ops.l_mat.cast<double>());
  CHECK(ls[0] == doctest::Approx(5));
  CHECK(ls[1] == doctest::Approx(3));
  CHECK(ls[2] == doctest::Approx(0).epsilon(1e-12));
  CHECK(squared_frobenius_norm(ops.l_mat.dense()) == 34);
  CHECK(eig_symmetric(ops.q_mat.cast<double>()).largest() == doctest::Approx((7 + std::sqrt(17.0)) / 2));
  CHECK(determinant(ops.d_mat.dense()) == doctest::Approx(4));
  CHECK_FALSE(is_irreducible(ops.b_mat));
}

TEST_CASE("polynomial row sums") {
  const auto ops = build_operators(compute_distance_data(Graph::path(3)));
  const std::array<double, 2> linear{0, 1};
  CHECK(polynomial_row_sums(ops.q_mat, linear) == Eigen::Vector3d(6, 4, 6));
  const std::array<double, 3> square{0, 0, 1};
  const Eigen::VectorXd sq = polynomial_row_sums(ops.q_mat, square);
  CHECK(sq == Eigen::Vector3d(34, 20, 34));
  const std::array<double, 3> mixed{2, -1, 0.5};
  CHECK(polynomial_row_sums(ops.q_mat, mixed) == Eigen::Vector3d(2 - 6 + 17, 2 - 4 + 10, 2 - 6 + 17));
  const std::array<double, 4> cubic{0, 0, 0, 1};
  CHECK_THROWS_AS(polynomial_row_sums(ops.q_mat, cubic), std::invalid_argument);
}

TEST_CASE("Brauer shift replaces the zero eigenvalue by the eccentricity sum") {
  for (int n = 2; n <= 5; ++n)
    enumerate_connected(n, false, [&](const Graph& g) {
      const auto dd = compute_distance_data(g);
      const auto ops = build_operators(dd);
      auto expected = eig_symmetric(ops.l_mat.cast<double>()).values;
      expected.back() = static_cast<double>(dd.p.sum());
      std::sort(expected.begin(), expected.end(), std::greater<>());
      double imag = 0;
      const auto got = oracle::general_eigenvalues_real(ops.b_mat.cast<double>(), &imag);
      REQUIRE(imag < 1e-6);
      for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i] == doctest::Approx(expected[i]).epsilon(1e-8));
    });
}

TEST_CASE("operators agree with the Floyd-Warshall oracle") {
  enumerate_connected(5, false, [&](const Graph& g) {
    const auto fw = oracle::floyd_warshall(g);
    const auto ops = build_operators(compute_distance_data(g));
    const auto l = oracle::laplacian(fw, -1), q = oracle::laplacian(fw, 1);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        REQUIRE(ops.l_mat(i, j) == l[i][j]);
        REQUIRE(ops.q_mat(i, j) == q[i][j]);
      }
  });
}
