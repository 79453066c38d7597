#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "finsler/linalg.hpp"
#include "oracles/oracles.hpp"

namespace finsler {
namespace {

TEST(Nullspace, MatchesBruteForceOnRandomRankDeficientMatrices) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 3 + trial % 5, cols = 9, rank = 1 + trial % 6;
    Matrix left(rows, rank), right(rank, cols);
    for (Eigen::Index i = 0; i < left.size(); ++i) left.data()[i] = normal(rng);
    for (Eigen::Index i = 0; i < right.size(); ++i) right.data()[i] = normal(rng);
    const Matrix m = left * right;
    const Nullspace ns = nullspace(m, 1e-8);
    EXPECT_EQ(ns.basis.cols(), oracle::brute_force_nullity(m));
    EXPECT_LE((m * ns.basis).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE((ns.basis.transpose() * ns.basis - Matrix::Identity(ns.basis.cols(), ns.basis.cols()))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(Nullspace, SignConvention) {
  Matrix m(1, 3);
  m << 1, 1, 1;
  const Nullspace ns = nullspace(m, 1e-8);
  ASSERT_EQ(ns.basis.cols(), 2);
  for (Eigen::Index j = 0; j < ns.basis.cols(); ++j) {
    Eigen::Index first = 0;
    while (std::abs(ns.basis(first, j)) <= 1e-12) ++first;
    EXPECT_GT(ns.basis(first, j), 0.0);
  }
}

TEST(Nullspace, ZeroMatrixAndFullRank) {
  EXPECT_EQ(nullspace(Matrix::Zero(2, 4), 1e-8).basis.cols(), 4);
  EXPECT_EQ(nullspace(Matrix::Identity(4, 4), 1e-8).basis.cols(), 0);
  EXPECT_EQ(numerical_rank(Matrix::Identity(4, 4), 1e-8), 4);
}

TEST(PrincipalAngle, AgreesWithCosineOracle) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 20; ++t) {
    Matrix a(6, 2), b(6, 2);
    for (Eigen::Index i = 0; i < 12; ++i) {
      a.data()[i] = normal(rng);
      b.data()[i] = normal(rng);
    }
    const Matrix qa = Eigen::HouseholderQR<Matrix>(a).householderQ() * Matrix::Identity(6, 2);
    const Matrix qb = Eigen::HouseholderQR<Matrix>(b).householderQ() * Matrix::Identity(6, 2);
    EXPECT_NEAR(largest_principal_angle(qa, qb), oracle::principal_angle_from_cosines(qa, qb), 1e-10);
  }
}

TEST(PrincipalAngle, SmallAnglesResolved) {
  Matrix a = Matrix::Zero(3, 1), b = Matrix::Zero(3, 1);
  a(0, 0) = 1.0;
  const double theta = 1e-9;
  b(0, 0) = std::cos(theta);
  b(1, 0) = std::sin(theta);
  EXPECT_NEAR(largest_principal_angle(a, b), theta, 1e-15);
  EXPECT_EQ(largest_principal_angle(a, Matrix::Zero(3, 0)), std::numbers::pi / 2);
}

}  // namespace
}  // namespace finsler
