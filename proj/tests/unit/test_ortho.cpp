#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "finsler/error.hpp"
#include "finsler/ortho.hpp"
#include "finsler/sampling.hpp"
#include "oracles/oracles.hpp"
#include "support/models.hpp"

namespace finsler {
namespace {

using namespace finsler::testing;

Basis rows(std::initializer_list<std::initializer_list<double>> r) {
  std::vector<Vector> v;
  for (auto row : r) v.push_back(vec(row));
  return Basis(std::move(v));
}

TEST(Basis, RejectsDegenerateInput) {
  EXPECT_THROW(rows({{1, 2}, {2, 4}}), SingularInput);
  EXPECT_THROW(Basis({vec({1, 0}), vec({0, 1, 0})}), DimensionMismatch);
  EXPECT_NO_THROW(rows({{1, 2}, {2, 4.1}}));
}

TEST(IsOrthogonal, Euclidean) {
  const NormModel m = NormModel::euclidean(2);
  EXPECT_TRUE(is_orthogonal(m, vec({1, 0}), vec({0, 1})));
  EXPECT_FALSE(is_orthogonal(m, vec({1, 0}), vec({1, 1})));
}

TEST(IsOrthogonal, RandersAsymmetricWitness) {
  const NormModel m = randers_example();
  const Vector v1 = vec({1, 0}), v2 = vec({0, 1});
  // Oracle: g(x)(x, y) with the plain-difference metric.
  const oracle::Field f = [&m](const oracle::Vec& x) { return m.f2(x); };
  const double forward = v1.dot(oracle::plain_central_metric(f, v1, 1e-4) * v2);
  const double backward = v2.dot(oracle::plain_central_metric(f, v2, 1e-4) * v1);
  ASSERT_NEAR(forward, 0.0, 1e-6);
  ASSERT_NEAR(backward, 0.5, 1e-6);

  EXPECT_TRUE(is_orthogonal(m, v1, v2));
  EXPECT_FALSE(is_orthogonal(m, v2, v1));
}

TEST(IsOrthogonal, RejectsZeroPivotDirection) {
  EXPECT_THROW(is_orthogonal(randers_example(), Vector::Zero(2), vec({1, 0})), NonAdmissibleDirection);
}

TEST(Orthogonalize, EuclideanMatchesHandGramSchmidt) {
  const Orthogonalization o = orthogonalize_detailed(NormModel::euclidean(2), rows({{1, 1}, {0, 1}}));
  EXPECT_EQ(o.basis[0], vec({1, 1}));
  EXPECT_NEAR(o.basis[1][0], -0.5, 1e-15);
  EXPECT_NEAR(o.basis[1][1], 0.5, 1e-15);
  EXPECT_NEAR(o.coefficients(1, 0), -0.5, 1e-15);
}

TEST(Orthogonalize, PseudoEuclideanTimelikePivot) {
  const Orthogonalization o =
      orthogonalize_detailed(NormModel::pseudo_euclidean({-1, 1}), rows({{1, 0}, {1, 1}}));
  EXPECT_EQ(o.coefficients(1, 0), -1.0);
  EXPECT_EQ(o.basis[1], vec({0, 1}));
}

TEST(Orthogonalize, AlreadyOrthogonalInputIsFixed) {
  const Basis standard = Basis::standard(3);
  const Orthogonalization o = orthogonalize_detailed(NormModel::euclidean(3), standard);
  EXPECT_EQ(o.coefficients, Matrix::Zero(3, 3));
  for (int k = 0; k < 3; ++k) EXPECT_EQ(o.basis[k], standard[k]);

  const NormModel r = randers3();
  std::mt19937_64 rng(4);
  const Basis once = orthogonalize(r, Basis(random_basis(3, rng)));
  const Orthogonalization twice = orthogonalize_detailed(r, once);
  EXPECT_LE(twice.coefficients.cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Orthogonalize, IsotropicPivot) {
  const NormModel m = NormModel::pseudo_euclidean({-1, 1});
  const Basis input = rows({{1, 1}, {1, 0}});
  EXPECT_THROW(orthogonalize(m, input), IsotropicPivot);

  OrthogonalizeOptions reorder;
  reorder.reorder_pivots = true;
  const Orthogonalization o = orthogonalize_detailed(m, input, reorder);
  EXPECT_EQ(o.input_order, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(o.basis[0], vec({1, 0}));
  EXPECT_EQ(o.basis[1], vec({0, 1}));
}

TEST(Orthogonalize, IsotropicLaterPivot) {
  // (1,1,0) is already orthogonal to (0,0,1) and null under diag(1,-1,1).
  const NormModel m = NormModel::pseudo_euclidean({1, -1, 1});
  EXPECT_THROW(orthogonalize(m, rows({{0, 0, 1}, {1, 1, 0}, {1, 0, 0}})), IsotropicPivot);
}

TEST(Orthogonalize, SpanPreservationAndDeterminismProperty) {
  std::mt19937_64 rng(99);
  for (const NormModel& m : {randers3(), quartic(3), NormModel::euclidean(3)}) {
    for (int t = 0; t < 20; ++t) {
      const Basis input(random_basis(3, rng));
      const Basis a = orthogonalize(m, input);
      const Basis b = orthogonalize(m, input);
      const Matrix in = input.columns(), out = a.columns();
      EXPECT_EQ(out, b.columns());
      for (int k = 1; k <= 3; ++k) {
        EXPECT_LE(oracle::span_residual(in.leftCols(k), out.leftCols(k)), 1e-8);
        EXPECT_LE(oracle::span_residual(out.leftCols(k), in.leftCols(k)), 1e-8);
      }
    }
  }
}

TEST(Normalize, Examples) {
  const NormalizedBasis e = normalize(NormModel::euclidean(2), rows({{3, 0}, {0, 4}}));
  EXPECT_EQ(e.basis[0], vec({1, 0}));
  EXPECT_EQ(e.basis[1], vec({0, 1}));

  const NormalizedBasis p = normalize(NormModel::pseudo_euclidean({-1, 1}), rows({{2, 0}, {0, 5}}));
  EXPECT_EQ(p.basis[0], vec({1, 0}));
  EXPECT_EQ(p.basis[1], vec({0, 1}));
  EXPECT_EQ(p.signature, (std::vector<int>{-1, 1}));

  const NormModel r = randers_example();
  const NormalizedBasis rb = normalize(r, rows({{1, 0}, {0, 1}}));
  EXPECT_NEAR(rb.basis[0][0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.f2(rb.basis[0]), 1.0, 1e-12);
  EXPECT_NEAR(r.f2(rb.basis[1]), 1.0, 1e-12);
}

TEST(Normalize, RejectsNullVectors) {
  EXPECT_THROW(normalize(NormModel::pseudo_euclidean({-1, 1}), rows({{1, 1}, {0, 1}})), IsotropicPivot);
}

TEST(MetricProfile, EuclideanOrthonormalIsIdentity) {
  const MetricProfile p = metric_profile(NormModel::euclidean(3), Basis::standard(3));
  EXPECT_EQ(p.contracted, Matrix::Identity(3, 3));
  EXPECT_TRUE(check_orthonormal_pattern(p, 1e-8).pass);
}

TEST(MetricProfile, PseudoEuclideanUsesAbsoluteDiagonal) {
  const MetricProfile p = metric_profile(NormModel::pseudo_euclidean({-1, 1, 1, 1}), Basis::standard(4));
  EXPECT_EQ(p.contracted, Matrix(vec({-1, 1, 1, 1}).asDiagonal()));
  const ProfileCheck c = check_orthonormal_pattern(p, 1e-8);
  EXPECT_TRUE(c.pass);
  EXPECT_FALSE(c.positive_diagonal);
}

TEST(MetricProfile, RandersTriangularPattern) {
  const NormModel m = randers_example();
  const NormalizedBasis nb = orthonormalize(m, rows({{1, 0.3}, {0.2, 1}}));
  const MetricProfile p = metric_profile(m, nb.basis);
  const ProfileCheck c = check_orthonormal_pattern(p, 1e-8);
  EXPECT_TRUE(c.pass);
  EXPECT_TRUE(c.positive_diagonal);
  EXPECT_LE(std::abs(p.contracted(0, 1)), 1e-12);
  EXPECT_NEAR(p.contracted(0, 0), 1.0, 1e-12);
  EXPECT_NEAR(p.contracted(1, 1), 1.0, 1e-12);
  // G_21 is unconstrained and, for this basis, visibly nonzero.
  EXPECT_GT(std::abs(p.contracted(1, 0)), 1e-3);

  const MetricProfile fd = metric_profile(m, nb.basis, finite_difference());
  EXPECT_LE((fd.contracted - p.contracted).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_TRUE(check_orthonormal_pattern(fd, profile_tolerance(fd.source)).pass);
}

TEST(MetricProfile, RoundTripProperty) {
  std::mt19937_64 rng(5);
  for (const NormModel& m : {NormModel::euclidean(4), randers3(), quartic(4)}) {
    const int n = m.dimension();
    for (int t = 0; t < 100; ++t) {
      const NormalizedBasis nb = orthonormalize(m, Basis(random_basis(n, rng)));
      const ProfileCheck c = check_orthonormal_pattern(metric_profile(m, nb.basis), 1e-8);
      EXPECT_TRUE(c.pass) << m.kind_name() << " upper " << c.max_upper << " diag " << c.max_diagonal_defect;
    }
  }
}

TEST(MetricProfile, BasisFrameMatchesContraction) {
  const NormModel m = randers3();
  std::mt19937_64 rng(1);
  const Basis b(random_basis(3, rng));
  const MetricProfile p = metric_profile(m, b);
  const auto frame = p.in_basis_frame(b);
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) EXPECT_NEAR(frame[k](k, l), p.contracted(k, l), 1e-13);
  }
}

TEST(LinearIndependence, Examples) {
  const Basis standard = Basis::standard(3);
  EXPECT_TRUE(check_linear_independence(NormModel::euclidean(3), standard.vectors()));

  const NormModel r = randers3();
  std::mt19937_64 rng(12);
  const Basis out = orthogonalize(r, Basis(random_basis(3, rng)));
  EXPECT_TRUE(check_linear_independence(r, out.vectors()));
  EXPECT_GT(std::abs(out.columns().determinant()), 1e-6);

  const std::vector<Vector> dup{vec({1, 2}), vec({1, 2})};
  EXPECT_THROW(check_linear_independence(NormModel::euclidean(2), dup), NotOrthogonalSet);
}

TEST(LinearIndependence, PartialSetsAndOrderMatters) {
  const NormModel r = randers_example();
  // (1,0) ⊥ (0,1) with the metric at (1,0), but not the other way round.
  const std::vector<Vector> forward{vec({1, 0}), vec({0, 1})};
  const std::vector<Vector> backward{vec({0, 1}), vec({1, 0})};
  EXPECT_TRUE(check_linear_independence(r, forward));
  EXPECT_THROW(check_linear_independence(r, backward), NotOrthogonalSet);
  const std::vector<Vector> single{vec({0.3, 0.4})};
  EXPECT_TRUE(check_linear_independence(r, single));
}

}  // namespace
}  // namespace finsler
