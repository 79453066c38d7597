#pragma once

#include "finsler/types.hpp"

namespace finsler {

/// Orthonormal nullspace basis from a full SVD.
struct Nullspace {
  Matrix basis;  ///< columns span the nullspace, orthonormal
  Vector singular_values;
  int rank = 0;
};

/// Singular values at or below `relative_tolerance * σ_max` count as zero.
Nullspace nullspace(const Matrix& m, double relative_tolerance);

int numerical_rank(const Matrix& m, double relative_tolerance);

/// Largest principal angle between span(a) and span(b), both given with
/// orthonormal columns of equal count. Computed through sines for accuracy
/// near zero. Unequal dimensions give π/2.
double largest_principal_angle(const Matrix& a, const Matrix& b);

/// Flips v so that its first entry with |x| > threshold is positive.
void canonicalize_sign(Eigen::Ref<Vector> v, double threshold = 1e-12);

}  // namespace finsler
