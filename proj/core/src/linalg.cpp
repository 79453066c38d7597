#include "finsler/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace finsler {

Nullspace nullspace(const Matrix& m, double relative_tolerance) {
  const auto cols = m.cols();
  Nullspace out;
  if (m.rows() == 0) {
    out.basis = Matrix::Identity(cols, cols);
    out.singular_values = Vector();
    return out;
  }
  const Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const double largest = out.singular_values.size() > 0 ? out.singular_values[0] : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < out.singular_values.size(); ++i) {
    if (largest > 0.0 && out.singular_values[i] > relative_tolerance * largest) ++rank;
  }
  out.rank = rank;
  out.basis = svd.matrixV().rightCols(cols - rank);
  for (Eigen::Index j = 0; j < out.basis.cols(); ++j) canonicalize_sign(out.basis.col(j));
  return out;
}

int numerical_rank(const Matrix& m, double relative_tolerance) {
  if (m.size() == 0) return 0;
  const Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  return static_cast<int>((s.array() > relative_tolerance * s[0]).count());
}

double largest_principal_angle(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows()) return std::numbers::pi / 2.0;
  if (a.cols() == 0) return 0.0;
  const Matrix residual = b - a * (a.transpose() * b);
  const Eigen::JacobiSVD<Matrix> svd(residual);
  const double s = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  return std::asin(std::min(1.0, s));
}

void canonicalize_sign(Eigen::Ref<Vector> v, double threshold) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > threshold) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace finsler
