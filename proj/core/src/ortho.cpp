#include "finsler/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "finsler/error.hpp"

namespace finsler {

Basis::Basis(std::vector<Vector> vectors) : vectors_(std::move(vectors)) {
  const auto n = vectors_.size();
  if (n < 2) throw DimensionMismatch("a basis needs at least two vectors");
  double column_norms = 1.0;
  for (const Vector& v : vectors_) {
    if (static_cast<std::size_t>(v.size()) != n) {
      throw DimensionMismatch("basis must contain n vectors of dimension n");
    }
    if (!v.allFinite()) throw SingularInput("basis vector has non-finite entries");
    column_norms *= v.norm();
  }
  const double det = columns().determinant();
  if (!(std::abs(det) > 1e-10 * column_norms)) {
    throw SingularInput("basis vectors are linearly dependent");
  }
}

Basis Basis::standard(int n) {
  std::vector<Vector> v;
  for (int k = 0; k < n; ++k) v.push_back(Vector::Unit(n, k));
  return Basis(std::move(v));
}

Basis Basis::from_rows(const Matrix& rows) {
  std::vector<Vector> v;
  for (Eigen::Index k = 0; k < rows.rows(); ++k) v.emplace_back(rows.row(k).transpose());
  return Basis(std::move(v));
}

Matrix Basis::columns() const {
  const auto n = static_cast<Eigen::Index>(vectors_.size());
  Matrix m(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m.col(k) = vectors_[static_cast<std::size_t>(k)];
  return m;
}

bool is_orthogonal(const NormModel& model, const Vector& v1, const Vector& v2, double tol,
                   const DerivativeOptions& options) {
  model.check_vector(v2);
  const MetricTensor g = metric_at(model, v1, options);
  return std::abs(g(v1, v2)) <= tol * (1.0 + v1.norm() * v2.norm());
}

namespace {

bool is_null(double f2, const Vector& v, double threshold) {
  return std::abs(f2) <= threshold * v.squaredNorm();
}

struct Candidate {
  Vector vector;
  Vector coefficients;
  double f2 = 0.0;
};

// Orthogonalizes `input` against e_0..e_{m-1}, whose covectors g(e_k) e_k are
// in `covectors` and whose contracted profile G_ks (s <= k) is in `profile`.
Candidate orthogonalize_against(const NormModel& model, const Vector& input, const std::vector<Vector>& built,
                                const std::vector<Vector>& covectors, const Matrix& profile) {
  const auto m = built.size();
  Candidate c;
  c.coefficients = Vector::Zero(static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < m; ++k) {
    double rhs = -covectors[k].dot(input);
    for (std::size_t s = 0; s < k; ++s) rhs -= profile(k, s) * c.coefficients[s];
    c.coefficients[k] = rhs / profile(k, k);
  }
  c.vector = input;
  for (std::size_t s = 0; s < m; ++s) c.vector += c.coefficients[s] * built[s];
  c.f2 = model.f2(c.vector);
  return c;
}

}  // namespace

Orthogonalization orthogonalize_detailed(const NormModel& model, const Basis& input,
                                         const OrthogonalizeOptions& options) {
  const int n = input.dimension();
  if (n != model.dimension()) throw DimensionMismatch("basis dimension does not match the norm");

  std::vector<std::size_t> remaining(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::vector<Vector> built;
  std::vector<Vector> covectors;
  std::vector<std::size_t> order;
  Matrix profile = Matrix::Zero(n, n);
  Matrix coefficients = Matrix::Zero(n, n);

  for (int m = 0; m < n; ++m) {
    std::size_t pick = 0;
    Candidate cand = orthogonalize_against(model, input[remaining[0]], built, covectors, profile);
    if (is_null(cand.f2, cand.vector, options.isotropic_threshold) && options.reorder_pivots) {
      double best = std::abs(cand.f2) / cand.vector.squaredNorm();
      for (std::size_t r = 1; r < remaining.size(); ++r) {
        Candidate other = orthogonalize_against(model, input[remaining[r]], built, covectors, profile);
        const double score = std::abs(other.f2) / other.vector.squaredNorm();
        if (score > best) {
          best = score;
          pick = r;
          cand = std::move(other);
        }
      }
    }
    if (is_null(cand.f2, cand.vector, options.isotropic_threshold)) {
      std::ostringstream msg;
      msg << "orthogonalization pivot " << m + 1 << " is isotropic (F^2 = " << cand.f2 << ")";
      throw IsotropicPivot(msg.str());
    }

    const MetricTensor g = metric_at(model, cand.vector, options.derivatives);
    const Vector covector = g.g * cand.vector;
    for (std::size_t s = 0; s < built.size(); ++s) profile(m, static_cast<Eigen::Index>(s)) = covector.dot(built[s]);
    profile(m, m) = covector.dot(cand.vector);
    for (Eigen::Index s = 0; s < cand.coefficients.size(); ++s) coefficients(m, s) = cand.coefficients[s];

    order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    built.push_back(std::move(cand.vector));
    covectors.push_back(covector);
  }
  return Orthogonalization{Basis(std::move(built)), std::move(order), std::move(coefficients)};
}

Basis orthogonalize(const NormModel& model, const Basis& input, const OrthogonalizeOptions& options) {
  return orthogonalize_detailed(model, input, options).basis;
}

NormalizedBasis normalize(const NormModel& model, const Basis& basis, double isotropic_threshold) {
  std::vector<Vector> out;
  std::vector<int> signature;
  for (int k = 0; k < basis.dimension(); ++k) {
    const Vector& e = basis[static_cast<std::size_t>(k)];
    const double f2 = model.f2(e);
    if (is_null(f2, e, isotropic_threshold)) {
      std::ostringstream msg;
      msg << "cannot normalize basis vector " << k + 1 << ": F^2 = " << f2;
      throw IsotropicPivot(msg.str());
    }
    out.push_back(e / std::sqrt(std::abs(f2)));
    signature.push_back(f2 < 0.0 ? -1 : 1);
  }
  return NormalizedBasis{Basis(std::move(out)), std::move(signature)};
}

NormalizedBasis orthonormalize(const NormModel& model, const Basis& input, const OrthogonalizeOptions& options) {
  return normalize(model, orthogonalize(model, input, options), options.isotropic_threshold);
}

MetricProfile metric_profile(const NormModel& model, const Basis& basis, const DerivativeOptions& options) {
  const int n = basis.dimension();
  if (n != model.dimension()) throw DimensionMismatch("basis dimension does not match the norm");
  MetricProfile p;
  p.contracted = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const Vector& ek = basis[static_cast<std::size_t>(k)];
    const MetricTensor g = metric_at(model, ek, options);
    p.source = g.source;
    const Vector covector = g.g * ek;
    for (int l = 0; l < n; ++l) p.contracted(k, l) = covector.dot(basis[static_cast<std::size_t>(l)]);
    p.pointwise.push_back(g.g);
  }
  return p;
}

std::vector<Matrix> MetricProfile::in_basis_frame(const Basis& basis) const {
  const Matrix e = basis.columns();
  std::vector<Matrix> out;
  for (const Matrix& g : pointwise) out.push_back(e.transpose() * g * e);
  return out;
}

double profile_tolerance(DerivativeMethod source) {
  return source == DerivativeMethod::FiniteDifference ? kNumericProfileTolerance : kExactProfileTolerance;
}

ProfileCheck check_orthonormal_pattern(const MetricProfile& profile, double tol) {
  const Matrix& g = profile.contracted;
  ProfileCheck c;
  c.tolerance = tol;
  for (Eigen::Index k = 0; k < g.rows(); ++k) {
    c.max_diagonal_defect = std::max(c.max_diagonal_defect, std::abs(std::abs(g(k, k)) - 1.0));
    if (g(k, k) < 0.0) c.positive_diagonal = false;
    for (Eigen::Index l = 0; l < g.cols(); ++l) {
      if (k < l) c.max_upper = std::max(c.max_upper, std::abs(g(k, l)));
      if (k > l) c.max_lower = std::max(c.max_lower, std::abs(g(k, l)));
    }
  }
  c.pass = c.max_upper <= tol && c.max_diagonal_defect <= tol;
  return c;
}

bool check_linear_independence(const NormModel& model, std::span<const Vector> vectors, double tol,
                               const DerivativeOptions& options) {
  const auto m = vectors.size();
  std::vector<Vector> covectors;
  for (const Vector& v : vectors) covectors.push_back(metric_at(model, v, options).g * v);

  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k + 1; l < m; ++l) {
      const double g = covectors[k].dot(vectors[l]);
      if (std::abs(g) > tol * (1.0 + vectors[k].norm() * vectors[l].norm())) {
        std::ostringstream msg;
        msg << "vector " << k + 1 << " is not orthogonal to vector " << l + 1 << " (g = " << g << ")";
        throw NotOrthogonalSet(msg.str());
      }
    }
  }
  // Contracting Σ a_l e_l = 0 with g(e_k)(e_k, .) for k = 1, 2, ... peels off
  // one coefficient at a time; each step needs a nonzero diagonal.
  for (std::size_t k = 0; k < m; ++k) {
    if (is_null(covectors[k].dot(vectors[k]), vectors[k], kIsotropicThreshold)) return false;
  }
  return true;
}

}  // namespace finsler
