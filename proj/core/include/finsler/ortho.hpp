#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "finsler/metric.hpp"

namespace finsler {

/// Ordered basis e_1..e_n of R^n. Order matters: orthogonality in a
/// Minkowski space is not symmetric.
class Basis {
 public:
  /// Throws DimensionMismatch for ragged input and SingularInput when
  /// |det| <= 1e-10 · Π |e_k|.
  explicit Basis(std::vector<Vector> vectors);

  static Basis standard(int n);
  /// One basis vector per row.
  static Basis from_rows(const Matrix& rows);

  int dimension() const { return static_cast<int>(vectors_.size()); }
  const Vector& operator[](std::size_t k) const { return vectors_[k]; }
  std::span<const Vector> vectors() const { return vectors_; }
  /// Basis vectors as columns.
  Matrix columns() const;

 private:
  std::vector<Vector> vectors_;
};

/// v1 ⊥ v2 iff |g(v1)(v1, v2)| <= tol · (1 + |v1||v2|). The metric is taken
/// at v1, so the relation is not symmetric.
bool is_orthogonal(const NormModel& model, const Vector& v1, const Vector& v2, double tol = 1e-8,
                   const DerivativeOptions& options = {});

/// |F²(e)| at or below this times |e|² is a null pivot.
inline constexpr double kIsotropicThreshold = 1e-10;

struct OrthogonalizeOptions {
  DerivativeOptions derivatives{};
  /// On a null pivot, pull forward the remaining input vector whose
  /// orthogonalized candidate has the largest |F²|.
  bool reorder_pivots = false;
  double isotropic_threshold = kIsotropicThreshold;
};

struct Orthogonalization {
  Basis basis;
  /// input_order[m] is the index of the input vector that produced e_m.
  std::vector<std::size_t> input_order;
  /// coefficients(m, s), s < m: e_m = e'_m + Σ_s coefficients(m, s) e_s.
  Matrix coefficients;
};

/// Successive orthogonalization: e_1 = e'_1 and e_{m+1} = e'_{m+1} + Σ_{s<=m} a^s e_s
/// with g(e_k)(e_k, e_{m+1}) = 0 for k <= m. The system for the a^s is lower
/// triangular with diagonal F²(e_k), so it is solved by forward substitution.
Orthogonalization orthogonalize_detailed(const NormModel& model, const Basis& input,
                                         const OrthogonalizeOptions& options = {});

Basis orthogonalize(const NormModel& model, const Basis& input, const OrthogonalizeOptions& options = {});

struct NormalizedBasis {
  Basis basis;
  /// sign of F²(e_k) per vector.
  std::vector<int> signature;
};

/// e_k -> e_k / sqrt|F²(e_k)|. Throws IsotropicPivot on null vectors.
NormalizedBasis normalize(const NormModel& model, const Basis& basis,
                          double isotropic_threshold = kIsotropicThreshold);

/// Orthogonalize followed by normalize.
NormalizedBasis orthonormalize(const NormModel& model, const Basis& input,
                               const OrthogonalizeOptions& options = {});

/// Metric matrices g(e_k) at each basis direction and their contraction
/// G_kl = g(e_k)(e_k, e_l).
struct MetricProfile {
  std::vector<Matrix> pointwise;
  Matrix contracted;
  DerivativeMethod source = DerivativeMethod::Analytic;

  /// g(e_k) expressed in the basis frame: Eᵀ g(e_k) E.
  std::vector<Matrix> in_basis_frame(const Basis& basis) const;
};

MetricProfile metric_profile(const NormModel& model, const Basis& basis, const DerivativeOptions& options = {});

/// Orthonormal pattern: G_kl = 0 for k < l and |G_kk| = 1; k > l is free.
struct ProfileCheck {
  double max_upper = 0.0;          ///< max_{k<l} |G_kl|
  double max_diagonal_defect = 0.0;  ///< max_k ||G_kk| − 1|
  double max_lower = 0.0;          ///< max_{k>l} |G_kl|, informational
  bool positive_diagonal = true;   ///< false means the |G_kk| = 1 convention was needed
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kExactProfileTolerance = 1e-8;
inline constexpr double kNumericProfileTolerance = 1e-5;

/// Default tolerance for a profile computed along `source`.
double profile_tolerance(DerivativeMethod source);

ProfileCheck check_orthonormal_pattern(const MetricProfile& profile, double tol);

/// Certifies linear independence of an orthogonal set by the successive
/// contraction argument: the contracted matrix is lower triangular, so the
/// set is independent iff every diagonal entry F²(e_k) is nonzero.
/// Throws NotOrthogonalSet when some g(e_k)(e_k, e_l), k < l, is not zero.
bool check_linear_independence(const NormModel& model, std::span<const Vector> vectors, double tol = 1e-8,
                               const DerivativeOptions& options = {});

}  // namespace finsler
