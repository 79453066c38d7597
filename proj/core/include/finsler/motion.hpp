#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsler/ortho.hpp"

namespace finsler {

/// Infinitesimal motion e'_k = e_k + ε Σ_m a(k, m) e_m, coefficients in the
/// basis frame.
struct MotionGenerator {
  Matrix coefficients;
};

/// Row-major flattening: entry (k, m) goes to index k·n + m.
Vector flatten(const Matrix& a);
Matrix unflatten(const Vector& x, int n);

/// Homogeneous linear system M · vec(a) = 0 on n² unknowns.
struct ConstraintSystem {
  int dimension = 0;
  Matrix rows;
  /// (k, l) pair, k <= l, that produced each row.
  std::vector<std::pair<int, int>> labels;
  std::string origin;
  /// max over rows of |2 C(e_k)(e_k, e_l, e_m)|, the assembled Cartan contribution.
  double cartan_contribution = 0.0;
  /// max |C| over the basis directions.
  double cartan_scale = 0.0;

  /// Wraps an arbitrary coefficient matrix with n² columns.
  static ConstraintSystem from_rows(int n, Matrix rows, std::string origin = "external");

  /// max_row |M · vec(a)|.
  double residual(const Matrix& a) const;
  int rank(double relative_tolerance = 1e-8) const;
  int nullity(double relative_tolerance = 1e-8) const;
};

struct MotionOptions {
  DerivativeOptions derivatives{};
  /// Orthonormality tolerance for the input basis; defaults by derivative route.
  std::optional<double> profile_tolerance;
};

/// First-order orthonormality preservation, one row per pair k <= l:
///   Σ_m a(k,m) [g(e_k)(e_m, e_l) + 2 C(e_k)(e_k, e_l, e_m)] + Σ_m a(l,m) g(e_k)(e_k, e_m) = 0.
/// Contractions are taken in ambient coordinates. Throws NotOrthonormalBasis.
ConstraintSystem assemble_motion_constraints(const NormModel& model, const Basis& basis,
                                             const MotionOptions& options = {});

/// The same conditions from the passive viewpoint: the norm is pulled back to
/// basis coordinates, where the metric transforms as a tensor, and the rows
///   a(k,m) ĝ_ml + a(l,m) ĝ_km + ∂_m ĝ_kl a(k,m) = 0
/// are built from derivatives taken directly in those coordinates at e_k.
ConstraintSystem assemble_quasimotion_constraints(const NormModel& model, const Basis& basis,
                                                  const MotionOptions& options = {});

/// The norm F̂²(x) = F²(E x), with E the basis as columns.
NormModel pull_back(const NormModel& model, const Basis& basis);

inline constexpr double kRankTolerance = 1e-8;

struct LieAlgebraBasis {
  std::vector<MotionGenerator> generators;
  Vector singular_values;
  int rank = 0;

  std::size_t dimension() const { return generators.size(); }
};

/// Orthonormal (in flattened coordinates) basis of the nullspace, ordered as
/// the SVD returns it, each with its first significant entry positive.
LieAlgebraBasis solve_lie_algebra(const ConstraintSystem& system, double relative_tolerance = kRankTolerance);

struct ClosureReport {
  double residual_f = 0.0;
  double residual_g = 0.0;
  double residual_sum = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// The composition of two infinitesimal motions has first-order coefficients
/// f + g; checks that the sum satisfies the system.
ClosureReport verify_additive_closure(const ConstraintSystem& system, const MotionGenerator& f,
                                      const MotionGenerator& g, double tol = 1e-8);

/// Orthonormal-pattern deviation of e'_k = e_k + ε Σ_m a(k,m) e_m.
double first_order_drift(const NormModel& model, const Basis& basis, const MotionGenerator& gen, double eps,
                         const DerivativeOptions& options = {});

struct DriftReport {
  std::vector<double> eps;
  std::vector<double> deviation;
  /// Least-squares slope of log(deviation) against log(eps).
  double fitted_order = 0.0;
  /// K in deviation ≈ K · eps^order.
  double constant = 0.0;
  /// Every deviation is at rounding level; no order can be fitted.
  bool exact = false;
  double min_order = 0.0;
  bool pass = false;
};

inline constexpr double kDriftFloor = 1e-13;

/// Runs first_order_drift over an eps ladder and fits the order of the
/// deviation. Throws NotOrthonormalBasis.
DriftReport verify_first_order_preservation(const NormModel& model, const Basis& basis,
                                            const MotionGenerator& gen,
                                            const std::vector<double>& ladder = {1e-2, 1e-3, 1e-4},
                                            double min_order = 1.9, const MotionOptions& options = {});

struct EquivalenceReport {
  std::size_t dimension_a = 0;
  std::size_t dimension_b = 0;
  double max_angle = 0.0;
  double angle_tolerance = 0.0;
  bool equivalent = false;
};

/// Compares nullspaces by dimension and largest principal angle.
/// Throws DimensionMismatch when the systems have different unknown counts.
EquivalenceReport compare_algebras(const ConstraintSystem& a, const ConstraintSystem& b, double angle_tol = 1e-6,
                                   double rank_tol = kRankTolerance);

struct BracketResult {
  Matrix commutator;
  double residual = 0.0;
};

/// fg − gf and its residual against the system.
BracketResult bracket(const MotionGenerator& f, const MotionGenerator& g, const ConstraintSystem& system);

/// Ambient linear map L with L e_k = Σ_m a(k,m) e_m, i.e. L = E aᵀ E⁻¹.
Matrix to_ambient(const Basis& basis, const MotionGenerator& gen);

}  // namespace finsler
