#pragma once

#include "finsler/finite_difference.hpp"
#include "finsler/norm.hpp"
#include "finsler/tensor.hpp"
#include "finsler/types.hpp"

namespace finsler {

/// Derivative route selection shared by everything built on the metric.
struct DerivativeOptions {
  DerivativeMethod method = DerivativeMethod::Automatic;
  FiniteDifferenceOptions finite_difference{};
};

/// Raw derivatives of F² at a direction, before any symmetrization or rank
/// check. `third` is empty unless third order was requested.
struct F2Derivatives {
  double value = 0.0;
  Vector gradient;
  Matrix hessian;
  Tensor3 third;
  DerivativeMethod source = DerivativeMethod::Hyperdual;
};

/// The route actually taken for `requested` on `model`.
DerivativeMethod resolve_method(const NormModel& model, DerivativeMethod requested);

/// Derivatives of F² up to `order` (1..3). Analytic closed forms exist only
/// for the metric; third order on the analytic route is taken from jets
/// unless the metric is constant.
F2Derivatives f2_derivatives(const NormModel& model, const Vector& v, int order,
                             const DerivativeOptions& options = {});

/// g_ij(v) = ½ ∂²F²/∂v^i∂v^j at a fixed direction.
struct MetricTensor {
  Vector direction;
  Matrix g;
  DerivativeMethod source = DerivativeMethod::Analytic;
  /// max |g_ij − g_ji| before symmetrization.
  double asymmetry = 0.0;

  /// g(v)(x, y).
  double operator()(const Vector& x, const Vector& y) const { return x.dot(g * y); }
};

/// C_ijk(v) = ½ ∂g_ij/∂v^k = ¼ ∂³F²/∂v^i∂v^j∂v^k.
struct CartanTensor {
  Vector direction;
  Tensor3 c;
  DerivativeMethod source = DerivativeMethod::Hyperdual;
  double asymmetry = 0.0;

  /// max_{j,k} |v^i C_ijk(v)|.
  double direction_contraction() const;
  /// C(x, y, z).
  double operator()(const Vector& x, const Vector& y, const Vector& z) const;
};

/// Relative singular-value threshold below which the metric is declared singular.
inline constexpr double kMetricRankTolerance = 1e-8;

/// Metric tensor at v. Throws NonAdmissibleDirection or SingularMetric.
MetricTensor metric_at(const NormModel& model, const Vector& v, const DerivativeOptions& options = {});

/// Cartan tensor at v, symmetrized over index permutations.
CartanTensor cartan_at(const NormModel& model, const Vector& v, const DerivativeOptions& options = {});

/// Closed-form Randers metric
/// g = (F/α)(A − ℓℓᵀ) + (ℓ + b)(ℓ + b)ᵀ with ℓ = Av/α.
Matrix randers_metric(const RandersNorm& norm, const Vector& v);

}  // namespace finsler
