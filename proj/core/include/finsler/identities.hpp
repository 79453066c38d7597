#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finsler/metric.hpp"

namespace finsler {

/// Outcome of one homogeneity identity over a sample of directions.
struct IdentityReport {
  std::string name;
  double max_residual = 0.0;
  std::size_t sample_count = 0;
  bool pass = false;
  double tolerance = 0.0;
  DerivativeMethod method = DerivativeMethod::Automatic;
  /// Only for the Euler identity: max |v^i ∂F/∂v^i − F| over non-isotropic samples.
  std::optional<double> f_level_max_residual;
};

inline constexpr double kExactPathTolerance = 1e-10;
inline constexpr double kFiniteDifferenceTolerance = 1e-6;

struct IdentityOptions {
  DerivativeOptions derivatives{};
  /// Defaults to kExactPathTolerance or kFiniteDifferenceTolerance by route.
  std::optional<double> tolerance;
};

/// Residuals at one direction, in report order.
struct IdentityResiduals {
  double euler = 0.0;           ///< v^i ∂_i F² − 2F²
  double gradient_degree1 = 0.0;  ///< max_i |v^j ∂_ij F² − ∂_i F²|
  double metric_contraction = 0.0;  ///< g_ij v^i v^j − F²
  double metric_degree0 = 0.0;  ///< max_ij |v^k ∂_k g_ij|
  std::optional<double> euler_f_level;
};

IdentityResiduals identity_residuals(const NormModel& model, const Vector& v,
                                     const DerivativeOptions& options = {});

/// Evaluates the four homogeneity identities at every sample and reports the
/// worst residual of each. Failures are reported, never thrown.
std::vector<IdentityReport> check_euler_identities(const NormModel& model, std::span<const Vector> samples,
                                                   const IdentityOptions& options = {});

}  // namespace finsler
