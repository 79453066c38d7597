#include "finsler/identities.hpp"

#include <algorithm>
#include <cmath>

namespace finsler {

IdentityResiduals identity_residuals(const NormModel& model, const Vector& v,
                                     const DerivativeOptions& options) {
  const F2Derivatives d = f2_derivatives(model, v, 3, options);
  const int n = model.dimension();

  IdentityResiduals r;
  r.euler = std::abs(v.dot(d.gradient) - 2.0 * d.value);
  r.gradient_degree1 = (d.hessian * v - d.gradient).cwiseAbs().maxCoeff();
  r.metric_contraction = std::abs(0.5 * v.dot(d.hessian * v) - d.value);

  double degree0 = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += v[k] * d.third(i, j, k);
      degree0 = std::max(degree0, std::abs(0.5 * s));
    }
  }
  r.metric_degree0 = degree0;

  if (d.value != 0.0) {
    const double f = signed_length(d.value);
    const Vector grad_f = d.gradient / (2.0 * f);
    r.euler_f_level = std::abs(v.dot(grad_f) - f);
  }
  return r;
}

std::vector<IdentityReport> check_euler_identities(const NormModel& model, std::span<const Vector> samples,
                                                   const IdentityOptions& options) {
  const DerivativeMethod method = resolve_method(model, options.derivatives.method);
  const double tol = options.tolerance.value_or(
      method == DerivativeMethod::FiniteDifference ? kFiniteDifferenceTolerance : kExactPathTolerance);

  std::vector<IdentityReport> reports(4);
  reports[0].name = "euler_degree2";
  reports[1].name = "gradient_degree1";
  reports[2].name = "metric_contraction";
  reports[3].name = "metric_degree0";
  for (auto& report : reports) {
    report.sample_count = samples.size();
    report.tolerance = tol;
    report.method = method;
  }

  bool any_f_level = false;
  double f_level = 0.0;
  for (const Vector& v : samples) {
    const IdentityResiduals r = identity_residuals(model, v, options.derivatives);
    reports[0].max_residual = std::max(reports[0].max_residual, r.euler);
    reports[1].max_residual = std::max(reports[1].max_residual, r.gradient_degree1);
    reports[2].max_residual = std::max(reports[2].max_residual, r.metric_contraction);
    reports[3].max_residual = std::max(reports[3].max_residual, r.metric_degree0);
    if (r.euler_f_level) {
      any_f_level = true;
      f_level = std::max(f_level, *r.euler_f_level);
    }
  }
  if (any_f_level) reports[0].f_level_max_residual = f_level;
  for (auto& report : reports) {
    report.pass = std::isfinite(report.max_residual) && report.max_residual <= tol;
  }
  return reports;
}

}  // namespace finsler
