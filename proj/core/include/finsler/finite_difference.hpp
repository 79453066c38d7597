#pragma once

#include <functional>
#include <span>
#include <vector>

#include "finsler/types.hpp"

namespace finsler {

/// Step and stencil selection for the finite-difference derivative path.
///
/// Steps are relative: the actual step at x is `step * max(1, |x|)`.
/// `accuracy` is the truncation order of the central stencils (2, 4 or 6).
struct FiniteDifferenceOptions {
  double second_order_step = 1e-2;
  double third_order_step = 1e-2;
  int accuracy = 6;
};

using ScalarField = std::function<double(std::span<const double>)>;

/// Central-difference estimate of ∂^{|axes|} f / ∂x_{axes[0]} ... ∂x_{axes[r-1]}
/// at x, for 1 <= |axes| <= 3. Repeated axes use the dedicated second/third
/// derivative stencil; distinct axes are combined as a tensor product.
double central_partial(const ScalarField& f, const Vector& x, std::span<const int> axes, double step,
                       int accuracy);

/// Relative step scaled by max(1, |x|).
double scaled_step(double relative_step, const Vector& x);

}  // namespace finsler
