#pragma once

#include <Eigen/Dense>

namespace finsler {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// How derivatives of F² are obtained.
enum class DerivativeMethod {
  Automatic,         ///< analytic where available, else hyperdual, else finite differences
  Analytic,          ///< closed form; falls back to hyperdual for kinds without one
  Hyperdual,         ///< exact truncated Taylor arithmetic
  FiniteDifference,  ///< central differences on F²
};

const char* to_string(DerivativeMethod method);

}  // namespace finsler
