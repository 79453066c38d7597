#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

/// Base class for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A norm model was constructed with invalid parameters.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

/// The direction is zero, non-finite, or outside the domain of the norm.
class NonAdmissibleDirection : public Error {
 public:
  using Error::Error;
};

class SingularMetric : public Error {
 public:
  using Error::Error;
};

/// A pivot or normalization target has (numerically) vanishing F².
class IsotropicPivot : public Error {
 public:
  using Error::Error;
};

class SingularInput : public Error {
 public:
  using Error::Error;
};

class NotOrthogonalSet : public Error {
 public:
  using Error::Error;
};

class NotOrthonormalBasis : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace finsler
