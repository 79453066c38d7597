#pragma once

#include <cstddef>
#include <vector>

namespace finsler {

/// Truncated multivariate Taylor arithmetic (hyperdual numbers generalized to
/// n seed directions and up to third order).
///
/// A Jet carries a value together with all partial derivatives up to `order`
/// with respect to n independent seeds. Arithmetic propagates the derivative
/// tensors exactly (Leibniz and Faà di Bruno rules), so the only error is
/// floating-point rounding. Derivative tensors are stored dense and full
/// (not just the symmetric part); n is expected to be small.
class Jet {
 public:
  Jet() = default;

  /// Constant with zero derivatives.
  Jet(int n, int order, double value);

  /// Seed variable x_index with value `value`: d/dx_index = 1.
  static Jet variable(int n, int order, int index, double value);

  int dimension() const { return n_; }
  int order() const { return order_; }

  double value() const { return value_; }
  double d1(int i) const { return d1_[i]; }
  double d2(int i, int j) const { return d2_[i * n_ + j]; }
  double d3(int i, int j, int k) const { return d3_[(i * n_ + j) * n_ + k]; }

  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(const Jet& other);
  Jet& operator+=(double s);
  Jet& operator-=(double s);
  Jet& operator*=(double s);

  Jet operator-() const;

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a -= s; }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }

  /// h = f(a) given f and its first three derivatives at a.value().
  Jet compose(double f0, double f1, double f2, double f3) const;

 private:
  void check_compatible(const Jet& other) const;

  int n_ = 0;
  int order_ = 0;
  double value_ = 0.0;
  std::vector<double> d1_;
  std::vector<double> d2_;
  std::vector<double> d3_;
};

Jet sqrt(const Jet& a);
Jet pow(const Jet& a, double exponent);
Jet reciprocal(const Jet& a);

}  // namespace finsler
