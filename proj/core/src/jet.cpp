#include "finsler/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace finsler {

Jet::Jet(int n, int order, double value) : n_(n), order_(order), value_(value) {
  if (n < 1 || order < 0 || order > 3) {
    throw std::invalid_argument("Jet: dimension must be >= 1 and order in [0, 3]");
  }
  const auto un = static_cast<std::size_t>(n);
  if (order >= 1) d1_.assign(un, 0.0);
  if (order >= 2) d2_.assign(un * un, 0.0);
  if (order >= 3) d3_.assign(un * un * un, 0.0);
}

Jet Jet::variable(int n, int order, int index, double value) {
  if (index < 0 || index >= n) throw std::out_of_range("Jet::variable: seed index out of range");
  Jet x(n, order, value);
  if (order >= 1) x.d1_[index] = 1.0;
  return x;
}

void Jet::check_compatible(const Jet& other) const {
  if (n_ != other.n_ || order_ != other.order_) {
    throw std::invalid_argument("Jet: mixing jets of different dimension or order");
  }
}

Jet& Jet::operator+=(const Jet& other) {
  check_compatible(other);
  value_ += other.value_;
  for (std::size_t i = 0; i < d1_.size(); ++i) d1_[i] += other.d1_[i];
  for (std::size_t i = 0; i < d2_.size(); ++i) d2_[i] += other.d2_[i];
  for (std::size_t i = 0; i < d3_.size(); ++i) d3_[i] += other.d3_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& other) {
  check_compatible(other);
  value_ -= other.value_;
  for (std::size_t i = 0; i < d1_.size(); ++i) d1_[i] -= other.d1_[i];
  for (std::size_t i = 0; i < d2_.size(); ++i) d2_[i] -= other.d2_[i];
  for (std::size_t i = 0; i < d3_.size(); ++i) d3_[i] -= other.d3_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& other) {
  *this = *this * other;
  return *this;
}

Jet& Jet::operator+=(double s) {
  value_ += s;
  return *this;
}

Jet& Jet::operator-=(double s) {
  value_ -= s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  value_ *= s;
  for (double& d : d1_) d *= s;
  for (double& d : d2_) d *= s;
  for (double& d : d3_) d *= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  r *= -1.0;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_compatible(b);
  const int n = a.n_;
  Jet r(n, a.order_, a.value_ * b.value_);
  if (a.order_ >= 1) {
    for (int i = 0; i < n; ++i) r.d1_[i] = a.value_ * b.d1_[i] + a.d1_[i] * b.value_;
  }
  if (a.order_ >= 2) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        r.d2_[i * n + j] = a.value_ * b.d2(i, j) + a.d1_[i] * b.d1_[j] + a.d1_[j] * b.d1_[i] +
                           a.d2(i, j) * b.value_;
      }
    }
  }
  if (a.order_ >= 3) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          r.d3_[(i * n + j) * n + k] =
              a.value_ * b.d3(i, j, k) + a.d3(i, j, k) * b.value_ +
              a.d1_[i] * b.d2(j, k) + a.d1_[j] * b.d2(i, k) + a.d1_[k] * b.d2(i, j) +
              a.d2(i, j) * b.d1_[k] + a.d2(i, k) * b.d1_[j] + a.d2(j, k) * b.d1_[i];
        }
      }
    }
  }
  return r;
}

Jet Jet::compose(double f0, double f1, double f2, double f3) const {
  const int n = n_;
  Jet r(n, order_, f0);
  if (order_ >= 1) {
    for (int i = 0; i < n; ++i) r.d1_[i] = f1 * d1_[i];
  }
  if (order_ >= 2) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        r.d2_[i * n + j] = f2 * d1_[i] * d1_[j] + f1 * d2(i, j);
      }
    }
  }
  if (order_ >= 3) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          r.d3_[(i * n + j) * n + k] =
              f3 * d1_[i] * d1_[j] * d1_[k] +
              f2 * (d2(i, j) * d1_[k] + d2(i, k) * d1_[j] + d2(j, k) * d1_[i]) +
              f1 * d3(i, j, k);
        }
      }
    }
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet sqrt(const Jet& a) {
  const double x = a.value();
  const double s = std::sqrt(x);
  return a.compose(s, 0.5 / s, -0.25 / (x * s), 0.375 / (x * x * s));
}

Jet pow(const Jet& a, double p) {
  const double x = a.value();
  return a.compose(std::pow(x, p), p * std::pow(x, p - 1.0), p * (p - 1.0) * std::pow(x, p - 2.0),
                   p * (p - 1.0) * (p - 2.0) * std::pow(x, p - 3.0));
}

Jet reciprocal(const Jet& a) {
  const double x = a.value();
  const double inv = 1.0 / x;
  return a.compose(inv, -inv * inv, 2.0 * inv * inv * inv, -6.0 * inv * inv * inv * inv);
}

}  // namespace finsler
