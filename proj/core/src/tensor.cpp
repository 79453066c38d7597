#include "finsler/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace finsler {

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Tensor3::max_asymmetry() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        const double x = (*this)(i, j, k);
        m = std::max({m, std::abs(x - (*this)(i, k, j)), std::abs(x - (*this)(j, i, k)),
                      std::abs(x - (*this)(j, k, i)), std::abs(x - (*this)(k, i, j)),
                      std::abs(x - (*this)(k, j, i))});
      }
    }
  }
  return m;
}

void Tensor3::symmetrize() {
  Tensor3 out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        out(i, j, k) = ((*this)(i, j, k) + (*this)(i, k, j) + (*this)(j, i, k) + (*this)(j, k, i) +
                        (*this)(k, i, j) + (*this)(k, j, i)) /
                       6.0;
      }
    }
  }
  *this = std::move(out);
}

}  // namespace finsler
