#pragma once

#include <cstddef>
#include <vector>

namespace finsler {

/// Dense n×n×n array, row-major in (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int dimension() const { return n_; }
  bool empty() const { return data_.empty(); }

  double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  double max_abs() const;
  /// Largest difference between an entry and any of its index permutations.
  double max_asymmetry() const;
  /// Replaces every entry with the mean over its six index permutations.
  void symmetrize();

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  std::vector<double> data_;
};

}  // namespace finsler
