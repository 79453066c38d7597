#include "finsler/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "finsler/error.hpp"

namespace finsler {

Vector random_unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  double norm = 0.0;
  do {
    for (int i = 0; i < n; ++i) v[i] = normal(rng);
    norm = v.norm();
  } while (norm < 1e-8);
  return v / norm;
}

std::vector<Vector> sample_admissible_directions(const NormModel& model, std::size_t count,
                                                 std::uint64_t seed, double min_abs_f2) {
  std::mt19937_64 rng(seed);
  std::vector<Vector> out;
  out.reserve(count);
  const std::size_t max_attempts = 1000 * (count + 1);
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts) {
      throw Error("could not find enough admissible directions away from the light cone");
    }
    Vector v = random_unit_vector(model.dimension(), rng);
    try {
      if (std::abs(model.f2(v)) < min_abs_f2) continue;
    } catch (const NonAdmissibleDirection&) {
      continue;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> random_basis(int n, std::mt19937_64& rng, double min_abs_det) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Matrix m(n, n);
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = uniform(rng);
    }
  } while (std::abs(m.determinant()) < min_abs_det);
  std::vector<Vector> basis;
  for (int j = 0; j < n; ++j) basis.emplace_back(m.col(j));
  return basis;
}

}  // namespace finsler
