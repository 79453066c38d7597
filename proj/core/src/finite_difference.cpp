#include "finsler/finite_difference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace finsler {

namespace {

struct Stencil {
  std::vector<int> offsets;
  std::vector<double> weights;
};

// Central stencils for the d-th derivative with O(h^accuracy) truncation.
const Stencil& stencil(int derivative, int accuracy) {
  static const std::array<std::array<Stencil, 3>, 3> table = {{
      {{
          {{-1, 1}, {-1.0 / 2, 1.0 / 2}},
          {{-2, -1, 1, 2}, {1.0 / 12, -2.0 / 3, 2.0 / 3, -1.0 / 12}},
          {{-3, -2, -1, 1, 2, 3}, {-1.0 / 60, 3.0 / 20, -3.0 / 4, 3.0 / 4, -3.0 / 20, 1.0 / 60}},
      }},
      {{
          {{-1, 0, 1}, {1.0, -2.0, 1.0}},
          {{-2, -1, 0, 1, 2}, {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12}},
          {{-3, -2, -1, 0, 1, 2, 3},
           {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90}},
      }},
      {{
          {{-2, -1, 1, 2}, {-1.0 / 2, 1.0, -1.0, 1.0 / 2}},
          {{-3, -2, -1, 1, 2, 3}, {1.0 / 8, -1.0, 13.0 / 8, -13.0 / 8, 1.0, -1.0 / 8}},
          {{-4, -3, -2, -1, 1, 2, 3, 4},
           {-7.0 / 240, 3.0 / 10, -169.0 / 120, 61.0 / 30, -61.0 / 30, 169.0 / 120, -3.0 / 10,
            7.0 / 240}},
      }},
  }};
  if (derivative < 1 || derivative > 3) throw std::invalid_argument("stencil: derivative order must be 1..3");
  if (accuracy != 2 && accuracy != 4 && accuracy != 6) {
    throw std::invalid_argument("stencil: accuracy must be 2, 4 or 6");
  }
  return table[derivative - 1][accuracy / 2 - 1];
}

}  // namespace

double scaled_step(double relative_step, const Vector& x) {
  return relative_step * std::max(1.0, x.norm());
}

double central_partial(const ScalarField& f, const Vector& x, std::span<const int> axes, double step,
                       int accuracy) {
  if (axes.empty() || axes.size() > 3) throw std::invalid_argument("central_partial: 1 to 3 axes");

  // Distinct axes with multiplicities.
  std::vector<std::pair<int, int>> groups;
  for (int a : axes) {
    auto it = std::find_if(groups.begin(), groups.end(), [a](const auto& g) { return g.first == a; });
    if (it == groups.end()) {
      groups.emplace_back(a, 1);
    } else {
      ++it->second;
    }
  }
  std::vector<const Stencil*> stencils;
  for (const auto& [axis, count] : groups) stencils.push_back(&stencil(count, accuracy));

  std::vector<std::size_t> cursor(groups.size(), 0);
  Vector point(x.size());
  double sum = 0.0;
  while (true) {
    point = x;
    double weight = 1.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      point[groups[g].first] += stencils[g]->offsets[cursor[g]] * step;
      weight *= stencils[g]->weights[cursor[g]];
    }
    sum += weight * f(std::span<const double>(point.data(), static_cast<std::size_t>(point.size())));

    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (++cursor[g] < stencils[g]->offsets.size()) break;
      cursor[g] = 0;
    }
    if (g == groups.size()) break;
  }
  return sum / std::pow(step, static_cast<double>(axes.size()));
}

}  // namespace finsler
