#include "approxlab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace approxlab {

Eigen::ArrayXd UniformGrid::nodes() const {
  Eigen::ArrayXd x(size);
  for (int j = 0; j < size; ++j) x[j] = node(j);
  return x;
}

UniformGrid UniformGrid::of_size(int m) {
  if (m < 1) throw std::invalid_argument("UniformGrid: size must be >= 1, got " + std::to_string(m));
  return UniformGrid{m};
}

HGrid HGrid::geometric(double h_min, double h_max, int points_per_decade) {
  if (!(h_min > 0) || !(h_max > h_min))
    throw std::invalid_argument("HGrid: need 0 < h_min < h_max");
  if (points_per_decade < 1) throw std::invalid_argument("HGrid: points_per_decade must be >= 1");
  double decades = std::log10(h_max / h_min);
  int n = static_cast<int>(std::round(decades * points_per_decade));
  if (n < 1) n = 1;
  HGrid g;
  g.v_.resize(n + 1);
  for (int i = 0; i <= n; ++i)
    g.v_[i] = h_min * std::pow(h_max / h_min, static_cast<double>(i) / n);
  g.v_[n] = h_max;  // exact endpoint
  return g;
}

const HGrid& HGrid::shared() {
  static const HGrid g = geometric(two_pi * 1e-4, two_pi, 32);
  return g;
}

int HGrid::count_leq(double t) const {
  double lim = t * (1 + 1e-12);
  int c = 0;
  while (c < size() && v_[c] <= lim) ++c;
  return c;
}

}  // namespace approxlab
