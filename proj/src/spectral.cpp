#include "approxlab/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace approxlab {

Eigen::ArrayXcd sample(const PeriodicFn& f, const UniformGrid& g, double shift) {
  Eigen::ArrayXcd out(g.size);
  for (int j = 0; j < g.size; ++j) out[j] = f(g.node(j) + shift);
  return out;
}

TrigPoly spectral_coeffs(const Eigen::ArrayXcd& samples, int n) {
  int m = static_cast<int>(samples.size());
  if (m < 4 * (n + 1))
    throw std::invalid_argument("spectral_coeffs: grid size " + std::to_string(m) +
                                " too small for degree " + std::to_string(n) +
                                " (need M >= 4(n+1))");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * n + 1);
  for (int j = 0; j < m; ++j) {
    double x = two_pi * j / m;
    // accumulate f_j e^{-i nu x} for nu = -n..n by phase recurrence
    std::complex<double> w = std::polar(1.0, -x);
    std::complex<double> ph = std::polar(1.0, n * x);  // e^{-i(-n)x}
    std::complex<double> fj = samples[j];
    for (int i = 0; i <= 2 * n; ++i) {
      c[i] += fj * ph;
      ph *= w;
    }
  }
  c /= static_cast<double>(m);
  return TrigPoly(n, std::move(c));
}

TrigPoly spectral_coeffs(const PeriodicFn& f, int n, const UniformGrid& g) {
  return spectral_coeffs(sample(f, g), n);
}

}  // namespace approxlab
