#pragma once

#include "grid.hpp"
#include "periodic_fn.hpp"
#include "trig_poly.hpp"

namespace approxlab {

// f at the grid nodes (optionally all shifted by s).
Eigen::ArrayXcd sample(const PeriodicFn& f, const UniformGrid& g, double shift = 0.0);

// Discrete Fourier coefficients c_nu = (1/M) sum_j f(x_j) e^{-i nu x_j} for
// |nu| <= n, assembled into a TrigPoly. Requires M >= 4(n+1); exact on
// polynomials of degree < M - n.
TrigPoly spectral_coeffs(const PeriodicFn& f, int n, const UniformGrid& g);
TrigPoly spectral_coeffs(const Eigen::ArrayXcd& samples, int n);

}  // namespace approxlab
