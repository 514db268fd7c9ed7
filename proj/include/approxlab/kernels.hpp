#pragma once

#include <string>

#include "grid.hpp"
#include "periodic_fn.hpp"
#include "quasi_norm.hpp"
#include "trig_poly.hpp"

namespace approxlab {

// Convolution-mean multiplier: K_n(x) = sum_{|nu| <= n} a_nu e^{i nu x} with
// a_0 = 1 (mean preserved) and real, even coefficients.
struct Kernel {
  std::string name;
  int degree = 0;
  Eigen::ArrayXd coeffs;  // a_nu at index nu + degree, nu = -n..n

  double multiplier(int nu) const {
    int a = nu < 0 ? -nu : nu;
    return a > degree ? 0.0 : coeffs[nu + degree];
  }
  TrigPoly as_poly() const;
};

// dirichlet: a_nu = 1. fejer: a_nu = 1 - |nu|/(n+1).
// vp (delayed mean): a_nu = min(1, 2(1 - |nu|/(n+1))) - flat through |nu| <= n/2,
// then a linear ramp hitting 0 at |nu| = n+1.
Kernel kernel_catalog(const std::string& name, int n);

// Kernels whose family means stay uniformly bounded (fejer, vp; not dirichlet).
bool bounded_family(const Kernel& k);

// L_n(f): multiplier a_nu applied to the discrete spectrum of f on g.
TrigPoly fourier_mean_poly(const PeriodicFn& f, const Kernel& k, const UniformGrid& g);
PeriodicFn fourier_mean(const PeriodicFn& f, const Kernel& k, const UniformGrid& g);

// L_{n,lambda}(f, x) = (1/(4n+1)) sum_{j=0}^{4n} f(t_j + lambda) K_n(x - t_j - lambda),
// t_j = 2 pi j / (4n+1). A trigonometric polynomial of degree n, materialized
// through exact coefficient extraction from the quadrature sum.
TrigPoly family_mean_poly(const PeriodicFn& f, const Kernel& k, double lambda);
PeriodicFn family_mean(const PeriodicFn& f, const Kernel& k, double lambda);

// Node average f~_n(lambda) = (1/(4n+1)) sum_j f(t_j + lambda), as a function
// of lambda. Annihilates e^{i mu x} unless (4n+1) divides mu.
PeriodicFn tilde(const PeriodicFn& f, int n);

struct OperatorNormResult {
  double value = 0.0;
  bool exact = false;   // false: probe-based lower bound only
  std::string method;
};
// ||L_n||_{L_p -> L_p}. p = 1 and p = inf: the kernel's normalized L_1 mass
// (exact for convolution means); p = 2: max |a_nu| (exact); other p: lower
// bound from a probe family, flagged.
OperatorNormResult operator_norm(const Kernel& k, const QuasiNormSpec& spec, const UniformGrid& g);

}  // namespace approxlab
