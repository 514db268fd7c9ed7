#pragma once

#include <map>
#include <string>
#include <vector>

#include "periodic_fn.hpp"

namespace approxlab {

struct CatalogEntry {
  PeriodicFn fn;
  // expected decay exponents, keyed like "omega:k=1,p=0.5" -> 2.0
  std::map<std::string, double> known_rates;
  std::string notes;
};

// Limit of the series sum_v sin((2v+1)x - pi(r-1)/2)/(2v+1)^r. For r = 1,2,3
// the entry evaluates the exact closed-form sum (square wave, triangular wave,
// piecewise quadratic); for r >= 4 a truncated series with `terms` terms is
// used. omega_r(f, h)_p decays like h^{r-1+1/p}.
CatalogEntry odd_harmonic(int r, int terms = 4096);

// Partial sum with N terms (v = 0..N-1), for cross-checks.
PeriodicFn odd_harmonic_partial_sum(int r, int N);
// Upper bound on the sup-norm tail of the partial sum, finite for r >= 2.
double odd_harmonic_tail_bound(int r, int N);

// f(x) = x on [0, pi), 2 pi - x on [pi, 2 pi): 1-Lipschitz, kinks at 0 and pi.
CatalogEntry triangle_wave();

// Staircase approximant phi_n of the triangle wave: n plateaus per half-period
// joined by ramps of width pi/n^2 and slope n. ||f - phi_n||_inf <= pi/n while
// ||phi_n'||_p = n^{1-1/p} on the ramps.
CatalogEntry ramp_phi(int n);

// sum_v 2^{-gamma v} cos(2^v x), truncated at 2^levels. omega_k slope gamma
// for gamma < k.
CatalogEntry lacunary(double gamma, int levels = 20);

// Entries with sparse exact spectra plus the lacunary function.
std::vector<CatalogEntry> smooth_catalog();

// Name registry for the CLI and the experiment suites.
const CatalogEntry& find_fn(const std::string& name);  // throws listing names
std::vector<std::string> catalog_names();

}  // namespace approxlab
