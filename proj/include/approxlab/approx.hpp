#pragma once

#include <string>
#include <vector>

#include "grid.hpp"
#include "moduli.hpp"
#include "periodic_fn.hpp"
#include "quasi_norm.hpp"
#include "trig_poly.hpp"

namespace approxlab {

struct SolverBudget {
  int max_iter = 5000;       // descent iterations per continuation stage
  double tol = 1e-10;        // relative objective decrease cutoff per stage
  int restarts = 8;          // random starts added for p < 1
  double eps_start = 1e-2;   // smoothing width, relative to the rms of f
  double eps_end = 1e-8;
  int lawson_iter = 2000;    // weight iterations for the p = inf minimax
  double lawson_tol = 1e-9;  // stop when gap/value falls below this
  unsigned seed = 0;         // mixed with (label, n, p) to seed perturbations
};

struct ApproxResult {
  TrigPoly poly;
  double value = 0.0;     // ||f - poly|| recomputed by lp_norm on the grid
  bool certified = false; // true only for p = 2 and the p = inf grid minimax
  int starts_used = 0;
  std::vector<double> solver_trace;  // exact error per start, in start order
  double certificate_gap = 0.0;      // p = inf: max|e| minus the weighted-L2 dual value
  double grid_gap = 0.0;  // p = inf: largest jump of f between adjacent nodes,
                          // bounding the distance to the off-grid minimax
};

// Orthogonal projection in the discrete inner product: the degree-n partial
// sum of the grid spectrum. Global optimum of the grid L_2 problem.
ApproxResult best_approx_l2(const PeriodicFn& f, int n, const UniformGrid& g);

// E_n(f)_p on the sample grid for 0 < p <= inf. p = 2 delegates to the exact
// projection; p = inf runs a Lawson minimax with a duality gap certificate;
// 1 <= p < inf descends the smoothed objective sum (|e_j|^2 + eps^2)^{p/2}
// with geometric eps-continuation; p < 1 adds multi-starts (L_2 projection,
// L_1 solution, seeded perturbations of these) and reports an upper bound.
// The result never exceeds the error of the warm start when one is given.
ApproxResult best_approx(const PeriodicFn& f, int n, const QuasiNormSpec& spec,
                         const UniformGrid& g, const SolverBudget& budget = {},
                         const TrigPoly* warm = nullptr);

// Best approximation in the norm ||.||_p + sup_h h^{-alpha} ||Delta_h^r .||_p.
// The sup is handled on a decimated step grid with a smooth-max (temperature
// continuation); the returned value is recomputed with the exact norm on the
// full step grid.
ApproxResult best_approx_holder(const PeriodicFn& f, int n, const HolderSpec& hs,
                                const UniformGrid& g, const SolverBudget& budget = {},
                                const TrigPoly* warm = nullptr);

// Same solver with the mean coefficient pinned to zero.
ApproxResult en_zero(const PeriodicFn& f, int n, const QuasiNormSpec& spec, const UniformGrid& g,
                     const SolverBudget& budget = {}, const TrigPoly* warm = nullptr);

// Solver-free lower bound for the zero-mean error: any zero-mean polynomial of
// degree n is annihilated by the node average over 4n+1 points, so
// ||f~_n||_p <= (4n+1)^{max(1/p-1, 0)} ||f - T||_p. Returns the bound
// (4n+1)^{min(1-1/p, 0)} ||f~_n||_p with the average sampled on lambda_grid.
double en_zero_lower_bound(const PeriodicFn& f, int n, const QuasiNormSpec& spec,
                           const UniformGrid& lambda_grid);

}  // namespace approxlab
