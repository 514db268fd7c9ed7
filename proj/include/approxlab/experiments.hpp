#pragma once

#include <string>
#include <utility>
#include <vector>

#include "approx.hpp"
#include "report.hpp"

namespace approxlab {

// Shared knobs of the verification suites. Empty vectors mean "use the
// suite's default". grid_m is the measurement grid; solver grids are at
// least solver_m and grow with the degree.
struct RunConfig {
  std::vector<std::string> fns;
  double p = 2.0;
  int r = 1;
  double alpha = 0.5;
  int k = 1;
  std::string kernel = "fejer";
  std::vector<int> n_range;
  int grid_m = 2048;
  int solver_m = 512;
  int lambda_points = 32;
  int trials = 50;
  unsigned seed = 1;
  SolverBudget budget;
};

// Each suite measures one cluster of two-sided estimates and returns a
// Report: rows with the raw numbers, ratio statistics, and named verdicts.
// Gates are calibrated so that a correct implementation passes with margin
// while a wrong constant or a broken ordering fails; one-sided inequalities
// get absolute-constant gates, equivalences get spread and trend gates.

// E_n(f)_p against omega_k(f, 1/n)_p over the degree range: bounded,
// non-trending ratios per function.
Report verify_jackson(const RunConfig& cfg);

// h^r ||T^{(r)}||_p against ||Delta_h^r T||_p for seeded polynomials of the
// given degrees, h <= pi/n: the ratio spread must not grow with n.
Report verify_stechkin_nikolskii(const RunConfig& cfg);

// Holder-error E_n(f)_H against theta/psi majorants (direct) and against
// dyadic partial sums of Holder errors (inverse).
Report verify_direct_inverse_holder(const RunConfig& cfg);

// n^alpha E_n(f)_p <= C E_n(f)_H <= C'(n^alpha E_n(f)_p + truncated tail sum).
Report verify_sandwich(const RunConfig& cfg);

// Triangle wave at p < 1: the L_p error of the solver polynomials collapses
// while the truncated H^{1,1} seminorm of the residual persists; at p >= 2
// the control seminorm decays.
Report counterexample_h11(const RunConfig& cfg);

// Kernel means: error in the Holder norm against the modulus-based majorant
// (fixed kernel, p >= 1), the family (lambda-averaged) version for p < 1,
// the theta form, and the divergence ratio for a smooth companion function.
Report verify_strong_converse(const RunConfig& cfg);

// n^{1-1/p} sup_h ||(Delta_h^r f)~_n||_p / h^alpha below C E_n(f)_H, 0 < p <= 1,
// plus the two-sided bracket for the zero-mean error via the node average.
Report verify_pr2_lower_bound(const RunConfig& cfg);

// Tail integral (int_0^delta (omega_{r+k}(t)/t^alpha)^{p1} dt/t)^{1/p1}
// against omega_{r+k}(delta)/delta^alpha (hypothesis gauge) and psi (the
// equivalence it implies).
Report verify_integral_condition(const RunConfig& cfg);

// Pointwise modulus inequalities on the catalog plus seeded polynomials:
// order reduction, step scaling, theta monotonicity and scaling, the
// psi/theta sandwich, and the p1-triangle inequality.
Report verify_modulus_properties(const RunConfig& cfg);

// Log-log slope of omega_k(f, h)_p over h in [1e-3, 1e-1] against the
// catalog's expected exponents.
Report rate_scan(const RunConfig& cfg);

using SuiteFn = Report (*)(const RunConfig&);
// Stable name -> suite table driving the CLI and the acceptance runner.
const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();

}  // namespace approxlab
