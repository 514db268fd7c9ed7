#pragma once

#include <vector>

#include "grid.hpp"
#include "periodic_fn.hpp"
#include "quasi_norm.hpp"
#include "trig_poly.hpp"

namespace approxlab {

// Parameters of the Holder-type norm ||f||_p + sup_h ||Delta_h^r f||_p / h^alpha.
struct HolderSpec {
  QuasiNormSpec norm;
  int r = 1;
  double alpha = 1.0;
  double h_min = two_pi * 1e-4;
  double h_max = two_pi;
  int points_per_decade = 32;

  // Throws std::invalid_argument unless r >= 1 and 0 < alpha <= r. The upper
  // constraint is not cosmetic: for alpha > r the seminorm scale admits no
  // nontrivial polynomial approximation (errors are driven to infinity).
  void validate() const;
  HGrid hgrid() const;
};

// Result of a sup over the step grid.
struct HSweep {
  Eigen::ArrayXd h;       // step values swept
  Eigen::ArrayXd values;  // quantity at each step
  double sup = 0.0;
  int argmax = 0;          // ties resolved toward the smaller h
  bool left_edge_sup = false;  // max sits at the smallest step: true sup may be at h -> 0
  double tail_bound = 0.0;     // upper bound for the part beyond h_max, where applicable
};

// ||Delta_h^k f||_p for every h in the step grid.
Eigen::ArrayXd diff_norm_sweep(const PeriodicFn& f, int k, const QuasiNormSpec& spec,
                               const UniformGrid& g, const HGrid& hg = HGrid::shared());

// omega_k(f, t)_p as a discretized sup over the shared geometric step grid
// truncated at t. One global grid + prefix maxima make monotonicity in t exact.
class OmegaSweep {
 public:
  OmegaSweep(const PeriodicFn& f, int k, const QuasiNormSpec& spec, const UniformGrid& g,
             const HGrid& hg = HGrid::shared());
  OmegaSweep(Eigen::ArrayXd raw_norms, const HGrid& hg);

  // omega_k(f, t); throws if t is below the smallest grid step (advising a finer grid).
  double at(double t) const;
  // theta_{k,alpha}(f, delta) = sup_{h <= delta} omega_k(f, h)/h^alpha on the grid.
  HSweep theta_sweep(double alpha, double delta) const;
  double theta(double alpha, double delta) const;

  const HGrid& grid() const { return hg_; }
  const Eigen::ArrayXd& raw() const { return raw_; }
  const Eigen::ArrayXd& prefix() const { return prefix_; }

 private:
  HGrid hg_;
  Eigen::ArrayXd raw_, prefix_;
};

double omega(const PeriodicFn& f, int k, double t, const QuasiNormSpec& spec,
             const UniformGrid& g, const HGrid& hg = HGrid::shared());
double theta(const PeriodicFn& f, int k, double alpha, double delta, const QuasiNormSpec& spec,
             const UniformGrid& g, const HGrid& hg = HGrid::shared());

// Table of ||Delta_{d}^k Delta_{h}^r f||_p over the step grid: rows indexed by
// the outer-difference step h, columns by the inner step d. Built once, it
// serves psi at every cutoff (and omega of the differenced function).
class NestedDiffTable {
 public:
  NestedDiffTable(const PeriodicFn& f, int k, int r, const QuasiNormSpec& spec,
                  const UniformGrid& g, const HGrid& hg = HGrid::shared());

  const HGrid& grid() const { return hg_; }
  const Eigen::ArrayXXd& table() const { return v_; }
  // omega_k(Delta_h^r f, t) for h = grid[i].
  double omega_row(int i, double t) const;
  // psi_{k,r,alpha}(f, delta) = sup_{h <= delta} omega_k(Delta_h^r f, delta)/h^alpha.
  double psi(double alpha, double delta) const;
  HSweep psi_sweep(double alpha) const;  // psi at every delta of the grid

 private:
  HGrid hg_;
  Eigen::ArrayXXd v_;         // raw norms
  Eigen::ArrayXXd rowprefix_; // prefix max along columns within each row
};

// One-shot psi_{k,r,alpha}(f, delta); requires k >= 1 and 0 < alpha <= r.
double psi(const PeriodicFn& f, int k, int r, double alpha, double delta,
           const QuasiNormSpec& spec, const UniformGrid& g, const HGrid& hg = HGrid::shared());

// sup_h ||Delta_h^r f||_p / h^alpha over the spec's step grid. tail_bound
// reports 2^{r/p1} ||f||_p / h_max^alpha, an upper bound for the discarded
// h > h_max range, so the truncation cannot silently lose the sup.
HSweep holder_seminorm(const PeriodicFn& f, const HolderSpec& hs, const UniformGrid& g);
double holder_norm(const PeriodicFn& f, const HolderSpec& hs, const UniformGrid& g);

// Holder-type error of a family of approximants indexed by the lambda grid:
// ||f - A_lambda||_pbar + sup_h h^{-alpha} ||Delta_h^r (f - A_lambda)||_pbar,
// where ||.||_pbar takes the L_p norm in x for each lambda, then over lambda.
struct FamilyHolderError {
  double value = 0.0;
  double lp_part = 0.0;
  double seminorm = 0.0;
  HSweep sweep;
};
FamilyHolderError family_holder_error(const PeriodicFn& f, const std::vector<TrigPoly>& per_lambda,
                                      const HolderSpec& hs, const UniformGrid& xg,
                                      const UniformGrid& lg);

// Grid approximation of (int_0^delta (omega(t)/t^alpha)^q dt/t)^{1/q} using the
// sweep's own geometric grid (log-uniform weights).
double modulus_tail_integral(const OmegaSweep& sweep, double alpha, double q, double delta);

}  // namespace approxlab
