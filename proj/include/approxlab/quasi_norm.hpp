#pragma once

#include <functional>
#include <limits>

#include "grid.hpp"
#include "periodic_fn.hpp"

namespace approxlab {

// L_p quasi-norm parameters, 0 < p <= inf. p1 = min(p, 1) is the exponent of
// the p-triangle inequality ||f+g||^p1 <= ||f||^p1 + ||g||^p1.
struct QuasiNormSpec {
  double p = 2.0;

  double p1() const { return p < 1.0 ? p : 1.0; }
  bool is_inf() const { return std::isinf(p); }
  static QuasiNormSpec lp(double p);  // throws unless p > 0
  static QuasiNormSpec linf() { return QuasiNormSpec{std::numeric_limits<double>::infinity()}; }
};

// Normalized-measure norm ((1/M) sum |f_j|^p)^{1/p}; max for p = inf.
// Non-finite samples raise std::domain_error naming the offending node.
double lp_norm(const Eigen::ArrayXcd& samples, const QuasiNormSpec& spec);
double lp_norm(const Eigen::ArrayXd& samples, const QuasiNormSpec& spec);
double lp_norm(const PeriodicFn& f, const QuasiNormSpec& spec, const UniformGrid& g);

// Mixed norm || ||F(.,lambda)||_{p,x} ||_{p,lambda}: inner norm in x for each
// lambda node, then the same p-mean over lambda (max-max for p = inf).
double averaged_lp_norm(const std::function<std::complex<double>(double, double)>& F,
                        const QuasiNormSpec& spec, const UniformGrid& xgrid,
                        const UniformGrid& lgrid);

}  // namespace approxlab
