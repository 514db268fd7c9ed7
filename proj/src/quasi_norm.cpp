#include "approxlab/quasi_norm.hpp"

#include <cmath>
#include <stdexcept>

namespace approxlab {

QuasiNormSpec QuasiNormSpec::lp(double p) {
  if (!(p > 0))
    throw std::invalid_argument("QuasiNormSpec: p must be positive, got " + std::to_string(p));
  return QuasiNormSpec{p};
}

namespace {

void check_finite(double a, int j) {
  if (!std::isfinite(a))
    throw std::domain_error("lp_norm: non-finite sample at node " + std::to_string(j));
}

template <typename Abs>
double norm_impl(int m, Abs abs_at, const QuasiNormSpec& spec) {
  if (m < 1) throw std::invalid_argument("lp_norm: empty sample vector");
  if (spec.is_inf()) {
    double mx = 0.0;
    for (int j = 0; j < m; ++j) {
      double a = abs_at(j);
      check_finite(a, j);
      if (a > mx) mx = a;
    }
    return mx;
  }
  double p = spec.p;
  double acc = 0.0;
  if (p == 2.0) {
    for (int j = 0; j < m; ++j) {
      double a = abs_at(j);
      check_finite(a, j);
      acc += a * a;
    }
  } else if (p == 1.0) {
    for (int j = 0; j < m; ++j) {
      double a = abs_at(j);
      check_finite(a, j);
      acc += a;
    }
  } else if (p == 0.5) {
    for (int j = 0; j < m; ++j) {
      double a = abs_at(j);
      check_finite(a, j);
      acc += std::sqrt(a);
    }
  } else {
    for (int j = 0; j < m; ++j) {
      double a = abs_at(j);
      check_finite(a, j);
      acc += std::pow(a, p);
    }
  }
  return std::pow(acc / m, 1.0 / p);
}

}  // namespace

double lp_norm(const Eigen::ArrayXcd& samples, const QuasiNormSpec& spec) {
  return norm_impl(static_cast<int>(samples.size()),
                   [&](int j) { return std::abs(samples[j]); }, spec);
}

double lp_norm(const Eigen::ArrayXd& samples, const QuasiNormSpec& spec) {
  return norm_impl(static_cast<int>(samples.size()),
                   [&](int j) { return std::abs(samples[j]); }, spec);
}

double lp_norm(const PeriodicFn& f, const QuasiNormSpec& spec, const UniformGrid& g) {
  Eigen::ArrayXcd s(g.size);
  for (int j = 0; j < g.size; ++j) s[j] = f(g.node(j));
  return lp_norm(s, spec);
}

double averaged_lp_norm(const std::function<std::complex<double>(double, double)>& F,
                        const QuasiNormSpec& spec, const UniformGrid& xgrid,
                        const UniformGrid& lgrid) {
  Eigen::ArrayXd inner(lgrid.size);
  Eigen::ArrayXcd row(xgrid.size);
  for (int l = 0; l < lgrid.size; ++l) {
    double lam = lgrid.node(l);
    for (int j = 0; j < xgrid.size; ++j) row[j] = F(xgrid.node(j), lam);
    inner[l] = lp_norm(row, spec);
  }
  return lp_norm(inner, spec);
}

}  // namespace approxlab
