#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trig_poly.hpp"

namespace approxlab {

// A 2*pi-periodic function carried by its evaluator. Polynomial-backed
// instances also carry exact sparse coefficients. Differences and shifts are
// composed lazily on the evaluator; nothing here resamples or interpolates.
class PeriodicFn {
 public:
  using Eval = std::function<std::complex<double>(double)>;

  PeriodicFn() = default;
  PeriodicFn(Eval e, std::string label, bool real_valued = true)
      : eval_(std::move(e)), label_(std::move(label)), real_(real_valued) {}

  static PeriodicFn from_poly(const TrigPoly& T, std::string label = "poly");
  // Real-valued function given as a plain double evaluator.
  static PeriodicFn from_real(std::function<double(double)> e, std::string label);

  std::complex<double> operator()(double x) const { return eval_(x); }
  const std::string& label() const { return label_; }
  bool real_valued() const { return real_; }
  bool has_coeffs() const { return coeffs_.has_value(); }
  const std::vector<std::pair<int, std::complex<double>>>& known_coeffs() const;

  // x -> f(x + s)
  PeriodicFn shifted(double s) const;
  PeriodicFn scaled(std::complex<double> c) const;

 private:
  Eval eval_;
  std::string label_;
  bool real_ = true;
  std::optional<std::vector<std::pair<int, std::complex<double>>>> coeffs_;
};

// Forward difference Delta_h^k f(x) = sum_{v=0}^{k} (-1)^v binom(k,v) f(x + v h),
// composed lazily.
PeriodicFn finite_difference(const PeriodicFn& f, double h, int k);

// Residual f - T as a lazy function.
PeriodicFn residual(const PeriodicFn& f, const TrigPoly& T);

double binomial(int n, int k);

}  // namespace approxlab
