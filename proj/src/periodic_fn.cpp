#include "approxlab/periodic_fn.hpp"

#include <cmath>
#include <stdexcept>

namespace approxlab {

PeriodicFn PeriodicFn::from_poly(const TrigPoly& T, std::string label) {
  PeriodicFn f([T](double x) { return T.eval(x); }, std::move(label), T.is_real());
  std::vector<std::pair<int, std::complex<double>>> cs;
  for (int nu = -T.degree; nu <= T.degree; ++nu) {
    std::complex<double> c = T.coeff(nu);
    if (std::abs(c) > 0) cs.emplace_back(nu, c);
  }
  f.coeffs_ = std::move(cs);
  return f;
}

PeriodicFn PeriodicFn::from_real(std::function<double(double)> e, std::string label) {
  return PeriodicFn([e = std::move(e)](double x) { return std::complex<double>(e(x), 0.0); },
                    std::move(label), true);
}

const std::vector<std::pair<int, std::complex<double>>>& PeriodicFn::known_coeffs() const {
  if (!coeffs_) throw std::logic_error("PeriodicFn: no exact coefficients attached (" + label_ + ")");
  return *coeffs_;
}

PeriodicFn PeriodicFn::shifted(double s) const {
  PeriodicFn g([e = eval_, s](double x) { return e(x + s); }, label_ + "<<" + std::to_string(s), real_);
  if (coeffs_) {
    auto cs = *coeffs_;
    for (auto& [nu, c] : cs) c *= std::polar(1.0, nu * s);
    g.coeffs_ = std::move(cs);
  }
  return g;
}

PeriodicFn PeriodicFn::scaled(std::complex<double> c) const {
  bool still_real = real_ && c.imag() == 0.0;
  PeriodicFn g([e = eval_, c](double x) { return c * e(x); }, label_ + "*c", still_real);
  if (coeffs_) {
    auto cs = *coeffs_;
    for (auto& [nu, cv] : cs) cv *= c;
    g.coeffs_ = std::move(cs);
  }
  return g;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

PeriodicFn finite_difference(const PeriodicFn& f, double h, int k) {
  if (k < 1) throw std::invalid_argument("finite_difference: order must be >= 1");
  std::vector<double> w(k + 1);
  for (int v = 0; v <= k; ++v) w[v] = (v % 2 ? -1.0 : 1.0) * binomial(k, v);
  auto eval = [f, h, k, w](double x) {
    std::complex<double> acc = 0.0;
    for (int v = 0; v <= k; ++v) acc += w[v] * f(x + v * h);
    return acc;
  };
  return PeriodicFn(eval, "D[" + f.label() + ";h=" + std::to_string(h) + ",k=" + std::to_string(k) + "]",
                    f.real_valued());
}

PeriodicFn residual(const PeriodicFn& f, const TrigPoly& T) {
  return PeriodicFn([f, T](double x) { return f(x) - T.eval(x); }, f.label() + "-T",
                    f.real_valued() && T.is_real());
}

}  // namespace approxlab
