#include "approxlab/kernels.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "approxlab/spectral.hpp"

namespace approxlab {

TrigPoly Kernel::as_poly() const {
  TrigPoly t = TrigPoly::zero(degree);
  for (int nu = -degree; nu <= degree; ++nu) t.set_coeff(nu, multiplier(nu));
  return t;
}

Kernel kernel_catalog(const std::string& name, int n) {
  if (n < 0) throw std::invalid_argument("kernel_catalog: degree must be >= 0");
  Kernel k;
  k.name = name;
  k.degree = n;
  k.coeffs.resize(2 * n + 1);
  for (int nu = -n; nu <= n; ++nu) {
    double a;
    double anu = std::abs(nu);
    if (name == "dirichlet") {
      a = 1.0;
    } else if (name == "fejer") {
      a = 1.0 - anu / (n + 1);
    } else if (name == "vp") {
      a = std::min(1.0, 2.0 * (1.0 - anu / (n + 1)));
    } else {
      throw std::invalid_argument("kernel_catalog: unknown kernel '" + name +
                                  "' (have dirichlet, fejer, vp)");
    }
    k.coeffs[nu + n] = a;
  }
  return k;
}

bool bounded_family(const Kernel& k) { return k.name == "fejer" || k.name == "vp"; }

TrigPoly fourier_mean_poly(const PeriodicFn& f, const Kernel& k, const UniformGrid& g) {
  TrigPoly c = spectral_coeffs(f, k.degree, g);
  for (int nu = -k.degree; nu <= k.degree; ++nu)
    c.coeffs[nu + k.degree] *= k.multiplier(nu);
  return c;
}

PeriodicFn fourier_mean(const PeriodicFn& f, const Kernel& k, const UniformGrid& g) {
  return PeriodicFn::from_poly(fourier_mean_poly(f, k, g), k.name + "[" + f.label() + "]");
}

TrigPoly family_mean_poly(const PeriodicFn& f, const Kernel& k, double lambda) {
  int n = k.degree;
  int q = 4 * n + 1;
  // c_nu = a_nu * (1/q) sum_j f(t_j + lambda) e^{-i nu (t_j + lambda)}
  Eigen::ArrayXcd vals(q);
  for (int j = 0; j < q; ++j) vals[j] = f(two_pi * j / q + lambda);
  TrigPoly out = TrigPoly::zero(n);
  for (int nu = -n; nu <= n; ++nu) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < q; ++j) {
      double t = two_pi * j / q + lambda;
      acc += vals[j] * std::polar(1.0, -nu * t);
    }
    out.coeffs[nu + n] = k.multiplier(nu) * acc / static_cast<double>(q);
  }
  return out;
}

PeriodicFn family_mean(const PeriodicFn& f, const Kernel& k, double lambda) {
  return PeriodicFn::from_poly(family_mean_poly(f, k, lambda),
                               k.name + "~[" + f.label() + ";l=" + std::to_string(lambda) + "]");
}

PeriodicFn tilde(const PeriodicFn& f, int n) {
  if (n < 0) throw std::invalid_argument("tilde: degree must be >= 0");
  int q = 4 * n + 1;
  auto eval = [f, q](double lambda) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < q; ++j) acc += f(two_pi * j / q + lambda);
    return acc / static_cast<double>(q);
  };
  return PeriodicFn(eval, "avg" + std::to_string(q) + "[" + f.label() + "]", f.real_valued());
}

OperatorNormResult operator_norm(const Kernel& k, const QuasiNormSpec& spec, const UniformGrid& g) {
  OperatorNormResult r;
  if (spec.is_inf() || spec.p == 1.0) {
    // Convolution against the normalized kernel: operator norm is the kernel's
    // L_1 mass in the normalized measure.
    r.value = lp_norm(PeriodicFn::from_poly(k.as_poly(), k.name), QuasiNormSpec::lp(1.0), g);
    r.exact = true;
    r.method = "kernel-l1-mass";
    return r;
  }
  if (spec.p == 2.0) {
    r.value = k.coeffs.abs().maxCoeff();
    r.exact = true;
    r.method = "max-multiplier";
    return r;
  }
  // Lower bound: best ratio over a probe family (pure exponentials realize
  // |a_nu| in every L_p; random polynomials can only improve the bound).
  double best = k.coeffs.abs().maxCoeff();
  std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ k.degree);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 24; ++trial) {
    TrigPoly t = TrigPoly::zero(k.degree);
    for (int nu = 0; nu <= k.degree; ++nu) {
      std::complex<double> c(gauss(rng), nu == 0 ? 0.0 : gauss(rng));
      t.set_coeff(nu, c);
      t.set_coeff(-nu, std::conj(c));
    }
    double denom = lp_norm(sample_poly(t, g), spec);
    if (denom < 1e-14) continue;
    TrigPoly lt = t;
    for (int nu = -k.degree; nu <= k.degree; ++nu) lt.coeffs[nu + k.degree] *= k.multiplier(nu);
    double ratio = lp_norm(sample_poly(lt, g), spec) / denom;
    if (ratio > best) best = ratio;
  }
  r.value = best;
  r.exact = false;
  r.method = "probe-lower-bound";
  return r;
}

}  // namespace approxlab
