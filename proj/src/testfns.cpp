#include "approxlab/testfns.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

namespace approxlab {

namespace {

const double pi = two_pi / 2;

double wrap(double x) {
  double u = std::fmod(x, two_pi);
  if (u < 0) u += two_pi;
  return u;
}

double square_wave(double x) {
  double u = wrap(x);
  if (u == 0.0 || u == pi) return 0.0;
  return u < pi ? pi / 4 : -pi / 4;
}

// sum -cos((2v+1)x)/(2v+1)^2: even triangular profile, -pi^2/8 at 0, +pi^2/8 at pi.
double tri_profile(double x) {
  double u = wrap(x);
  if (u > pi) u = two_pi - u;
  return (pi / 4) * (u - pi / 2);
}

// sum -sin((2v+1)x)/(2v+1)^3: odd piecewise-quadratic profile.
double quad_profile(double x) {
  double u = wrap(x);
  if (u <= pi) return -(pi / 8) * u * (pi - u);
  double v = u - pi;
  return (pi / 8) * v * (pi - v);
}

}  // namespace

PeriodicFn odd_harmonic_partial_sum(int r, int N) {
  if (r < 1 || N < 1) throw std::invalid_argument("odd_harmonic_partial_sum: need r >= 1, N >= 1");
  double phase = -pi * (r - 1) / 2;
  auto eval = [r, N, phase](double x) {
    double acc = 0.0;
    for (int v = N - 1; v >= 0; --v) {
      double m = 2.0 * v + 1.0;
      acc += std::sin(m * x + phase) / std::pow(m, r);
    }
    return acc;
  };
  return PeriodicFn::from_real(eval, "oddsum(r=" + std::to_string(r) + ",N=" + std::to_string(N) + ")");
}

double odd_harmonic_tail_bound(int r, int N) {
  if (r < 2) return std::numeric_limits<double>::infinity();
  return std::pow(2.0 * N, 1.0 - r) / (2.0 * (r - 1));
}

CatalogEntry odd_harmonic(int r, int terms) {
  CatalogEntry e;
  if (r == 1) {
    e.fn = PeriodicFn::from_real(square_wave, "square");
    e.known_rates = {{"omega:k=1,p=0.5", 2.0}, {"omega:k=1,p=1", 1.0}, {"omega:k=1,p=2", 0.5},
                     {"omega:k=2,p=0.5", 2.0}};
    e.notes = "square wave, jump size pi/2 at 0 and pi; omega_1(f,h)_p = (h/pi)^{1/p} (pi/2) for h <= pi";
  } else if (r == 2) {
    e.fn = PeriodicFn::from_real(tri_profile, "odd2");
    e.known_rates = {{"omega:k=2,p=1", 2.0}, {"omega:k=2,p=2", 1.5}, {"omega:k=1,p=inf", 1.0}};
    e.notes = "triangular profile, |slope| = pi/4; omega_2 decays like h^{1+1/p}";
  } else if (r == 3) {
    e.fn = PeriodicFn::from_real(quad_profile, "odd3");
    e.known_rates = {{"omega:k=3,p=2", 2.5}, {"omega:k=2,p=inf", 2.0}};
    e.notes = "piecewise quadratic, C^1 with Lipschitz derivative";
  } else {
    e.fn = odd_harmonic_partial_sum(r, terms);
    e.known_rates = {};
    e.notes = "truncated series, sup-norm tail <= " + std::to_string(odd_harmonic_tail_bound(r, terms));
  }
  return e;
}

CatalogEntry triangle_wave() {
  CatalogEntry e;
  auto eval = [](double x) {
    double u = wrap(x);
    return u < pi ? u : two_pi - u;
  };
  e.fn = PeriodicFn::from_real(eval, "triangle");
  e.known_rates = {{"omega:k=1,p=inf", 1.0}, {"omega:k=1,p=2", 1.0}, {"omega:k=2,p=2", 1.5},
                   {"omega:k=2,p=0.5", 3.0}};
  e.notes = "1-Lipschitz, max pi at x = pi; omega_1(f,h)_inf = h for h <= pi";
  return e;
}

namespace {

double staircase_up(int n, double y) {  // y in [0, 1]
  if (y >= 1.0) return 1.0;
  if (y <= 0.0) return 0.0;
  int k = static_cast<int>(std::floor(n * y));
  if (k > n - 1) k = n - 1;
  double plateau = static_cast<double>(k) / n;
  double ramp_start = (k + 1.0) / n - 1.0 / (static_cast<double>(n) * n);
  if (y < ramp_start) return plateau;
  return plateau + (y - ramp_start) * n;
}

}  // namespace

CatalogEntry ramp_phi(int n) {
  if (n < 1) throw std::invalid_argument("ramp_phi: n must be >= 1");
  CatalogEntry e;
  auto eval = [n](double x) {
    double y = wrap(x) / pi;  // [0, 2)
    double g = y <= 1.0 ? staircase_up(n, y) : 1.0 - staircase_up(n, y - 1.0);
    return pi * g;
  };
  e.fn = PeriodicFn::from_real(eval, "ramp" + std::to_string(n));
  e.notes = "staircase approximant of triangle; derivative n on ramps of total measure 2 pi/n";
  return e;
}

CatalogEntry lacunary(double gamma, int levels) {
  if (!(gamma > 0)) throw std::invalid_argument("lacunary: gamma must be positive");
  CatalogEntry e;
  auto eval = [gamma, levels](double x) {
    double acc = 0.0;
    for (int v = levels; v >= 0; --v)
      acc += std::pow(2.0, -gamma * v) * std::cos(std::ldexp(1.0, v) * x);
    return acc;
  };
  char name[32];
  std::snprintf(name, sizeof(name), "lacunary%02d", static_cast<int>(std::round(gamma * 10)));
  e.fn = PeriodicFn::from_real(eval, name);
  for (int k = 1; k <= 3; ++k)
    if (gamma < k) {
      e.known_rates["omega:k=" + std::to_string(k) + ",p=2"] = gamma;
      e.known_rates["omega:k=" + std::to_string(k) + ",p=inf"] = gamma;
    }
  e.notes = "dyadic-frequency cosine series, smoothness exponent gamma on all scales above 2^-levels";
  return e;
}

namespace {

CatalogEntry const_entry() {
  CatalogEntry e;
  e.fn = PeriodicFn::from_real([](double) { return 1.0; }, "const");
  e.notes = "constant 1; every difference vanishes";
  return e;
}

CatalogEntry cosx_entry() {
  TrigPoly t = TrigPoly::zero(1);
  t.set_coeff(1, 0.5);
  t.set_coeff(-1, 0.5);
  CatalogEntry e;
  e.fn = PeriodicFn::from_poly(t, "cosx");
  e.known_rates = {{"omega:k=1,p=2", 1.0}};
  e.notes = "cos x with exact spectrum";
  return e;
}

CatalogEntry sinx_entry() {
  TrigPoly t = TrigPoly::zero(1);
  t.set_coeff(1, std::complex<double>(0, -0.5));
  t.set_coeff(-1, std::complex<double>(0, 0.5));
  CatalogEntry e;
  e.fn = PeriodicFn::from_poly(t, "sinx");
  e.notes = "sin x with exact spectrum";
  return e;
}

CatalogEntry expix_entry() {
  TrigPoly t = TrigPoly::zero(1);
  t.set_coeff(1, 1.0);
  CatalogEntry e;
  e.fn = PeriodicFn::from_poly(t, "expix");
  e.notes = "e^{ix}: complex-valued, |Delta_h^k| = (2 sin(h/2))^k everywhere";
  return e;
}

CatalogEntry poly5_entry() {
  std::mt19937_64 rng(0xA17AB5EDDEADBEEFull);
  std::normal_distribution<double> gauss;
  TrigPoly t = TrigPoly::zero(5);
  t.set_coeff(0, gauss(rng));
  for (int nu = 1; nu <= 5; ++nu) {
    std::complex<double> c(gauss(rng), gauss(rng));
    c *= std::pow(2.0, -0.5 * nu);
    t.set_coeff(nu, c);
    t.set_coeff(-nu, std::conj(c));
  }
  CatalogEntry e;
  e.fn = PeriodicFn::from_poly(t, "poly5");
  e.notes = "fixed seeded real trig polynomial of degree 5";
  return e;
}

}  // namespace

std::vector<CatalogEntry> smooth_catalog() {
  return {const_entry(), cosx_entry(), poly5_entry(), lacunary(0.5)};
}

namespace {

const std::map<std::string, CatalogEntry>& registry() {
  static const std::map<std::string, CatalogEntry> reg = [] {
    std::map<std::string, CatalogEntry> m;
    auto put = [&m](CatalogEntry e) { m.emplace(e.fn.label(), std::move(e)); };
    put(const_entry());
    put(cosx_entry());
    put(sinx_entry());
    put(expix_entry());
    put(poly5_entry());
    put(triangle_wave());
    put(odd_harmonic(1));
    put(odd_harmonic(2));
    put(odd_harmonic(3));
    put(lacunary(0.5));
    put(lacunary(0.8));
    put(ramp_phi(8));
    put(ramp_phi(16));
    return m;
  }();
  return reg;
}

}  // namespace

const CatalogEntry& find_fn(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::string names;
    for (const auto& [k, v] : reg) names += (names.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown function '" + name + "'; available: " + names);
  }
  return it->second;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

}  // namespace approxlab
