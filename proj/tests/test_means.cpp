#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "approxlab/kernels.hpp"
#include "approxlab/periodic_fn.hpp"
#include "approxlab/spectral.hpp"
#include "approxlab/testfns.hpp"

using namespace approxlab;
using std::complex;

namespace {
TrigPoly poly5() {
  TrigPoly t = TrigPoly::zero(5);
  for (auto& [nu, c] : find_fn("poly5").fn.known_coeffs()) t.set_coeff(nu, c);
  return t;
}
}

TEST_CASE("multiplier tables") {
  auto d = kernel_catalog("dirichlet", 6);
  for (int nu = -6; nu <= 6; ++nu) CHECK(d.multiplier(nu) == 1.0);
  CHECK(d.multiplier(7) == 0.0);

  auto f = kernel_catalog("fejer", 4);
  CHECK(f.multiplier(0) == 1.0);
  CHECK(f.multiplier(1) == doctest::Approx(0.8));
  CHECK(f.multiplier(-4) == doctest::Approx(0.2));

  auto v = kernel_catalog("vp", 7);
  for (int nu = 0; nu <= 4; ++nu) CHECK(v.multiplier(nu) == 1.0);  // flat half
  CHECK(v.multiplier(5) == doctest::Approx(0.75));
  CHECK(v.multiplier(6) == doctest::Approx(0.5));
  CHECK(v.multiplier(7) == doctest::Approx(0.25));

  CHECK_THROWS_AS(kernel_catalog("jackson", 4), std::invalid_argument);
  CHECK_THROWS_AS(kernel_catalog("fejer", -1), std::invalid_argument);
  CHECK(bounded_family(f));
  CHECK(bounded_family(v));
  CHECK_FALSE(bounded_family(d));
}

TEST_CASE("dirichlet mean reproduces polynomials through its degree") {
  auto t = poly5();
  auto g = UniformGrid::of_size(64);
  TrigPoly out = fourier_mean_poly(PeriodicFn::from_poly(t), kernel_catalog("dirichlet", 5), g);
  for (int nu = -5; nu <= 5; ++nu) CHECK(std::abs(out.coeff(nu) - t.coeff(nu)) < 1e-12);
}

TEST_CASE("vp mean reproduces polynomials through half its degree") {
  TrigPoly t = poly5().padded(5);
  // keep only |nu| <= 4: inside the flat part of vp(8)
  t.set_coeff(5, 0.0);
  t.set_coeff(-5, 0.0);
  auto g = UniformGrid::of_size(64);
  TrigPoly out = fourier_mean_poly(PeriodicFn::from_poly(t), kernel_catalog("vp", 8), g);
  for (int nu = -4; nu <= 4; ++nu) CHECK(std::abs(out.coeff(nu) - t.coeff(nu)) < 1e-12);
}

TEST_CASE("fejer mean contracts the first harmonic by n/(n+1)") {
  auto g = UniformGrid::of_size(64);
  for (int n : {1, 4, 9}) {
    auto m = fourier_mean(find_fn("cosx").fn, kernel_catalog("fejer", n), g);
    double want = static_cast<double>(n) / (n + 1);
    for (double x : {0.0, 1.1, 3.0}) {
      CHECK(m(x).real() == doctest::Approx(want * std::cos(x)).epsilon(1e-12));
      CHECK(m(x).imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("fejer kernel is nonnegative, dirichlet is not") {
  auto g = UniformGrid::of_size(512);
  auto fe = sample_poly(kernel_catalog("fejer", 10).as_poly(), g);
  for (int j = 0; j < g.size; ++j) CHECK(fe[j].real() >= -1e-11);
  auto di = sample_poly(kernel_catalog("dirichlet", 10).as_poly(), g);
  double dmin = 1e300;
  for (int j = 0; j < g.size; ++j) dmin = std::min(dmin, di[j].real());
  CHECK(dmin < -1.0);
}

TEST_CASE("operator norms: exact branches and frozen Lebesgue constants") {
  auto g = UniformGrid::of_size(4096);
  auto p1 = QuasiNormSpec::lp(1.0);

  auto fej = operator_norm(kernel_catalog("fejer", 12), p1, g);
  CHECK(fej.exact);
  CHECK(fej.method == "kernel-l1-mass");
  CHECK(fej.value == doctest::Approx(1.0).epsilon(1e-10));  // positive kernel, mean one

  auto d4 = operator_norm(kernel_catalog("dirichlet", 4), p1, g);
  auto d16 = operator_norm(kernel_catalog("dirichlet", 16), p1, g);
  CHECK(d4.value == doctest::Approx(1.880080452453).epsilon(1e-9));
  CHECK(d16.value == doctest::Approx(2.406522256104).epsilon(1e-9));
  CHECK(d16.value > d4.value);  // Lebesgue constants grow like log n

  auto v16 = operator_norm(kernel_catalog("vp", 16), p1, g);
  CHECK(v16.value == doctest::Approx(1.423143866738).epsilon(1e-9));

  auto inf16 = operator_norm(kernel_catalog("dirichlet", 16), QuasiNormSpec::linf(), g);
  CHECK(inf16.value == doctest::Approx(d16.value).epsilon(1e-12));

  auto l2 = operator_norm(kernel_catalog("fejer", 12), QuasiNormSpec::lp(2.0), g);
  CHECK(l2.exact);
  CHECK(l2.method == "max-multiplier");
  CHECK(l2.value == 1.0);

  auto lb = operator_norm(kernel_catalog("fejer", 6), QuasiNormSpec::lp(0.5), g);
  CHECK_FALSE(lb.exact);
  CHECK(lb.method == "probe-lower-bound");
  CHECK(lb.value >= 1.0 - 1e-12);
}

TEST_CASE("family mean with dirichlet recovers polynomial coefficients at any offset") {
  auto t = poly5();
  auto f = PeriodicFn::from_poly(t);
  auto k = kernel_catalog("dirichlet", 5);
  for (double lambda : {0.0, 0.377, 2.11}) {
    TrigPoly out = family_mean_poly(f, k, lambda);
    for (int nu = -5; nu <= 5; ++nu) CHECK(std::abs(out.coeff(nu) - t.coeff(nu)) < 1e-11);
  }
}

TEST_CASE("family mean of the constant is the constant") {
  auto f = PeriodicFn::from_real([](double) { return 1.0; }, "one");
  for (const char* name : {"dirichlet", "fejer", "vp"}) {
    TrigPoly out = family_mean_poly(f, kernel_catalog(name, 4), 0.7);
    CHECK(std::abs(out.coeff(0) - complex<double>(1, 0)) < 1e-12);
    for (int nu = 1; nu <= 4; ++nu) {
      CHECK(std::abs(out.coeff(nu)) < 1e-12);
      CHECK(std::abs(out.coeff(-nu)) < 1e-12);
    }
  }
}

TEST_CASE("difference of a family mean goes through the step multiplier") {
  auto f = triangle_wave().fn;
  TrigPoly L = family_mean_poly(f, kernel_catalog("fejer", 6), 0.3);
  double h = 0.21;
  int r = 2;
  TrigPoly dL = poly_difference(L, h, r);
  for (double x : {0.4, 2.0, 5.5}) {
    complex<double> direct = L.eval(x) - 2.0 * L.eval(x + h) + L.eval(x + 2 * h);
    CHECK(std::abs(dL.eval(x) - direct) < 1e-12);
  }
}

TEST_CASE("node average annihilates frequencies off the lattice") {
  int n = 2;  // q = 9
  auto mu3 = PeriodicFn::from_poly([] {
    TrigPoly t = TrigPoly::zero(3);
    t.set_coeff(3, 1.0);
    return t;
  }());
  auto td = tilde(mu3, n);
  for (double l : {0.0, 0.5, 1.7}) CHECK(std::abs(td(l)) < 1e-13);

  // mu = 9 = q survives with full weight e^{i 9 lambda}
  auto mu9eval = [](double x) { return std::polar(1.0, 9.0 * x); };
  auto t9 = tilde(PeriodicFn(mu9eval, "e9", false), n);
  for (double l : {0.0, 0.5}) CHECK(std::abs(t9(l) - std::polar(1.0, 9.0 * l)) < 1e-12);

  // polynomials through degree n reduce to their mean value
  auto tp = tilde(PeriodicFn::from_poly(poly5()), 5);
  auto c0 = poly5().coeff(0);
  for (double l : {0.1, 3.0}) CHECK(std::abs(tp(l) - c0) < 1e-12);
}
