#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "approxlab/periodic_fn.hpp"
#include "approxlab/spectral.hpp"
#include "approxlab/testfns.hpp"
#include "approxlab/trig_poly.hpp"

using namespace approxlab;
using std::complex;

namespace {
PeriodicFn cosfn() { return find_fn("cosx").fn; }
}

TEST_CASE("sample hits the grid nodes") {
  auto g = UniformGrid::of_size(8);
  auto s = sample(cosfn(), g);
  for (int j = 0; j < 8; ++j) {
    CHECK(std::abs(s[j] - std::cos(two_pi * j / 8)) < 1e-12);
  }
}

TEST_CASE("spectral_coeffs recovers the cosine spectrum") {
  auto g = UniformGrid::of_size(64);
  TrigPoly c = spectral_coeffs(cosfn(), 2, g);
  CHECK(c.degree == 2);
  CHECK(std::abs(c.coeff(1) - complex<double>(0.5, 0)) < 1e-12);
  CHECK(std::abs(c.coeff(-1) - complex<double>(0.5, 0)) < 1e-12);
  CHECK(std::abs(c.coeff(0)) < 1e-12);
  CHECK(std::abs(c.coeff(2)) < 1e-12);
  CHECK(std::abs(c.coeff(-2)) < 1e-12);
}

TEST_CASE("spectral_coeffs rejects undersized grids") {
  auto g = UniformGrid::of_size(8);
  CHECK_THROWS_AS(spectral_coeffs(cosfn(), 4, g), std::invalid_argument);
}

TEST_CASE("spectral_coeffs is exact on polynomials below the aliasing bound") {
  TrigPoly t = TrigPoly::zero(5);
  t.set_coeff(0, 0.3);
  t.set_coeff(3, complex<double>(0.2, -0.7));
  t.set_coeff(-3, complex<double>(0.2, 0.7));
  t.set_coeff(5, complex<double>(-1.0, 0.25));
  t.set_coeff(-5, complex<double>(-1.0, -0.25));
  auto f = PeriodicFn::from_poly(t);
  auto g = UniformGrid::of_size(64);
  TrigPoly c = spectral_coeffs(f, 5, g);
  for (int nu = -5; nu <= 5; ++nu) CHECK(std::abs(c.coeff(nu) - t.coeff(nu)) < 1e-12);
}

TEST_CASE("real functions give conjugate-symmetric coefficients") {
  auto g = UniformGrid::of_size(256);
  TrigPoly c = spectral_coeffs(triangle_wave().fn, 8, g);
  for (int nu = 0; nu <= 8; ++nu)
    CHECK(std::abs(c.coeff(nu) - std::conj(c.coeff(-nu))) < 1e-12);
  CHECK(c.is_real(1e-12));
}

TEST_CASE("poly_derivative applies (i nu)^r") {
  TrigPoly t = TrigPoly::zero(1);
  t.set_coeff(1, 1.0);  // e^{ix}
  TrigPoly d2 = poly_derivative(t, 2);
  CHECK(std::abs(d2.coeff(1) - complex<double>(-1.0, 0.0)) < 1e-14);
  TrigPoly d1 = poly_derivative(t, 1);
  CHECK(std::abs(d1.coeff(1) - complex<double>(0.0, 1.0)) < 1e-14);
}

TEST_CASE("shifted evaluation is exact, never interpolated") {
  TrigPoly t = TrigPoly::zero(2);
  t.set_coeff(2, 1.0);  // e^{2ix}
  for (double x : {0.1, 1.7, 4.0}) {
    for (double h : {0.013, 0.5, 3.9}) {
      complex<double> want = std::polar(1.0, 2 * (x + h));
      CHECK(std::abs(poly_eval_shifted(t, x, h) - want) < 1e-12);
    }
  }
}

TEST_CASE("sample_poly matches pointwise evaluation with shift") {
  auto e = find_fn("poly5");
  const TrigPoly t = [&] {
    TrigPoly p = TrigPoly::zero(5);
    for (auto& [nu, c] : e.fn.known_coeffs()) p.set_coeff(nu, c);
    return p;
  }();
  auto g = UniformGrid::of_size(37);
  double s = 0.3777;
  auto vals = sample_poly(t, g, s);
  for (int j = 0; j < g.size; ++j)
    CHECK(std::abs(vals[j] - t.eval(g.node(j) + s)) < 1e-11);
}

TEST_CASE("json round trip preserves the polynomial") {
  TrigPoly t = TrigPoly::zero(2);
  t.set_coeff(0, complex<double>(0.125, 0));
  t.set_coeff(1, complex<double>(-0.5, 0.25));
  t.set_coeff(-1, complex<double>(-0.5, -0.25));
  t.set_coeff(2, complex<double>(0, 1e-3));
  std::string j1 = poly_to_json(t);
  TrigPoly back = poly_from_json(j1);
  CHECK(back.degree == 2);
  for (int nu = -2; nu <= 2; ++nu) CHECK(std::abs(back.coeff(nu) - t.coeff(nu)) == 0.0);
  CHECK(poly_to_json(back) == j1);
  CHECK(static_cast<int>(back.coeffs.size()) == 2 * back.degree + 1);
}

TEST_CASE("coefficient vectors must have length 2n+1") {
  CHECK_THROWS_AS(TrigPoly(2, Eigen::VectorXcd::Zero(4)), std::invalid_argument);
}

TEST_CASE("catalog evaluators are 2 pi periodic") {
  for (const char* name : {"triangle", "square", "odd2", "odd3", "ramp8", "lacunary05"}) {
    const auto& f = find_fn(name).fn;
    for (double x : {0.0, 0.37, 2.2, 5.9}) {
      CHECK(std::abs(f(x + two_pi) - f(x)) < 1e-9);
      CHECK(std::abs(f(x - two_pi) - f(x)) < 1e-9);
    }
  }
}

TEST_CASE("finite differences compose lazily and match the direct formula") {
  auto f = find_fn("sinx").fn;
  double h = 0.7;
  auto d2 = finite_difference(f, h, 2);
  for (double x : {0.0, 1.0, 3.3}) {
    complex<double> want = f(x) - 2.0 * f(x + h) + f(x + 2 * h);
    CHECK(std::abs(d2(x) - want) < 1e-13);
  }
}
