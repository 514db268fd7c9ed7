#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "approxlab/testfns.hpp"

using namespace approxlab;

TEST_CASE("square wave spot values") {
  auto f = find_fn("square").fn;
  CHECK(f(0.5).real() == doctest::Approx(pi_const / 4).epsilon(1e-15));
  CHECK(f(3.0).real() == doctest::Approx(pi_const / 4).epsilon(1e-15));
  CHECK(f(4.0).real() == doctest::Approx(-pi_const / 4).epsilon(1e-15));
  CHECK(f(0.0).real() == 0.0);
  CHECK(f(pi_const).real() == 0.0);
  // odd symmetry
  CHECK(f(-1.3).real() == doctest::Approx(-f(1.3).real()).epsilon(1e-15));
}

TEST_CASE("closed forms equal the series limit: r = 1") {
  auto f = find_fn("square").fn;
  auto s = odd_harmonic_partial_sum(1, 200000);
  for (double x : {0.7, 1.0, 2.0, 2.9, 4.5}) {
    CHECK(std::abs(f(x) - s(x)) < 1e-4);
  }
}

TEST_CASE("closed forms equal the series limit: r = 2") {
  auto f = find_fn("odd2").fn;
  int n = 10000;
  auto s = odd_harmonic_partial_sum(2, n);
  double bound = odd_harmonic_tail_bound(2, n);
  CHECK(bound == doctest::Approx(1.0 / (4.0 * n)).epsilon(1e-12));
  for (double x : {0.0, 0.7, 1.57, 3.14, 5.0}) {
    CHECK(std::abs(f(x) - s(x)) <= bound + 1e-12);
  }
}

TEST_CASE("closed forms equal the series limit: r = 3") {
  auto f = find_fn("odd3").fn;
  int n = 1000;
  auto s = odd_harmonic_partial_sum(3, n);
  double bound = odd_harmonic_tail_bound(3, n);
  for (double x : {0.0, 0.7, 1.57, 3.14, 5.0}) {
    CHECK(std::abs(f(x) - s(x)) <= bound + 1e-12);
  }
}

TEST_CASE("profile extremes and symmetry") {
  auto f2 = find_fn("odd2").fn;
  CHECK(f2(0.0).real() == doctest::Approx(-pi_const * pi_const / 8).epsilon(1e-15));
  CHECK(f2(pi_const).real() == doctest::Approx(pi_const * pi_const / 8).epsilon(1e-15));
  CHECK(f2(pi_const / 2).real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(f2(-0.9).real() == doctest::Approx(f2(0.9).real()).epsilon(1e-14));  // even

  auto f3 = find_fn("odd3").fn;
  CHECK(f3(pi_const / 2).real() ==
        doctest::Approx(-std::pow(pi_const, 3) / 32).epsilon(1e-15));
  CHECK(f3(-0.9).real() == doctest::Approx(-f3(0.9).real()).epsilon(1e-14));  // odd
  CHECK(f3(0.0).real() == 0.0);
}

TEST_CASE("tail bound is infinite only for r = 1") {
  CHECK(std::isinf(odd_harmonic_tail_bound(1, 100)));
  CHECK(odd_harmonic_tail_bound(3, 50) == doctest::Approx(1.0 / (4.0 * 100 * 100)).epsilon(1e-12));
}

TEST_CASE("triangle wave values and Lipschitz bound") {
  auto f = triangle_wave().fn;
  CHECK(f(pi_const).real() == doctest::Approx(pi_const).epsilon(1e-15));
  CHECK(f(pi_const / 2).real() == doctest::Approx(pi_const / 2).epsilon(1e-15));
  CHECK(f(3 * pi_const / 2).real() == doctest::Approx(pi_const / 2).epsilon(1e-15));
  CHECK(f(0.0).real() == 0.0);
  for (int j = 0; j < 200; ++j) {
    double x = 0.037 + j * 0.031;
    CHECK(std::abs(f(x + 0.01) - f(x)) <= 0.01 + 1e-12);
  }
}

TEST_CASE("staircase plateaus, slope, and closeness to the triangle") {
  int n = 8;
  auto phi = ramp_phi(n).fn;
  auto f = triangle_wave().fn;
  // plateau k holds the value pi k/n; probe each plateau's midpoint
  for (int k = 0; k < n; ++k) {
    double y = (k + 0.5 * (1.0 - 1.0 / n)) / n;  // inside the flat part
    CHECK(phi(pi_const * y).real() == doctest::Approx(pi_const * k / n).epsilon(1e-12));
  }
  // slope n on a ramp: difference quotient across a ramp interior
  double ramp_mid = (1.0 / n - 0.5 / (n * n)) * pi_const;
  double d = 0.1 / (n * n);
  double slope = (phi(ramp_mid + d).real() - phi(ramp_mid - d).real()) / (2 * d);
  CHECK(slope == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
  // uniform closeness ||f - phi||_inf <= pi/n
  for (int j = 0; j < 2000; ++j) {
    double x = two_pi * j / 2000.0;
    CHECK(std::abs(f(x) - phi(x)) <= pi_const / n + 1e-9);
  }
  // continuity across a plateau-ramp-plateau junction
  double eps = 1e-10;
  double knot = pi_const / n;
  CHECK(std::abs(phi(knot - eps) - phi(knot + eps)) < 1e-8);
}

TEST_CASE("lacunary value at zero is the geometric sum") {
  auto f = lacunary(0.5, 20).fn;
  double q = std::pow(2.0, -0.5);
  double want = (1.0 - std::pow(q, 21)) / (1.0 - q);
  CHECK(f(0.0).real() == doctest::Approx(want).epsilon(1e-12));
  CHECK(f(two_pi).real() == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("registry lookups") {
  CHECK(catalog_names().size() == 13);
  CHECK(find_fn("poly5").fn.real_valued());
  CHECK(find_fn("poly5").fn.has_coeffs());
  CHECK_THROWS_WITH_AS(find_fn("nope"),
                       doctest::Contains("unknown function 'nope'; available:"),
                       std::invalid_argument);
  // deterministic seeded polynomial: same coefficients on every lookup
  auto a = find_fn("poly5").fn.known_coeffs();
  auto b = find_fn("poly5").fn.known_coeffs();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == b[i].second);
  }
}

TEST_CASE("known rate tables carry the advertised keys") {
  CHECK(find_fn("square").known_rates.at("omega:k=1,p=0.5") == 2.0);
  CHECK(find_fn("square").known_rates.at("omega:k=1,p=2") == 0.5);
  CHECK(find_fn("triangle").known_rates.at("omega:k=2,p=0.5") == 3.0);
  CHECK(find_fn("lacunary05").known_rates.at("omega:k=1,p=2") == 0.5);
  CHECK(find_fn("lacunary08").known_rates.at("omega:k=1,p=inf") == 0.8);
}
