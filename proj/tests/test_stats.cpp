#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "approxlab/stats.hpp"

using namespace approxlab;

TEST_CASE("power laws come back with their exponent") {
  std::vector<std::pair<double, double>> pts;
  for (double h : {0.001, 0.004, 0.02, 0.1, 0.5}) pts.push_back({h, h * h});
  auto f = rate_fit(pts);
  CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(f.residual < 1e-10);

  pts.clear();
  for (double h : {0.01, 0.05, 0.2, 1.0}) pts.push_back({h, 3.0 * std::sqrt(h)});
  f = rate_fit(pts);
  CHECK(f.slope == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
}

TEST_CASE("fit preconditions") {
  std::vector<std::pair<double, double>> three = {{0.1, 1}, {0.2, 2}, {0.3, 3}};
  CHECK_THROWS_AS(rate_fit(three), std::invalid_argument);
  std::vector<std::pair<double, double>> bad = {{0.1, 1}, {0.2, 2}, {0.3, 3}, {0.4, 0.0}};
  CHECK_THROWS_AS(rate_fit(bad), std::invalid_argument);
  std::vector<std::pair<double, double>> same = {{0.1, 1}, {0.1, 2}, {0.1, 3}, {0.1, 4}};
  CHECK_THROWS_AS(rate_fit(same), std::invalid_argument);
}

TEST_CASE("residual flags departures from a pure power") {
  std::vector<std::pair<double, double>> pts = {
      {0.001, 0.001}, {0.01, 0.01}, {0.1, 0.1}, {1.0, 2.0}};  // last point off by 2x
  auto f = rate_fit(pts);
  CHECK(f.residual == doctest::Approx(0.4 * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("spearman on clean trends") {
  std::vector<double> x = {1, 2, 3, 4, 5};
  CHECK(spearman(x, {2, 4, 6, 8, 10}) == doctest::Approx(1.0));
  CHECK(spearman(x, {10, 8, 6, 4, 2}) == doctest::Approx(-1.0));
  // monotone beats magnitude: any increasing y gives rho 1
  CHECK(spearman(x, {0.1, 0.2, 7.0, 7.5, 100.0}) == doctest::Approx(1.0));
}

TEST_CASE("ties get average ranks") {
  // y ranks: 1.5, 1.5, 3, 4 -> rho = sqrt(0.9)
  std::vector<double> x = {1, 2, 3, 4};
  std::vector<double> y = {10, 10, 20, 30};
  CHECK(spearman(x, y) == doctest::Approx(std::sqrt(0.9)).epsilon(1e-12));
}

TEST_CASE("near-equal values are tied at the relative tolerance") {
  std::vector<double> x = {1, 2, 3};
  // 1.0 and 1.0005 differ by 5e-4 relative: tied; exact spearman would see a
  // strict increase and report 1
  std::vector<double> y = {1.0, 1.0005, 2.0};
  double rho = spearman(x, y);
  CHECK(rho < 1.0);
  CHECK(rho == doctest::Approx(spearman(x, {1.0, 1.0, 2.0})));
  // widening the gap past the tolerance restores the strict trend
  CHECK(spearman(x, {1.0, 1.002, 2.0}) == doctest::Approx(1.0));
}

TEST_CASE("constant sequences carry no trend") {
  CHECK(spearman({1, 2, 3, 4}, {5, 5, 5, 5}) == 0.0);
}

TEST_CASE("ratio summaries") {
  auto s = ratio_stats({2.0, 8.0, 4.0});
  CHECK(s.min == 2.0);
  CHECK(s.max == 8.0);
  CHECK(s.median == 4.0);
  CHECK(s.spread == 4.0);
  auto e = ratio_stats({1.0, 3.0, 9.0, 27.0});
  CHECK(e.median == 6.0);
  CHECK_THROWS_AS(ratio_stats({}), std::invalid_argument);
  CHECK_THROWS_AS(ratio_stats({1.0, 0.0}), std::invalid_argument);
}
