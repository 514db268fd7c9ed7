#include "approxlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace approxlab {

RateFit rate_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4) throw std::invalid_argument("rate_fit: need at least 4 points");
  int m = static_cast<int>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(m), ly(m);
  for (int i = 0; i < m; ++i) {
    auto [h, v] = points[i];
    if (!(h > 0.0) || !(v > 0.0))
      throw std::invalid_argument("rate_fit: nonpositive point, cannot take logs");
    lx[i] = std::log(h);
    ly[i] = std::log(v);
    sx += lx[i]; sy += ly[i]; sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i];
  }
  double det = m * sxx - sx * sx;
  if (det <= 0.0) throw std::invalid_argument("rate_fit: degenerate abscissas");
  RateFit out;
  out.slope = (m * sxy - sx * sy) / det;
  out.intercept = (sy - out.slope * sx) / m;
  for (int i = 0; i < m; ++i)
    out.residual = std::max(out.residual, std::abs(ly[i] - out.slope * lx[i] - out.intercept));
  return out;
}

namespace {

// average ranks; consecutive sorted values within tie_tol (relative) share one
std::vector<double> ranks_of(const std::vector<double>& v, double tie_tol) {
  int m = static_cast<int>(v.size());
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
  std::vector<double> rk(m);
  int i = 0;
  while (i < m) {
    int j = i;
    while (j + 1 < m) {
      double a = v[idx[j]], b = v[idx[j + 1]];
      if (std::abs(b - a) > tie_tol * std::max(std::abs(a), std::abs(b))) break;
      ++j;
    }
    double avg = 0.5 * (i + j) + 1.0;  // ranks are 1-based
    for (int t = i; t <= j; ++t) rk[idx[t]] = avg;
    i = j + 1;
  }
  return rk;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y, double tie_tol) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("spearman: need at least 2 points");
  auto rx = ranks_of(x, tie_tol), ry = ranks_of(y, tie_tol);
  int m = static_cast<int>(x.size());
  double mx = 0, my = 0;
  for (int i = 0; i < m; ++i) { mx += rx[i]; my += ry[i]; }
  mx /= m; my /= m;
  double cxy = 0, cxx = 0, cyy = 0;
  for (int i = 0; i < m; ++i) {
    cxy += (rx[i] - mx) * (ry[i] - my);
    cxx += (rx[i] - mx) * (rx[i] - mx);
    cyy += (ry[i] - my) * (ry[i] - my);
  }
  if (cxx == 0.0 || cyy == 0.0) return 0.0;
  return cxy / std::sqrt(cxx * cyy);
}

RatioStats ratio_stats(const std::vector<double>& ratios) {
  if (ratios.empty()) throw std::invalid_argument("ratio_stats: empty sequence");
  for (double r : ratios)
    if (!(r > 0.0)) throw std::invalid_argument("ratio_stats: nonpositive ratio");
  std::vector<double> s = ratios;
  std::sort(s.begin(), s.end());
  RatioStats out;
  out.min = s.front();
  out.max = s.back();
  int m = static_cast<int>(s.size());
  out.median = (m % 2) ? s[m / 2] : 0.5 * (s[m / 2 - 1] + s[m / 2]);
  out.spread = out.max / out.min;
  return out;
}

}  // namespace approxlab
