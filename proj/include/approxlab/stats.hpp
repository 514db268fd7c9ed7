#pragma once

#include <vector>

namespace approxlab {

// Least-squares power-law fit value ~ exp(intercept) * h^slope, computed on
// (log h, log value). residual is the largest absolute log deviation.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

// Requires at least 4 points, all coordinates positive; throws otherwise.
RateFit rate_fit(const std::vector<std::pair<double, double>>& points);

// Spearman rank correlation with average ranks for ties. Values whose relative
// gap is below tie_tol count as tied, so plateaus caused by measurement noise
// do not masquerade as trends. A constant sequence has no trend: returns 0.
double spearman(const std::vector<double>& x, const std::vector<double>& y,
                double tie_tol = 1e-3);

// Range summary of a positive ratio sequence; spread = max/min.
struct RatioStats {
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
  double spread = 0.0;
};

// Throws on an empty sequence or nonpositive entries.
RatioStats ratio_stats(const std::vector<double>& ratios);

}  // namespace approxlab
