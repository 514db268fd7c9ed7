#pragma once

#include <Eigen/Core>

namespace approxlab {

inline constexpr double two_pi = 6.283185307179586476925286766559;
inline constexpr double pi_const = two_pi / 2;

// Uniform periodic grid x_j = 2*pi*j/M, j = 0..M-1.
struct UniformGrid {
  int size = 0;

  double node(int j) const { return two_pi * j / size; }
  Eigen::ArrayXd nodes() const;
  static UniformGrid of_size(int m);  // throws std::invalid_argument if m < 1
};

// Geometric step-size grid shared by every sup over difference steps h.
// Using one fixed grid makes truncated sups exactly monotone in the cutoff
// and makes two-sided grid inequalities compare like with like.
class HGrid {
 public:
  static HGrid geometric(double h_min, double h_max, int points_per_decade);
  // Default grid: h in [2*pi*1e-4, 2*pi], 32 points per decade (129 points).
  static const HGrid& shared();

  int size() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_[i]; }
  const Eigen::ArrayXd& values() const { return v_; }
  double min() const { return v_[0]; }
  double max() const { return v_[size() - 1]; }

  // Number of leading grid points <= t (with a 1e-12 relative slack so that
  // cutoffs computed as products land on their intended endpoint).
  int count_leq(double t) const;

 private:
  Eigen::ArrayXd v_;
};

}  // namespace approxlab
