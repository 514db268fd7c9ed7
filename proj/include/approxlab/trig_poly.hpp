#pragma once

#include <complex>
#include <string>

#include <Eigen/Core>

#include "grid.hpp"

namespace approxlab {

// Trigonometric polynomial T(x) = sum_{nu=-n}^{n} c_nu e^{i nu x}.
// coeffs holds c_nu at index nu + n and always has length exactly 2n+1.
struct TrigPoly {
  int degree = 0;
  Eigen::VectorXcd coeffs;

  TrigPoly() : coeffs(Eigen::VectorXcd::Zero(1)) {}
  TrigPoly(int n, Eigen::VectorXcd c);
  static TrigPoly zero(int n);

  // c_nu; returns 0 for |nu| > degree.
  std::complex<double> coeff(int nu) const {
    if (nu < -degree || nu > degree) return {0.0, 0.0};
    return coeffs[nu + degree];
  }
  void set_coeff(int nu, std::complex<double> v);

  std::complex<double> eval(double x) const;
  // True when coefficients are conjugate-symmetric, i.e. T is real on the line.
  bool is_real(double tol = 1e-12) const;
  // Same polynomial re-indexed to a higher degree (zero padding).
  TrigPoly padded(int n) const;
};

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator*(std::complex<double> s, const TrigPoly& a);

// r-th derivative: coefficients (i nu)^r c_nu.
TrigPoly poly_derivative(const TrigPoly& T, int r);

// Exact evaluation at x + h through the coefficient representation.
std::complex<double> poly_eval_shifted(const TrigPoly& T, double x, double h);

// Forward difference of step h and order k as a polynomial:
// coefficients (1 - e^{i nu h})^k c_nu.
TrigPoly poly_difference(const TrigPoly& T, double h, int k);

// All samples T(x_j + shift) on a uniform grid, O(M n) via phase recurrence.
Eigen::ArrayXcd sample_poly(const TrigPoly& T, const UniformGrid& g, double shift = 0.0);

// JSON round trip: {"degree": n, "re": [...], "im": [...]}, arrays of length 2n+1.
std::string poly_to_json(const TrigPoly& T);
TrigPoly poly_from_json(const std::string& text);

}  // namespace approxlab
