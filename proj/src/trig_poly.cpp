#include "approxlab/trig_poly.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace approxlab {

TrigPoly::TrigPoly(int n, Eigen::VectorXcd c) : degree(n), coeffs(std::move(c)) {
  if (n < 0) throw std::invalid_argument("TrigPoly: negative degree");
  if (coeffs.size() != 2 * n + 1)
    throw std::invalid_argument("TrigPoly: coefficient vector must have length 2n+1 = " +
                                std::to_string(2 * n + 1) + ", got " + std::to_string(coeffs.size()));
}

TrigPoly TrigPoly::zero(int n) { return TrigPoly(n, Eigen::VectorXcd::Zero(2 * n + 1)); }

void TrigPoly::set_coeff(int nu, std::complex<double> v) {
  if (nu < -degree || nu > degree)
    throw std::out_of_range("TrigPoly::set_coeff: |nu| exceeds degree");
  coeffs[nu + degree] = v;
}

std::complex<double> TrigPoly::eval(double x) const {
  // Horner in z = e^{ix}: T = e^{-inx} (c_{-n} + z (c_{-n+1} + z (...)))
  std::complex<double> z = std::polar(1.0, x);
  std::complex<double> acc = coeffs[2 * degree];
  for (int i = 2 * degree - 1; i >= 0; --i) acc = acc * z + coeffs[i];
  return acc * std::polar(1.0, -degree * x);
}

bool TrigPoly::is_real(double tol) const {
  for (int nu = 0; nu <= degree; ++nu) {
    std::complex<double> d = coeff(nu) - std::conj(coeff(-nu));
    if (std::abs(d) > tol) return false;
  }
  return true;
}

TrigPoly TrigPoly::padded(int n) const {
  if (n < degree) throw std::invalid_argument("TrigPoly::padded: target degree below current");
  TrigPoly out = TrigPoly::zero(n);
  out.coeffs.segment(n - degree, 2 * degree + 1) = coeffs;
  return out;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  int n = std::max(a.degree, b.degree);
  TrigPoly out = a.padded(n);
  out.coeffs += b.padded(n).coeffs;
  return out;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  int n = std::max(a.degree, b.degree);
  TrigPoly out = a.padded(n);
  out.coeffs -= b.padded(n).coeffs;
  return out;
}

TrigPoly operator*(std::complex<double> s, const TrigPoly& a) {
  TrigPoly out = a;
  out.coeffs *= s;
  return out;
}

TrigPoly poly_derivative(const TrigPoly& T, int r) {
  if (r < 0) throw std::invalid_argument("poly_derivative: negative order");
  TrigPoly out = T;
  for (int nu = -T.degree; nu <= T.degree; ++nu) {
    std::complex<double> m = std::pow(std::complex<double>(0.0, nu), r);
    out.coeffs[nu + T.degree] *= m;
  }
  return out;
}

std::complex<double> poly_eval_shifted(const TrigPoly& T, double x, double h) {
  return T.eval(x + h);
}

TrigPoly poly_difference(const TrigPoly& T, double h, int k) {
  if (k < 0) throw std::invalid_argument("poly_difference: negative order");
  TrigPoly out = T;
  for (int nu = -T.degree; nu <= T.degree; ++nu) {
    std::complex<double> m = 1.0 - std::polar(1.0, nu * h);
    std::complex<double> mk = 1.0;
    for (int i = 0; i < k; ++i) mk *= m;
    out.coeffs[nu + T.degree] *= mk;
  }
  return out;
}

Eigen::ArrayXcd sample_poly(const TrigPoly& T, const UniformGrid& g, double shift) {
  int n = T.degree;
  // Apply the shift to the coefficients, then synthesize on the grid.
  Eigen::VectorXcd d(2 * n + 1);
  for (int nu = -n; nu <= n; ++nu) d[nu + n] = T.coeffs[nu + n] * std::polar(1.0, nu * shift);
  Eigen::ArrayXcd out(g.size);
  for (int j = 0; j < g.size; ++j) {
    double x = g.node(j);
    std::complex<double> z = std::polar(1.0, x);
    std::complex<double> acc = d[2 * n];
    for (int i = 2 * n - 1; i >= 0; --i) acc = acc * z + d[i];
    out[j] = acc * std::polar(1.0, -n * x);
  }
  return out;
}

std::string poly_to_json(const TrigPoly& T) {
  nlohmann::ordered_json j;
  j["degree"] = T.degree;
  std::vector<double> re(2 * T.degree + 1), im(2 * T.degree + 1);
  for (int i = 0; i <= 2 * T.degree; ++i) {
    re[i] = T.coeffs[i].real();
    im[i] = T.coeffs[i].imag();
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

TrigPoly poly_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("degree").get<int>();
  auto re = j.at("re").get<std::vector<double>>();
  auto im = j.at("im").get<std::vector<double>>();
  if (static_cast<int>(re.size()) != 2 * n + 1 || static_cast<int>(im.size()) != 2 * n + 1)
    throw std::invalid_argument("poly_from_json: coefficient arrays must have length 2n+1");
  Eigen::VectorXcd c(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) c[i] = {re[i], im[i]};
  return TrigPoly(n, std::move(c));
}

}  // namespace approxlab
