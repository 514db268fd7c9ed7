#include "approxlab/moduli.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "approxlab/parallel.hpp"
#include "approxlab/spectral.hpp"

namespace approxlab {

void HolderSpec::validate() const {
  if (r < 1) throw std::invalid_argument("HolderSpec: difference order r must be >= 1");
  if (!(alpha > 0) || alpha > r + 1e-15)
    throw std::invalid_argument(
        "HolderSpec: need 0 < alpha <= r (alpha = " + std::to_string(alpha) + ", r = " +
        std::to_string(r) + "); beyond alpha = r the h^{-alpha} scale outruns an order-r "
        "difference and the space degenerates");
  if (!(h_min > 0) || !(h_max > h_min)) throw std::invalid_argument("HolderSpec: bad step range");
}

HGrid HolderSpec::hgrid() const {
  if (h_min == two_pi * 1e-4 && h_max == two_pi && points_per_decade == 32) return HGrid::shared();
  return HGrid::geometric(h_min, h_max, points_per_decade);
}

namespace {

// Samples of f shifted by arbitrary offsets, memoized on the exact offset.
class ShiftCache {
 public:
  ShiftCache(const PeriodicFn& f, const UniformGrid& g) : f_(f), g_(g) {}
  const Eigen::ArrayXcd& at(double s) {
    auto it = map_.find(s);
    if (it != map_.end()) return it->second;
    return map_.emplace(s, sample(f_, g_, s)).first->second;
  }
  void clear() { map_.clear(); }

 private:
  const PeriodicFn& f_;
  const UniformGrid& g_;
  std::unordered_map<double, Eigen::ArrayXcd> map_;
};

std::vector<double> diff_weights(int k) {
  std::vector<double> w(k + 1);
  for (int v = 0; v <= k; ++v) w[v] = (v % 2 ? -1.0 : 1.0) * binomial(k, v);
  return w;
}

}  // namespace

Eigen::ArrayXd diff_norm_sweep(const PeriodicFn& f, int k, const QuasiNormSpec& spec,
                               const UniformGrid& g, const HGrid& hg) {
  if (k < 1) throw std::invalid_argument("diff_norm_sweep: order must be >= 1");
  auto w = diff_weights(k);
  Eigen::ArrayXcd base = sample(f, g);
  Eigen::ArrayXd out(hg.size());
  parallel_for(hg.size(), [&](int i) {
    double h = hg[i];
    Eigen::ArrayXcd acc = w[0] * base;
    for (int v = 1; v <= k; ++v) acc += w[v] * sample(f, g, v * h);
    out[i] = lp_norm(acc, spec);
  });
  return out;
}

OmegaSweep::OmegaSweep(const PeriodicFn& f, int k, const QuasiNormSpec& spec,
                       const UniformGrid& g, const HGrid& hg)
    : OmegaSweep(diff_norm_sweep(f, k, spec, g, hg), hg) {}

OmegaSweep::OmegaSweep(Eigen::ArrayXd raw_norms, const HGrid& hg) : hg_(hg), raw_(std::move(raw_norms)) {
  prefix_.resize(raw_.size());
  double m = 0.0;
  for (int i = 0; i < raw_.size(); ++i) {
    if (raw_[i] > m) m = raw_[i];
    prefix_[i] = m;
  }
}

double OmegaSweep::at(double t) const {
  int c = hg_.count_leq(t);
  if (c == 0)
    throw std::invalid_argument("omega: t = " + std::to_string(t) +
                                " is below the smallest grid step " + std::to_string(hg_.min()) +
                                "; rebuild the step grid with a smaller h_min");
  return prefix_[c - 1];
}

HSweep OmegaSweep::theta_sweep(double alpha, double delta) const {
  if (!(alpha > 0)) throw std::invalid_argument("theta: alpha must be positive");
  int c = hg_.count_leq(delta);
  if (c == 0)
    throw std::invalid_argument("theta: delta below the smallest grid step; use a finer grid");
  HSweep s;
  s.h = hg_.values().head(c);
  s.values.resize(c);
  for (int i = 0; i < c; ++i) s.values[i] = prefix_[i] / std::pow(hg_[i], alpha);
  s.sup = s.values[0];
  s.argmax = 0;
  for (int i = 1; i < c; ++i)
    if (s.values[i] > s.sup) { s.sup = s.values[i]; s.argmax = i; }
  s.left_edge_sup = (s.argmax == 0);
  return s;
}

double OmegaSweep::theta(double alpha, double delta) const { return theta_sweep(alpha, delta).sup; }

double omega(const PeriodicFn& f, int k, double t, const QuasiNormSpec& spec,
             const UniformGrid& g, const HGrid& hg) {
  return OmegaSweep(f, k, spec, g, hg).at(t);
}

double theta(const PeriodicFn& f, int k, double alpha, double delta, const QuasiNormSpec& spec,
             const UniformGrid& g, const HGrid& hg) {
  return OmegaSweep(f, k, spec, g, hg).theta(alpha, delta);
}

NestedDiffTable::NestedDiffTable(const PeriodicFn& f, int k, int r, const QuasiNormSpec& spec,
                                 const UniformGrid& g, const HGrid& hg)
    : hg_(hg) {
  if (k < 1 || r < 1) throw std::invalid_argument("NestedDiffTable: orders must be >= 1");
  int H = hg.size();
  auto wk = diff_weights(k);
  auto wr = diff_weights(r);

  // Samples at the pure inner shifts mu*d_j are reused by every row; build once.
  ShiftCache colcache(f, g);
  for (int j = 0; j < H; ++j)
    for (int mu = 0; mu <= k; ++mu) colcache.at(mu * hg[j]);

  v_.resize(H, H);
  parallel_for(H, [&](int i) {
    double h = hg[i];
    ShiftCache rowcache(f, g);
    Eigen::ArrayXcd acc(g.size);
    for (int j = 0; j < H; ++j) {
      double d = hg[j];
      acc.setZero();
      for (int mu = 0; mu <= k; ++mu) {
        for (int v = 0; v <= r; ++v) {
          double off = mu * d + v * h;
          const Eigen::ArrayXcd& s = (v == 0) ? colcache.at(mu * d) : rowcache.at(off);
          acc += (wk[mu] * wr[v]) * s;
        }
      }
      v_(i, j) = lp_norm(acc, spec);
    }
  });

  rowprefix_.resize(H, H);
  for (int i = 0; i < H; ++i) {
    double m = 0.0;
    for (int j = 0; j < H; ++j) {
      if (v_(i, j) > m) m = v_(i, j);
      rowprefix_(i, j) = m;
    }
  }
}

double NestedDiffTable::omega_row(int i, double t) const {
  int c = hg_.count_leq(t);
  if (c == 0) throw std::invalid_argument("omega_row: t below the smallest grid step");
  return rowprefix_(i, c - 1);
}

double NestedDiffTable::psi(double alpha, double delta) const {
  if (!(alpha > 0)) throw std::invalid_argument("psi: alpha must be positive");
  int c = hg_.count_leq(delta);
  if (c == 0) throw std::invalid_argument("psi: delta below the smallest grid step; use a finer grid");
  double best = 0.0;
  for (int i = 0; i < c; ++i) {
    double val = rowprefix_(i, c - 1) / std::pow(hg_[i], alpha);
    if (val > best) best = val;
  }
  return best;
}

HSweep NestedDiffTable::psi_sweep(double alpha) const {
  HSweep s;
  int H = hg_.size();
  s.h = hg_.values();
  s.values.resize(H);
  for (int c = 1; c <= H; ++c) {
    double best = 0.0;
    for (int i = 0; i < c; ++i) {
      double val = rowprefix_(i, c - 1) / std::pow(hg_[i], alpha);
      if (val > best) best = val;
    }
    s.values[c - 1] = best;
  }
  s.sup = s.values[0];
  s.argmax = 0;
  for (int i = 1; i < H; ++i)
    if (s.values[i] > s.sup) { s.sup = s.values[i]; s.argmax = i; }
  s.left_edge_sup = (s.argmax == 0);
  return s;
}

double psi(const PeriodicFn& f, int k, int r, double alpha, double delta,
           const QuasiNormSpec& spec, const UniformGrid& g, const HGrid& hg) {
  if (!(alpha > 0) || alpha > r + 1e-15)
    throw std::invalid_argument("psi: need 0 < alpha <= r");
  return NestedDiffTable(f, k, r, spec, g, hg).psi(alpha, delta);
}

HSweep holder_seminorm(const PeriodicFn& f, const HolderSpec& hs, const UniformGrid& g) {
  hs.validate();
  HGrid hg = hs.hgrid();
  Eigen::ArrayXd norms = diff_norm_sweep(f, hs.r, hs.norm, g, hg);
  HSweep s;
  s.h = hg.values();
  s.values = norms;
  for (int i = 0; i < s.values.size(); ++i) s.values[i] /= std::pow(hg[i], hs.alpha);
  s.sup = s.values[0];
  s.argmax = 0;
  for (int i = 1; i < s.values.size(); ++i)
    if (s.values[i] > s.sup) { s.sup = s.values[i]; s.argmax = i; }
  s.left_edge_sup = (s.argmax == 0);
  s.tail_bound = std::pow(2.0, hs.r / hs.norm.p1()) * lp_norm(f, hs.norm, g) /
                 std::pow(hs.h_max, hs.alpha);
  return s;
}

double holder_norm(const PeriodicFn& f, const HolderSpec& hs, const UniformGrid& g) {
  return lp_norm(f, hs.norm, g) + holder_seminorm(f, hs, g).sup;
}

FamilyHolderError family_holder_error(const PeriodicFn& f, const std::vector<TrigPoly>& per_lambda,
                                      const HolderSpec& hs, const UniformGrid& xg,
                                      const UniformGrid& lg) {
  hs.validate();
  if (static_cast<int>(per_lambda.size()) != lg.size)
    throw std::invalid_argument("family_holder_error: one approximant per lambda node required");
  HGrid hg = hs.hgrid();
  int L = lg.size;
  int H = hg.size();
  auto wr = diff_weights(hs.r);

  Eigen::ArrayXcd base = sample(f, xg);
  std::vector<Eigen::ArrayXcd> poly_samples(L);
  for (int l = 0; l < L; ++l) poly_samples[l] = sample_poly(per_lambda[l], xg);

  Eigen::ArrayXd inner(L);
  for (int l = 0; l < L; ++l) inner[l] = lp_norm(Eigen::ArrayXcd(base - poly_samples[l]), hs.norm);
  FamilyHolderError out;
  out.lp_part = lp_norm(inner, hs.norm);

  // Difference of the residual: f-part shared across lambda, polynomial part
  // through the exact step multiplier.
  ShiftCache fcache(f, xg);
  out.sweep.h = hg.values();
  out.sweep.values.resize(H);
  Eigen::ArrayXd ratio(H);
  parallel_for(H, [&](int i) {
    double h = hg[i];
    Eigen::ArrayXcd fdiff = wr[0] * base;
    for (int v = 1; v <= hs.r; ++v) fdiff += wr[v] * sample(f, xg, v * h);
    Eigen::ArrayXd inner_h(L);
    for (int l = 0; l < L; ++l) {
      Eigen::ArrayXcd resid = fdiff - sample_poly(poly_difference(per_lambda[l], h, hs.r), xg);
      inner_h[l] = lp_norm(resid, hs.norm);
    }
    ratio[i] = lp_norm(inner_h, hs.norm) / std::pow(h, hs.alpha);
  });
  out.sweep.values = ratio;
  out.sweep.sup = ratio[0];
  out.sweep.argmax = 0;
  for (int i = 1; i < H; ++i)
    if (ratio[i] > out.sweep.sup) { out.sweep.sup = ratio[i]; out.sweep.argmax = i; }
  out.sweep.left_edge_sup = (out.sweep.argmax == 0);
  out.seminorm = out.sweep.sup;
  out.value = out.lp_part + out.seminorm;
  return out;
}

double modulus_tail_integral(const OmegaSweep& sweep, double alpha, double q, double delta) {
  const HGrid& hg = sweep.grid();
  int c = hg.count_leq(delta);
  if (c == 0) throw std::invalid_argument("modulus_tail_integral: delta below the grid");
  double acc = 0.0;
  for (int i = 0; i < c; ++i) {
    double step = (i == 0) ? std::log(hg[1] / hg[0]) : std::log(hg[i] / hg[i - 1]);
    double integrand = sweep.prefix()[i] / std::pow(hg[i], alpha);
    acc += std::pow(integrand, q) * step;
  }
  return std::pow(acc, 1.0 / q);
}

}  // namespace approxlab
