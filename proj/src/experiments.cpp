#include "approxlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "approxlab/kernels.hpp"
#include "approxlab/moduli.hpp"
#include "approxlab/quasi_norm.hpp"
#include "approxlab/testfns.hpp"

namespace approxlab {
namespace {

std::string fmt4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

QuasiNormSpec spec_for(double p) {
  return std::isinf(p) ? QuasiNormSpec::linf() : QuasiNormSpec::lp(p);
}

HolderSpec holder_spec_for(const RunConfig& cfg) {
  HolderSpec hs;
  hs.norm = spec_for(cfg.p);
  hs.r = cfg.r;
  hs.alpha = cfg.alpha;
  hs.validate();
  return hs;
}

std::vector<int> ns_or_default(const RunConfig& cfg, std::vector<int> def) {
  std::vector<int> ns = cfg.n_range.empty() ? std::move(def) : cfg.n_range;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.empty() || ns.front() < 0)
    throw std::invalid_argument("degree range must be nonempty and nonnegative");
  return ns;
}

std::vector<int> dyadic_default(double p) {
  if (p < 1.0) return {2, 4, 8, 16, 32};
  return {4, 8, 16, 32, 64};
}

int solver_grid_size(const RunConfig& cfg, int n) {
  return std::max(cfg.solver_m, 8 * (n + 1));
}

// Warm-chained E_n sweep: each degree starts from the previous optimum, so the
// reported values are nonincreasing along the chain even for p < 1.
struct EnChain {
  EnChain(const RunConfig& c, const PeriodicFn& fn, const QuasiNormSpec& s)
      : cfg(c), f(fn), spec(s) {}
  const RunConfig& cfg;
  const PeriodicFn& f;
  QuasiNormSpec spec;
  TrigPoly warm;
  bool has_warm = false;

  double at(int n) {
    UniformGrid g = UniformGrid::of_size(solver_grid_size(cfg, n));
    ApproxResult res = best_approx(f, n, spec, g, cfg.budget, has_warm ? &warm : nullptr);
    warm = res.poly;
    has_warm = true;
    return res.value;
  }
};

struct HolderChain {
  HolderChain(const RunConfig& c, const PeriodicFn& fn, const HolderSpec& h)
      : cfg(c), f(fn), hs(h) {}
  const RunConfig& cfg;
  const PeriodicFn& f;
  HolderSpec hs;
  TrigPoly warm;
  bool has_warm = false;

  double at(int n) {
    UniformGrid g = UniformGrid::of_size(solver_grid_size(cfg, n));
    ApproxResult res = best_approx_holder(f, n, hs, g, cfg.budget, has_warm ? &warm : nullptr);
    warm = res.poly;
    has_warm = true;
    return res.value;
  }
};

uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// splitmix generator; platform-independent so seeded runs are byte-stable.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double sym() { return 2.0 * uniform() - 1.0; }
};

TrigPoly seeded_real_poly(int degree, Rng& rng) {
  TrigPoly t = TrigPoly::zero(degree);
  t.set_coeff(0, rng.sym());
  for (int nu = 1; nu <= degree; ++nu) {
    double a = rng.sym(), b = rng.sym();
    t.set_coeff(nu, {0.5 * a, -0.5 * b});
    t.set_coeff(-nu, {0.5 * a, 0.5 * b});
  }
  if (std::abs(t.coeff(degree)) < 0.05) {
    // keep the nominal degree honest
    t.set_coeff(degree, t.coeff(degree) + 0.25);
    t.set_coeff(-degree, t.coeff(-degree) + 0.25);
  }
  return t;
}

std::vector<CatalogEntry> resolve_entries(const RunConfig& cfg,
                                          const std::vector<std::string>& def) {
  const std::vector<std::string>& names = cfg.fns.empty() ? def : cfg.fns;
  std::vector<CatalogEntry> out;
  out.reserve(names.size());
  for (const auto& name : names) out.push_back(find_fn(name));
  return out;
}

std::vector<std::string> labels_of(const std::vector<CatalogEntry>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.fn.label());
  return out;
}

void stamp_core(Report& rep, const RunConfig& cfg, const std::vector<std::string>& fns,
                const std::vector<int>& ns) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", cfg.p);
  rep.parameters["p"] = buf;
  rep.parameters["fns"] = join(fns);
  if (!ns.empty()) rep.parameters["n_range"] = join_ints(ns);
  rep.parameters["grid_m"] = std::to_string(cfg.grid_m);
  rep.parameters["solver_m"] = std::to_string(cfg.solver_m);
  rep.parameters["seed"] = std::to_string(cfg.seed);
}

void stamp_holder(Report& rep, const RunConfig& cfg) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", cfg.alpha);
  rep.parameters["alpha"] = buf;
  rep.parameters["r"] = std::to_string(cfg.r);
  rep.parameters["k"] = std::to_string(cfg.k);
}

double spread_of(const std::vector<double>& v) { return ratio_stats(v).spread; }

}  // namespace

namespace {

// Smallest difference order whose modulus decays no faster than E_n, so the
// two share a rate and the ratio hovers around the sharp constant. For k
// below this the ratio falls like a power of n: the estimate then holds with
// growing room, and a two-sided spread test would read that slack as failure.
int saturation_order(const std::string& fname) {
  static const std::map<std::string, int> crit = {
      {"triangle", 2}, {"odd2", 2}, {"ramp8", 2}, {"ramp16", 2}, {"odd3", 3}};
  auto it = crit.find(fname);
  return it == crit.end() ? 1 : it->second;
}

}  // namespace

Report verify_jackson(const RunConfig& cfg) {
  Report rep;
  rep.name = "jackson";
  QuasiNormSpec spec = spec_for(cfg.p);
  std::vector<CatalogEntry> entries = resolve_entries(cfg, catalog_names());
  std::vector<int> ns = ns_or_default(cfg, {4, 8, 16, 32, 64});
  // the modulus grid has to resolve a few lacunary levels past the largest
  // degree, or folded high frequencies contaminate omega at small steps
  UniformGrid gm = UniformGrid::of_size(std::max(cfg.grid_m, 8192));
  stamp_core(rep, cfg, labels_of(entries), ns);
  rep.parameters["k"] = std::to_string(cfg.k);

  std::vector<double> pooled_n, pooled_ratio;
  for (const CatalogEntry& e : entries) {
    const std::string& fname = e.fn.label();
    double scale = lp_norm(e.fn, spec, gm);
    OmegaSweep sweep(e.fn, cfg.k, spec, gm);
    EnChain chain{cfg, e.fn, spec};
    // entries with a sparse exact spectrum need no solve once n covers it
    int exact_deg = -1;
    if (e.fn.has_coeffs())
      for (const auto& fc : e.fn.known_coeffs())
        exact_deg = std::max(exact_deg, std::abs(fc.first));
    bool saturated = cfg.k >= saturation_order(fname);
    std::vector<double> xs, ratios;
    for (int n : ns) {
      double en = (exact_deg >= 0 && n >= exact_deg) ? 0.0 : chain.at(n);
      double om = sweep.at(1.0 / n);
      ReportRow rr;
      rr.fn = fname;
      rr.p = cfg.p;
      rr.k = cfg.k;
      rr.n = n;
      rr.quantity = "en";
      rr.value = en;
      rep.add_row(rr);
      rr.quantity = "omega_at_1_over_n";
      rr.value = om;
      rep.add_row(rr);
      // exact cells (f already a polynomial of degree <= n) carry no ratio
      // information: the solver sits at its floor there
      if (en > 1e-8 * scale && om > 0.0) {
        double ratio = en / om;
        rr.quantity = "jackson_ratio";
        rr.value = ratio;
        rep.add_row(rr);
        xs.push_back(static_cast<double>(n));
        ratios.push_back(ratio);
        if (saturated) {
          pooled_n.push_back(static_cast<double>(n));
          pooled_ratio.push_back(ratio);
        }
      }
    }
    if (!ratios.empty()) {
      RatioStats st = ratio_stats(ratios);
      rep.ratio_stats["jackson:" + fname] = st;
      if (saturated) {
        rep.add_verdict("bounded:" + fname, st.max <= 3.0 * st.median + 1e-12,
                        "max/median = " + fmt4(st.max / st.median) + ", spread = " +
                            fmt4(st.spread));
      } else {
        // below the saturation order only growth can falsify the bound; the
        // high-end ratio is held to the same 3x leash against the median
        rep.add_verdict("tail_bounded:" + fname, ratios.back() <= 3.0 * st.median + 1e-12,
                        "ratio at n=" + std::to_string(ns.back()) + " / median = " +
                            fmt4(ratios.back() / st.median) + " (decaying cell, spread free)");
      }
      if (ratios.size() >= 3) {
        double rho = spearman(xs, ratios);
        rep.add_verdict("no_growth:" + fname, rho < 0.8, "spearman rho vs n = " + fmt4(rho));
      }
    } else {
      rep.add_verdict("exact:" + fname, true,
                      "E_n at the solver floor for every n; ratio uninformative");
    }
  }
  if (pooled_ratio.size() >= 8) {
    double rho = spearman(pooled_n, pooled_ratio);
    rep.ratio_stats["jackson:pooled"] = ratio_stats(pooled_ratio);
    rep.add_verdict("pooled_no_trend", std::abs(rho) < 0.8,
                    "pooled spearman rho vs n = " + fmt4(rho) + " over " +
                        std::to_string(pooled_ratio.size()) + " saturated cells");
  }
  return rep;
}

Report verify_stechkin_nikolskii(const RunConfig& cfg) {
  Report rep;
  rep.name = "stechkin";
  QuasiNormSpec spec = spec_for(cfg.p);
  std::vector<int> ns = ns_or_default(cfg, {8, 16, 32, 64});
  stamp_core(rep, cfg, {"seeded"}, ns);
  rep.parameters["r"] = std::to_string(cfg.r);
  rep.parameters["trials"] = std::to_string(cfg.trials);

  std::map<int, double> spread_by_n;
  double global_min = std::numeric_limits<double>::infinity();
  double single_freq_err = 0.0;
  for (int n : ns) {
    UniformGrid g = UniformGrid::of_size(std::max(cfg.grid_m, 8 * (n + 1)));
    std::vector<double> rhos;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      Rng rng(mix64((static_cast<uint64_t>(cfg.seed) << 20) ^ (static_cast<uint64_t>(n) << 10) ^
                    static_cast<uint64_t>(trial)));
      TrigPoly T = seeded_real_poly(n, rng);
      double dn = lp_norm(sample_poly(poly_derivative(T, cfg.r), g), spec);
      for (int j = 0; j < 6; ++j) {
        double h = pi_const / n * std::pow(2.0, -0.5 * j);
        double den = lp_norm(sample_poly(poly_difference(T, h, cfg.r), g), spec);
        if (den <= 0.0) continue;
        double rho = std::pow(h, cfg.r) * dn / den;
        ReportRow rr;
        rr.fn = "seed" + std::to_string(trial);
        rr.p = cfg.p;
        rr.r = cfg.r;
        rr.n = n;
        rr.h = h;
        rr.quantity = "stechkin_ratio";
        rr.value = rho;
        rep.add_row(rr);
        rhos.push_back(rho);
        global_min = std::min(global_min, rho);
      }
    }
    RatioStats st = ratio_stats(rhos);
    rep.ratio_stats["stechkin:n=" + std::to_string(n)] = st;
    spread_by_n[n] = st.spread;

    // single frequency nu = n: |Delta_h^r e^{inx}| is constant, so the ratio
    // (nh)^r / (2 sin(nh/2))^r is exact at any grid size
    TrigPoly mono = TrigPoly::zero(n);
    mono.set_coeff(n, 1.0);
    for (int j = 0; j < 6; ++j) {
      double h = pi_const / n * std::pow(2.0, -0.5 * j);
      double u = static_cast<double>(n) * h;
      double closed = std::pow(u / (2.0 * std::sin(u / 2.0)), cfg.r);
      double den = lp_norm(sample_poly(poly_difference(mono, h, cfg.r), g), spec);
      double measured = std::pow(h, cfg.r) *
                        lp_norm(sample_poly(poly_derivative(mono, cfg.r), g), spec) /
                        den;
      ReportRow rr;
      rr.fn = "e_inx";
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.n = n;
      rr.h = h;
      rr.quantity = "single_freq_ratio";
      rr.value = measured;
      rep.add_row(rr);
      single_freq_err = std::max(single_freq_err, std::abs(measured / closed - 1.0));
    }
  }
  double s_first = spread_by_n[ns.front()], s_last = spread_by_n[ns.back()];
  rep.add_verdict("spread_stable", s_last <= 2.0 * s_first,
                  "spread " + fmt4(s_last) + " at n=" + std::to_string(ns.back()) + " vs " +
                      fmt4(s_first) + " at n=" + std::to_string(ns.front()));
  rep.add_verdict("single_frequency_law", single_freq_err <= 1e-10,
                  "max relative deviation from (nh)^r (2 sin(nh/2))^{-r} = " +
                      fmt4(single_freq_err));
  if (cfg.p >= 1.0)
    rep.add_verdict("difference_below_derivative", global_min >= 1.0 - 1e-6,
                    "min ratio = " + fmt4(global_min) +
                        " (h^r ||T^{(r)}|| dominates ||Delta_h^r T|| for p >= 1)");
  return rep;
}

Report verify_direct_inverse_holder(const RunConfig& cfg) {
  Report rep;
  rep.name = "direct-inverse";
  if (std::isinf(cfg.p))
    throw std::invalid_argument("direct-inverse: the Holder-norm solver needs finite p");
  HolderSpec hs = holder_spec_for(cfg);
  QuasiNormSpec spec = hs.norm;
  double p1 = spec.p1();
  std::vector<CatalogEntry> entries = resolve_entries(cfg, {"lacunary08"});
  std::vector<int> ladder =
      ns_or_default(cfg, cfg.p < 1.0 ? std::vector<int>{0, 1, 2, 4, 8, 16}
                                     : std::vector<int>{0, 1, 2, 4, 8, 16, 32, 64});
  UniformGrid gm = UniformGrid::of_size(cfg.grid_m);
  HGrid coarse = HGrid::geometric(two_pi * 1e-3, two_pi, 8);
  stamp_core(rep, cfg, labels_of(entries), ladder);
  stamp_holder(rep, cfg);

  bool theta_valid = cfg.alpha < std::min(cfg.r, cfg.k) || (cfg.alpha == cfg.k && cfg.k == cfg.r);
  bool psi_valid = cfg.p >= 1.0 || cfg.alpha < cfg.r;
  double max_dir_theta = 0.0, max_dir_psi = 0.0, max_dir_int = 0.0;
  double max_inv_theta = 0.0, max_inv_psi = 0.0;

  for (const CatalogEntry& e : entries) {
    const std::string& fname = e.fn.label();
    OmegaSweep sweep_k(e.fn, cfg.k, spec, gm);
    OmegaSweep sweep_sum(e.fn, cfg.k + cfg.r, spec, gm);
    NestedDiffTable table(e.fn, cfg.k, cfg.r, spec, gm, coarse);
    HolderChain chain{cfg, e.fn, hs};
    std::map<int, double> eh;
    std::vector<std::pair<double, double>> fit_pts;
    for (int n : ladder) {
      eh[n] = chain.at(n);
      ReportRow rr;
      rr.fn = fname;
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.alpha = cfg.alpha;
      rr.k = cfg.k;
      rr.n = n;
      rr.quantity = "en_holder";
      rr.value = eh[n];
      rep.add_row(rr);
      if (n >= 2 && eh[n] > 0.0) fit_pts.push_back({1.0 / n, eh[n]});
    }
    for (size_t i = 0; i < ladder.size(); ++i) {
      int n = ladder[i];
      if (n < 1) continue;
      double th = sweep_k.theta(cfg.alpha, 1.0 / n);
      double ps = table.psi(cfg.alpha, 1.0 / n);
      ReportRow rr;
      rr.fn = fname;
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.alpha = cfg.alpha;
      rr.k = cfg.k;
      rr.n = n;
      rr.quantity = "theta";
      rr.value = th;
      rep.add_row(rr);
      rr.quantity = "psi";
      rr.value = ps;
      rep.add_row(rr);
      if (th > 0.0) {
        double ratio = eh[n] / th;
        rr.quantity = "direct_theta_ratio";
        rr.value = ratio;
        rep.add_row(rr);
        if (theta_valid) max_dir_theta = std::max(max_dir_theta, ratio);
      }
      if (ps > 0.0) {
        double ratio = eh[n] / ps;
        rr.quantity = "direct_psi_ratio";
        rr.value = ratio;
        rep.add_row(rr);
        if (psi_valid) max_dir_psi = std::max(max_dir_psi, ratio);
      }
      if (cfg.p < 1.0) {
        double integ = modulus_tail_integral(sweep_sum, cfg.alpha, cfg.p, 1.0 / n);
        if (integ > 0.0) {
          rr.quantity = "direct_integral_ratio";
          rr.value = eh[n] / integ;
          rep.add_row(rr);
          max_dir_int = std::max(max_dir_int, eh[n] / integ);
        }
      }

      // dyadic partial sums of Holder errors: the converse estimates divide
      // theta by n^{k-alpha} and psi by n^k against the same sum structure
      double s_theta = 0.0, s_psi = 0.0;
      for (size_t j = 0; j <= i; ++j) {
        int nu = ladder[j];
        if (nu > n) break;
        int gap = (j + 1 < ladder.size()) ? std::min(ladder[j + 1], n + 1) - nu : 1;
        if (gap < 1) gap = 1;
        double et = (cfg.k - cfg.alpha) * p1 - 1.0;
        double ep = cfg.k * p1 - 1.0;
        double node_t = et >= 0.0 ? static_cast<double>(nu + gap) : static_cast<double>(nu + 1);
        double node_p = ep >= 0.0 ? static_cast<double>(nu + gap) : static_cast<double>(nu + 1);
        s_theta += gap * std::pow(node_t, et) * std::pow(eh[nu], p1);
        s_psi += gap * std::pow(node_p, ep) * std::pow(eh[nu], p1);
      }
      double rhs_theta = std::pow(static_cast<double>(n), -(cfg.k - cfg.alpha)) *
                         std::pow(s_theta, 1.0 / p1);
      double rhs_psi = std::pow(static_cast<double>(n), -static_cast<double>(cfg.k)) *
                       std::pow(s_psi, 1.0 / p1);
      if (rhs_theta > 0.0) {
        rr.quantity = "inverse_theta_ratio";
        rr.value = th / rhs_theta;
        rep.add_row(rr);
        max_inv_theta = std::max(max_inv_theta, th / rhs_theta);
      }
      if (rhs_psi > 0.0) {
        rr.quantity = "inverse_psi_ratio";
        rr.value = ps / rhs_psi;
        rep.add_row(rr);
        max_inv_psi = std::max(max_inv_psi, ps / rhs_psi);
      }
    }
    if (fit_pts.size() >= 4) {
      RateFit fit = rate_fit(fit_pts);
      rep.fitted_slopes["en_holder:" + fname] = fit;
      double gamma = fname == "lacunary05" ? 0.5 : fname == "lacunary08" ? 0.8 : -1.0;
      if (gamma > 0.0 && gamma - cfg.alpha >= 0.1)
        rep.add_verdict("holder_rate:" + fname,
                        std::abs(fit.slope - (gamma - cfg.alpha)) <= 0.35,
                        "slope " + fmt4(fit.slope) + " expected " + fmt4(gamma - cfg.alpha));
    }
  }
  if (theta_valid)
    rep.add_verdict("direct_theta_bounded", max_dir_theta <= 100.0,
                    "max E_n(f)_H / theta = " + fmt4(max_dir_theta));
  if (psi_valid)
    rep.add_verdict("direct_psi_bounded", max_dir_psi <= 100.0,
                    "max E_n(f)_H / psi = " + fmt4(max_dir_psi));
  if (cfg.p < 1.0)
    rep.add_verdict("direct_integral_bounded", max_dir_int <= 100.0,
                    "max E_n(f)_H / tail integral = " + fmt4(max_dir_int));
  rep.add_verdict("inverse_theta_bounded", max_inv_theta <= 100.0,
                  "max theta / dyadic sum bound = " + fmt4(max_inv_theta));
  rep.add_verdict("inverse_psi_bounded", max_inv_psi <= 100.0,
                  "max psi / dyadic sum bound = " + fmt4(max_inv_psi));
  return rep;
}

Report verify_sandwich(const RunConfig& cfg) {
  Report rep;
  rep.name = "sandwich";
  if (std::isinf(cfg.p))
    throw std::invalid_argument("sandwich: the Holder-norm solver needs finite p");
  HolderSpec hs = holder_spec_for(cfg);
  QuasiNormSpec spec = hs.norm;
  double p1 = spec.p1();
  std::vector<CatalogEntry> entries = resolve_entries(cfg, {"triangle", "square", "lacunary05"});
  std::vector<int> ns = ns_or_default(cfg, cfg.p < 1.0 ? std::vector<int>{2, 4, 8}
                                                       : std::vector<int>{4, 8, 16, 32});
  stamp_core(rep, cfg, labels_of(entries), ns);
  stamp_holder(rep, cfg);

  double max_lower = 0.0, max_upper = 0.0, max_tail_frac = 0.0;
  bool lower_broken = false;
  for (const CatalogEntry& e : entries) {
    const std::string& fname = e.fn.label();
    std::vector<int> nus;
    for (int n : ns) for (int m : {1, 2, 4, 8}) nus.push_back(n * m);
    std::sort(nus.begin(), nus.end());
    nus.erase(std::unique(nus.begin(), nus.end()), nus.end());
    EnChain lp_chain{cfg, e.fn, spec};
    std::map<int, double> ep;
    for (int nu : nus) {
      ep[nu] = lp_chain.at(nu);
      ReportRow rr;
      rr.fn = fname;
      rr.p = cfg.p;
      rr.n = nu;
      rr.quantity = "en_lp";
      rr.value = ep[nu];
      rep.add_row(rr);
    }
    HolderChain h_chain{cfg, e.fn, hs};
    for (int n : ns) {
      double ehn = h_chain.at(n);
      double lhs = std::pow(static_cast<double>(n), cfg.alpha) * ep[n];
      double expo = cfg.alpha * p1 - 1.0;
      double s = 0.0;
      for (int m : {1, 2, 4}) {
        int nu = n * m;
        double node = expo >= 0.0 ? static_cast<double>(2 * nu) : static_cast<double>(nu);
        s += nu * std::pow(node, expo) * std::pow(ep[nu], p1);
      }
      // scale of the first discarded dyadic block, reported but kept out of
      // the bound so the measured constant stays conservative
      double tail_node = expo >= 0.0 ? static_cast<double>(16 * n) : static_cast<double>(8 * n);
      double tail = 8.0 * n * std::pow(tail_node, expo) * std::pow(ep[8 * n], p1);
      double rhs = lhs + std::pow(s, 1.0 / p1);
      ReportRow rr;
      rr.fn = fname;
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.alpha = cfg.alpha;
      rr.n = n;
      rr.quantity = "en_holder";
      rr.value = ehn;
      rep.add_row(rr);
      rr.quantity = "sandwich_lhs";
      rr.value = lhs;
      rep.add_row(rr);
      rr.quantity = "sandwich_rhs";
      rr.value = rhs;
      rep.add_row(rr);
      rr.quantity = "tail_block";
      rr.value = tail;
      rep.add_row(rr);
      double scale = std::max(ehn, rhs);
      if (scale <= 0.0) continue;  // constant function: every term vanishes
      if (ehn > 1e-12 * scale) {
        max_lower = std::max(max_lower, lhs / ehn);
      } else if (lhs > 1e-10 * scale) {
        lower_broken = true;
      }
      if (rhs > 0.0) {
        max_upper = std::max(max_upper, ehn / rhs);
        max_tail_frac = std::max(max_tail_frac, std::pow(tail, 1.0 / p1) / rhs);
      }
    }
  }
  rep.add_verdict("lower_ordering", !lower_broken && max_lower <= 100.0,
                  "max n^alpha E_n(f)_p / E_n(f)_H = " + fmt4(max_lower));
  rep.add_verdict("upper_ordering", max_upper <= 100.0,
                  "max E_n(f)_H / (n^alpha E_n + truncated sum) = " + fmt4(max_upper));
  rep.add_verdict("tail_reported", true,
                  "largest discarded-block share of the bound = " + fmt4(max_tail_frac) +
                      " (sum truncated at 8n)");
  return rep;
}

Report counterexample_h11(const RunConfig& cfg) {
  Report rep;
  rep.name = "counterexample";
  QuasiNormSpec spec = spec_for(cfg.p);
  std::vector<int> ns = ns_or_default(cfg, {4, 8, 16, 32});
  CatalogEntry tri = triangle_wave();
  stamp_core(rep, cfg, {tri.fn.label()}, ns);
  rep.parameters["r"] = "1";
  rep.parameters["alpha"] = "1";

  const HGrid& hg = HGrid::shared();
  std::vector<double> errs, sems;
  double max_scaled = 0.0;
  TrigPoly warm;
  bool has_warm = false;
  for (int n : ns) {
    // p < 1: approximate the staircase phi_n, not the triangle. Its plateaus
    // make ||phi_n'||_p ~ n^{1-1/p} vanish, the approximants inherit that
    // small derivative, and the triangle's slope is then stuck in the
    // residual: the truncated seminorm cannot decay even as the L_p error
    // does. Best approximants of the triangle itself would chase the slope
    // and kill the seminorm, which is exactly the p >= 1 control behavior.
    CatalogEntry phi = ramp_phi(n);
    const PeriodicFn& target = cfg.p < 1.0 ? phi.fn : tri.fn;
    // the solver grid must resolve the pi/n^2 ramps when the target is phi_n
    int gs_size = cfg.p < 1.0 ? std::max(cfg.solver_m, 4 * n * n)
                              : std::max(cfg.solver_m, 64 * n);
    UniformGrid gs = UniformGrid::of_size(gs_size);
    ApproxResult res = best_approx(target, n, spec, gs, cfg.budget, has_warm ? &warm : nullptr);
    warm = res.poly;
    has_warm = true;
    UniformGrid gm = UniformGrid::of_size(std::max(cfg.grid_m, 64 * n));
    PeriodicFn res_fn = residual(tri.fn, res.poly);
    double err = lp_norm(res_fn, spec, gm);
    Eigen::ArrayXd raw = diff_norm_sweep(res_fn, 1, spec, gm, hg);
    double sem = 0.0;
    for (int i = 0; i < hg.size() && hg[i] <= 1.0 / n + 1e-15; ++i)
      sem = std::max(sem, raw[i] / hg[i]);
    errs.push_back(err);
    sems.push_back(sem);
    ReportRow rr;
    rr.fn = tri.fn.label();
    rr.p = cfg.p;
    rr.r = 1;
    rr.alpha = 1.0;
    rr.n = n;
    rr.quantity = "lp_error";
    rr.value = err;
    rep.add_row(rr);
    rr.quantity = "seminorm_trunc";
    rr.value = sem;
    rep.add_row(rr);
    rr.quantity = "deriv_norm";
    rr.value = lp_norm(PeriodicFn::from_poly(poly_derivative(res.poly, 1), "Tn'"), spec, gm);
    rep.add_row(rr);

    // staircase scaling row: a step of 1/n crosses at most one stair of rise
    // pi/n on an x-fraction ~ nh/pi, so omega_1(phi_n, 1/n)_p = (pi/n) (1/pi)^{1/p}
    // for every p and n * omega stays pinned at pi^{1 - 1/p}
    UniformGrid gphi = UniformGrid::of_size(std::max(cfg.grid_m, 4 * n * n));
    double om_phi = omega(phi.fn, 1, 1.0 / n, spec, gphi);
    double scaled = om_phi * n;
    max_scaled = std::max(max_scaled, scaled);
    rr.fn = phi.fn.label();
    rr.quantity = "staircase_omega";
    rr.value = om_phi;
    rep.add_row(rr);
    rr.quantity = "staircase_omega_scaled";
    rr.value = scaled;
    rep.add_row(rr);
  }
  if (cfg.p < 1.0) {
    // the error obeys ||f - T_n||_p <= C/n; demand at least half that fold,
    // which over the default 4 -> 32 span is a 4x decrease
    double need = 2.0 * static_cast<double>(ns.front()) / ns.back();
    bool decays = errs.back() <= need * errs.front();
    double min_sem = *std::min_element(sems.begin(), sems.end());
    rep.add_verdict("error_decays", decays,
                    "||f - T_n||_p fell " + fmt4(errs.front() / std::max(errs.back(), 1e-300)) +
                        "x from n=" + std::to_string(ns.front()) + " to n=" +
                        std::to_string(ns.back()) + " (need >= " + fmt4(1.0 / need) + "x)");
    rep.add_verdict("seminorm_persists", min_sem >= 0.5 * sems.front(),
                    "min truncated seminorm " + fmt4(min_sem) + " vs " + fmt4(sems.front()) +
                        " at n=" + std::to_string(ns.front()));
  } else {
    rep.add_verdict("seminorm_decays", sems.back() <= 0.6 * sems.front(),
                    "truncated seminorm " + fmt4(sems.back()) + " at n=" +
                        std::to_string(ns.back()) + " vs " + fmt4(sems.front()) + " at n=" +
                        std::to_string(ns.front()));
  }
  rep.add_verdict("staircase_modulus_scaling", max_scaled <= 10.0,
                  "max n omega_1(phi_n, 1/n)_p = " + fmt4(max_scaled));
  return rep;
}

Report verify_strong_converse(const RunConfig& cfg) {
  Report rep;
  rep.name = "strong-converse";
  HolderSpec hs = holder_spec_for(cfg);
  QuasiNormSpec spec = hs.norm;
  std::vector<CatalogEntry> entries = resolve_entries(cfg, {"lacunary05", "cosx"});
  const CatalogEntry& f = entries[0];
  const CatalogEntry& f2 = entries.size() > 1 ? entries[1] : entries[0];
  std::vector<int> ns = ns_or_default(cfg, dyadic_default(cfg.p));
  UniformGrid gm = UniformGrid::of_size(cfg.grid_m);
  UniformGrid gfam = UniformGrid::of_size(std::min(cfg.grid_m, 512));
  UniformGrid lg = UniformGrid::of_size(cfg.lambda_points);
  HolderSpec hs_coarse = hs;
  hs_coarse.points_per_decade = 8;
  stamp_core(rep, cfg, labels_of(entries), ns);
  stamp_holder(rep, cfg);
  rep.parameters["kernel"] = cfg.kernel;
  rep.parameters["lambda_points"] = std::to_string(cfg.lambda_points);

  // fixed kernel: the mean commutes with differences, so the modulus-form
  // majorant is an honest independent yardstick for the Holder error
  if (cfg.p >= 1.0) {
    OmegaSweep sweep_k(f.fn, cfg.k, spec, gm);
    HGrid coarse = HGrid::geometric(two_pi * 1e-3, two_pi, 8);
    NestedDiffTable table(f.fn, cfg.k, cfg.r, spec, gm, coarse);
    std::vector<double> hyps, ratios;
    for (int n : ns) {
      Kernel K = kernel_catalog(cfg.kernel, n);
      TrigPoly Ln = fourier_mean_poly(f.fn, K, gm);
      PeriodicFn res = residual(f.fn, Ln);
      double errp = lp_norm(res, spec, gm);
      double om = sweep_k.at(1.0 / n);
      double lhs_h = holder_norm(res, hs, gm);
      double sup_part = 0.0;
      for (int i = 0; i < coarse.size(); ++i)
        sup_part = std::max(sup_part,
                            table.omega_row(i, 1.0 / n) / std::pow(coarse[i], cfg.alpha));
      double w_h = om + sup_part;
      ReportRow rr;
      rr.fn = f.fn.label();
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.alpha = cfg.alpha;
      rr.k = cfg.k;
      rr.n = n;
      rr.quantity = "mean_error_lp";
      rr.value = errp;
      rep.add_row(rr);
      rr.quantity = "omega_at_1_over_n";
      rr.value = om;
      rep.add_row(rr);
      rr.quantity = "mean_error_holder";
      rr.value = lhs_h;
      rep.add_row(rr);
      rr.quantity = "w_holder";
      rr.value = w_h;
      rep.add_row(rr);
      if (om > 0.0) {
        hyps.push_back(errp / om);
        rr.quantity = "hypothesis_ratio";
        rr.value = hyps.back();
        rep.add_row(rr);
      }
      if (w_h > 0.0) {
        ratios.push_back(lhs_h / w_h);
        rr.quantity = "holder_ratio";
        rr.value = ratios.back();
        rep.add_row(rr);
      }
    }
    rep.ratio_stats["hypothesis"] = ratio_stats(hyps);
    rep.ratio_stats["holder"] = ratio_stats(ratios);
    rep.add_verdict("hypothesis_bounded", spread_of(hyps) <= 10.0,
                    "||f - L_n f||_p / omega_k spread = " + fmt4(spread_of(hyps)));
    rep.add_verdict("holder_two_sided", spread_of(ratios) <= 4.0,
                    "Holder-error / modulus-majorant spread = " + fmt4(spread_of(ratios)));
  }

  // family (lambda-translated node) means of a smooth companion: theta form
  // and the divergence ratio with a vanishing weight on the small-h term
  {
    OmegaSweep sweep_r(f2.fn, cfg.r, spec, gm);
    std::vector<double> theta_ratios, divs;
    for (int n : ns) {
      Kernel K = kernel_catalog(cfg.kernel, n);
      std::vector<TrigPoly> polys;
      polys.reserve(lg.size);
      for (int j = 0; j < lg.size; ++j)
        polys.push_back(family_mean_poly(f2.fn, K, lg.node(j)));
      FamilyHolderError fe = family_holder_error(f2.fn, polys, hs_coarse, gfam, lg);
      double om = sweep_r.at(1.0 / n);
      double th = sweep_r.theta(cfg.alpha, 1.0 / n);
      double big = std::pow(static_cast<double>(n), cfg.alpha) * om + fe.value;
      double eps_n = 1.0 / std::log(std::max(n, 3));
      double div = th / (eps_n * std::pow(static_cast<double>(n), cfg.alpha) * om + fe.value);
      ReportRow rr;
      rr.fn = f2.fn.label();
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.alpha = cfg.alpha;
      rr.n = n;
      rr.quantity = "family_error_holder";
      rr.value = fe.value;
      rep.add_row(rr);
      rr.quantity = "theta";
      rr.value = th;
      rep.add_row(rr);
      if (th > 0.0) {
        theta_ratios.push_back(big / th);
        rr.quantity = "theta_form_ratio";
        rr.value = theta_ratios.back();
        rep.add_row(rr);
      }
      divs.push_back(div);
      rr.quantity = "divergence";
      rr.value = div;
      rep.add_row(rr);
    }
    rep.ratio_stats["theta_form"] = ratio_stats(theta_ratios);
    rep.add_verdict("theta_two_sided", spread_of(theta_ratios) <= 10.0,
                    "(n^alpha omega_r + family Holder error) / theta spread = " +
                        fmt4(spread_of(theta_ratios)));
    rep.add_verdict("divergence_grows", divs.back() >= 1.5 * divs.front(),
                    "divergence ratio " + fmt4(divs.front()) + " -> " + fmt4(divs.back()) +
                        " as n goes " + std::to_string(ns.front()) + " -> " +
                        std::to_string(ns.back()));
  }

  // p < 1: the family does not commute with differences, so the measured
  // modulus of the family error is a genuine second quantity
  if (cfg.p < 1.0) {
    HolderChain chain{cfg, f.fn, hs};
    HGrid hsub = hs_coarse.hgrid();
    std::vector<double> fam_ratios;
    for (int n : ns) {
      Kernel K = kernel_catalog(cfg.kernel, n);
      std::vector<TrigPoly> polys;
      for (int j = 0; j < lg.size; ++j)
        polys.push_back(family_mean_poly(f.fn, K, lg.node(j)));
      FamilyHolderError fe = family_holder_error(f.fn, polys, hs_coarse, gfam, lg);
      double sup_w = 0.0;
      for (int i = 0; i < hsub.size(); i += 3) {
        double h = hsub[i];
        PeriodicFn d = finite_difference(f.fn, h, cfg.r);
        Eigen::ArrayXd per(lg.size);
        for (int j = 0; j < lg.size; ++j) {
          TrigPoly Td = family_mean_poly(d, K, lg.node(j));
          Eigen::ArrayXcd s = sample_poly(Td, gfam);
          for (int m = 0; m < gfam.size; ++m) s[m] = d(gfam.node(m)) - s[m];
          per[j] = lp_norm(s, spec);
        }
        sup_w = std::max(sup_w, lp_norm(per, spec) / std::pow(h, cfg.alpha));
      }
      double w_h = fe.lp_part + sup_w;
      double ehn = chain.at(n);
      double a = w_h + ehn;
      ReportRow rr;
      rr.fn = f.fn.label();
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.alpha = cfg.alpha;
      rr.n = n;
      rr.quantity = "family_error_holder";
      rr.value = fe.value;
      rep.add_row(rr);
      rr.quantity = "w_holder_family";
      rr.value = w_h;
      rep.add_row(rr);
      rr.quantity = "en_holder";
      rr.value = ehn;
      rep.add_row(rr);
      if (a > 0.0) {
        fam_ratios.push_back(fe.value / a);
        rr.quantity = "family_ratio";
        rr.value = fam_ratios.back();
        rep.add_row(rr);
      }
    }
    rep.ratio_stats["family"] = ratio_stats(fam_ratios);
    rep.add_verdict("family_two_sided", spread_of(fam_ratios) <= 10.0,
                    "family Holder error / (w_H + E_n(f)_H) spread = " +
                        fmt4(spread_of(fam_ratios)));
  }
  return rep;
}

Report verify_pr2_lower_bound(const RunConfig& cfg) {
  Report rep;
  rep.name = "pr2";
  if (cfg.p > 1.0)
    throw std::invalid_argument("pr2: the node-average lower bound needs 0 < p <= 1");
  HolderSpec hs = holder_spec_for(cfg);
  QuasiNormSpec spec = hs.norm;
  std::vector<CatalogEntry> entries = resolve_entries(cfg, {"square"});
  std::vector<int> ns = ns_or_default(cfg, {2, 4, 8, 16});
  UniformGrid lgm = UniformGrid::of_size(256);
  const HGrid& hg = HGrid::shared();
  stamp_core(rep, cfg, labels_of(entries), ns);
  stamp_holder(rep, cfg);

  double max_ratio = 0.0, max_en0 = 0.0;
  bool bracket_ok = true;
  for (const CatalogEntry& e : entries) {
    const std::string& fname = e.fn.label();
    HolderChain chain{cfg, e.fn, hs};
    EnChain half_chain{cfg, e.fn, spec};
    TrigPoly warm0;
    bool has_warm0 = false;
    std::map<int, double> ehalf;
    for (int n : ns) ehalf[std::max(n / 2, 0)] = 0.0;
    for (auto& kv : ehalf) kv.second = half_chain.at(kv.first);
    for (int n : ns) {
      double sup_t = 0.0;
      double exponent = 1.0 - 1.0 / cfg.p;
      for (int i = 0; i < hg.size(); i += 4) {
        double h = hg[i];
        PeriodicFn td = tilde(finite_difference(e.fn, h, cfg.r), n);
        sup_t = std::max(sup_t, lp_norm(td, spec, lgm) / std::pow(h, cfg.alpha));
      }
      double left = std::pow(static_cast<double>(n), exponent) * sup_t;
      double ehn = chain.at(n);
      ReportRow rr;
      rr.fn = fname;
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.alpha = cfg.alpha;
      rr.n = n;
      rr.quantity = "tilde_lower";
      rr.value = left;
      rep.add_row(rr);
      rr.quantity = "en_holder";
      rr.value = ehn;
      rep.add_row(rr);
      if (ehn > 0.0) {
        max_ratio = std::max(max_ratio, left / ehn);
        rr.quantity = "lower_ratio";
        rr.value = left / ehn;
        rep.add_row(rr);
      }

      // zero-mean error bracket: node-average lower bound vs solver value,
      // and the two-sided scale n^{1-1/p}||f~_n||_p + E_{n/2}(f)_p above it
      UniformGrid gs = UniformGrid::of_size(solver_grid_size(cfg, n));
      double lo = en_zero_lower_bound(e.fn, n, spec, lgm);
      ApproxResult z = en_zero(e.fn, n, spec, gs, cfg.budget, has_warm0 ? &warm0 : nullptr);
      warm0 = z.poly;
      has_warm0 = true;
      if (lo > z.value * (1.0 + 1e-9)) bracket_ok = false;
      double tilde_f = lp_norm(tilde(e.fn, n), spec, lgm);
      double scale = std::pow(static_cast<double>(n), exponent) * tilde_f + ehalf[n / 2];
      rr.quantity = "en0_lower";
      rr.value = lo;
      rep.add_row(rr);
      rr.quantity = "en0_upper";
      rr.value = z.value;
      rep.add_row(rr);
      rr.quantity = "en0_scale";
      rr.value = scale;
      rep.add_row(rr);
      if (scale > 0.0) max_en0 = std::max(max_en0, z.value / scale);
    }
  }
  rep.add_verdict("lower_vs_holder", max_ratio <= 100.0,
                  "max n^{1-1/p} sup_h ||(Delta_h^r f)~_n||_p h^{-alpha} / E_n(f)_H = " +
                      fmt4(max_ratio));
  rep.add_verdict("en0_bracket", bracket_ok,
                  "node-average lower bound stayed below the solver value at every n");
  rep.add_verdict("en0_two_sided", max_en0 <= 100.0,
                  "max E_n^0 / (n^{1-1/p}||f~_n||_p + E_{n/2}) = " + fmt4(max_en0));
  return rep;
}

Report verify_integral_condition(const RunConfig& cfg) {
  Report rep;
  rep.name = "integral-condition";
  HolderSpec hs = holder_spec_for(cfg);
  QuasiNormSpec spec = hs.norm;
  double p1 = spec.p1();
  std::vector<CatalogEntry> entries = resolve_entries(cfg, {"triangle"});
  UniformGrid gm = UniformGrid::of_size(cfg.grid_m);
  const HGrid& hg = HGrid::shared();
  HGrid coarse = HGrid::geometric(two_pi * 1e-3, two_pi, 8);
  stamp_core(rep, cfg, labels_of(entries), {});
  stamp_holder(rep, cfg);

  double max_cond = 0.0;
  std::vector<double> equivs;
  for (const CatalogEntry& e : entries) {
    const std::string& fname = e.fn.label();
    OmegaSweep sweep(e.fn, cfg.r + cfg.k, spec, gm);
    NestedDiffTable table(e.fn, cfg.k, cfg.r, spec, gm, coarse);
    for (int i = 16; i < hg.size(); i += 8) {
      double delta = hg[i];
      if (delta > 1.0) break;  // the equivalence is a small-delta statement
      double integ = modulus_tail_integral(sweep, cfg.alpha, p1, delta);
      double om = sweep.at(delta);
      double ps = delta >= coarse[0] ? table.psi(cfg.alpha, delta) : 0.0;
      ReportRow rr;
      rr.fn = fname;
      rr.p = cfg.p;
      rr.r = cfg.r;
      rr.alpha = cfg.alpha;
      rr.k = cfg.k;
      rr.h = delta;
      rr.quantity = "tail_integral";
      rr.value = integ;
      rep.add_row(rr);
      if (om > 0.0) {
        double cond = integ * std::pow(delta, cfg.alpha) / om;
        max_cond = std::max(max_cond, cond);
        rr.quantity = "condition_ratio";
        rr.value = cond;
        rep.add_row(rr);
      }
      if (ps > 0.0 && integ > 0.0) {
        double eq = integ / ps;
        equivs.push_back(eq);
        rr.quantity = "equivalence_ratio";
        rr.value = eq;
        rep.add_row(rr);
      }
    }
  }
  rep.add_verdict("condition_measured", true,
                  "sup over delta of integral * delta^alpha / omega_{r+k}(delta) = " +
                      fmt4(max_cond) + " (hypothesis gauge, not gated)");
  if (!equivs.empty()) rep.ratio_stats["integral_vs_psi"] = ratio_stats(equivs);
  bool open_case = cfg.p < 1.0 && std::abs(cfg.alpha - cfg.r) < 1e-12;
  if (open_case)
    rep.add_verdict("integral_equivalent_to_psi", true,
                    "alpha = r with p < 1: reported without a gate; spread = " +
                        fmt4(equivs.empty() ? 0.0 : spread_of(equivs)));
  else
    rep.add_verdict("integral_equivalent_to_psi",
                    !equivs.empty() && spread_of(equivs) <= 20.0,
                    "tail integral / psi spread = " +
                        fmt4(equivs.empty() ? 0.0 : spread_of(equivs)));
  return rep;
}

Report verify_modulus_properties(const RunConfig& cfg) {
  Report rep;
  rep.name = "modulus-properties";
  const HGrid& sh = HGrid::shared();
  HGrid coarse = HGrid::geometric(two_pi * 1e-3, two_pi, 8);

  struct Subject {
    std::string label;
    PeriodicFn fn;
    bool smooth;  // trig polynomial: small quadrature grids suffice
  };
  std::vector<Subject> fns;
  for (const std::string& name : cfg.fns.empty() ? catalog_names() : cfg.fns)
    fns.push_back({name, find_fn(name).fn, false});
  Rng rng(mix64(static_cast<uint64_t>(cfg.seed) ^ 0x5EEDF00Dull));
  for (int t = 0; t < cfg.trials; ++t) {
    int deg = 3 + static_cast<int>(rng.next() % 14);
    TrigPoly T = seeded_real_poly(deg, rng);
    fns.push_back(
        {"seed" + std::to_string(t), PeriodicFn::from_poly(T, "seed" + std::to_string(t)), true});
  }
  stamp_core(rep, cfg, {"catalog+seeded"}, {});
  rep.parameters["trials"] = std::to_string(cfg.trials);

  struct PropCount {
    long checks = 0, fails = 0;
    std::string first;
  };
  std::map<std::string, PropCount> pc;
  auto check = [&](const std::string& prop, bool ok, const std::string& where) {
    PropCount& c = pc[prop];
    ++c.checks;
    if (!ok && c.fails++ == 0) c.first = where;
  };

  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> ps = {0.5, 1.0, 2.0, inf};
  // cutoffs from 0.06 up: below that, |Delta f|^p quadrature around jumps is
  // noisier than the 5% slack even on the large grids
  const std::vector<int> cut_idx = {64, 96, 128};
  const double slack = 1.05, sandwich_slack = 1.2;

  for (const auto& [label, fn, smooth] : fns) {
    for (double p : ps) {
      QuasiNormSpec spec = spec_for(p);
      double p1 = spec.p1();
      std::string where = label + ", p=" + fmt4(p);
      // grid sizes validated against the tight square-wave cases: p < 1 with
      // jumps needs 32k samples before the 2^{1/p1} constants are clean
      UniformGrid g =
          UniformGrid::of_size(smooth ? 256 : p < 1.0 ? std::max(cfg.grid_m, 32768) : cfg.grid_m);
      UniformGrid gt = UniformGrid::of_size(smooth ? 256 : std::min(cfg.grid_m, 2048));
      OmegaSweep w1(fn, 1, spec, g, sh), w2(fn, 2, spec, g, sh), w3(fn, 3, spec, g, sh);
      double nf = lp_norm(fn, spec, g);
      double tiny = 1e-13 * std::max(nf, 1.0);

      for (size_t ci = 0; ci < cut_idx.size(); ++ci) {
        double t = sh[cut_idx[ci]];
        check("order_reduction",
              w2.at(t) <= slack * std::pow(2.0, 1.0 / p1) * w1.at(t) + tiny &&
                  w3.at(t) <= slack * std::pow(2.0, 2.0 / p1) * w1.at(t) + tiny &&
                  w3.at(t) <= slack * std::pow(2.0, 1.0 / p1) * w2.at(t) + tiny &&
                  w1.at(t) <= slack * std::pow(2.0, 1.0 / p1) * nf + tiny,
              where + ", t=" + fmt4(t));
        if (ci > 0)
          check("omega_monotone",
                w1.at(sh[cut_idx[ci - 1]]) <= w1.at(t) * (1.0 + 1e-12) + tiny, where);
        for (int off : {8, 16}) {
          if (cut_idx[ci] + off >= sh.size()) continue;
          double lam = sh[cut_idx[ci] + off] / t;
          check("step_scaling",
                w1.at(sh[cut_idx[ci] + off]) <=
                        slack * std::pow(1.0 + lam, 1.0 / p1) * w1.at(t) + tiny &&
                    w2.at(sh[cut_idx[ci] + off]) <=
                        slack * std::pow(2.0, 1.0 / p1 - 1.0) *
                                std::pow(1.0 + lam, 1.0 / p1 + 1.0) * w2.at(t) +
                            tiny,
                where + ", lambda=" + fmt4(lam));
        }
        for (auto [kk, aa] : {std::pair<int, double>{1, 0.5}, std::pair<int, double>{2, 1.0}}) {
          OmegaSweep& wk = kk == 1 ? w1 : w2;
          if (ci > 0)
            check("theta_monotone",
                  wk.theta(aa, sh[cut_idx[ci - 1]]) <= wk.theta(aa, t) * (1.0 + 1e-12) + tiny,
                  where + ", k=" + std::to_string(kk));
          if (cut_idx[ci] + 16 < sh.size()) {
            double lam = sh[cut_idx[ci] + 16] / t;
            check("theta_scaling",
                  wk.theta(aa, sh[cut_idx[ci] + 16]) <=
                      slack * std::pow(static_cast<double>(kk), 1.0 / p1 - 1.0) *
                              std::pow(lam + 1.0, kk - aa + 1.0 / p1 - 1.0) * wk.theta(aa, t) +
                          tiny,
                  where + ", k=" + std::to_string(kk) + ", lambda=" + fmt4(lam));
          }
        }
      }

      for (auto [kk, rr] :
           {std::pair<int, int>{1, 1}, std::pair<int, int>{2, 1}, std::pair<int, int>{1, 2}}) {
        double aa = 0.5 * std::min(kk, rr);
        NestedDiffTable tab(fn, kk, rr, spec, gt, coarse);
        OmegaSweep wsum(fn, kk + rr, spec, gt, coarse);
        OmegaSweep wmin(fn, std::min(kk, rr), spec, gt, coarse);
        for (int di : {coarse.size() / 2, coarse.size() - 1}) {
          double delta = coarse[di];
          double psv = tab.psi(aa, delta);
          check("psi_theta_sandwich",
                wsum.theta(aa, delta) <= sandwich_slack * psv + tiny &&
                    psv <= sandwich_slack * std::pow(2.0, std::max(kk, rr) / p1) *
                                   wmin.theta(aa, delta) +
                               tiny,
                where + ", k=" + std::to_string(kk) + ", r=" + std::to_string(rr) +
                    ", delta=" + fmt4(delta));
        }
      }

      PeriodicFn g2 = fn.shifted(1.2345);
      Eigen::ArrayXcd su(g.size), sf(g.size), sg(g.size);
      for (int j = 0; j < g.size; ++j) {
        sf[j] = fn(g.node(j));
        sg[j] = g2(g.node(j));
        su[j] = sf[j] + sg[j];
      }
      check("quasi_triangle",
            std::pow(lp_norm(su, spec), p1) <=
                (1.0 + 1e-9) * (std::pow(lp_norm(sf, spec), p1) +
                                std::pow(lp_norm(sg, spec), p1)) +
                    tiny,
            where);
    }
  }

  for (const auto& [prop, c] : pc) {
    rep.add_verdict(prop, c.fails == 0,
                    c.fails == 0
                        ? std::to_string(c.checks) + " comparisons"
                        : std::to_string(c.fails) + "/" + std::to_string(c.checks) +
                              " failed, first at " + c.first);
    ReportRow rr;
    rr.fn = "all";
    rr.quantity = prop + "_checks";
    rr.value = static_cast<double>(c.checks);
    rep.add_row(rr);
  }
  return rep;
}

Report rate_scan(const RunConfig& cfg) {
  Report rep;
  rep.name = "rates";
  std::vector<std::string> names;
  if (cfg.fns.empty()) {
    for (const std::string& name : catalog_names())
      if (!find_fn(name).known_rates.empty()) names.push_back(name);
  } else {
    names = cfg.fns;
  }
  HGrid window = HGrid::geometric(1e-3, 1e-1, 32);
  UniformGrid g = UniformGrid::of_size(std::max(cfg.grid_m, 65536));
  stamp_core(rep, cfg, names, {});
  rep.parameters["h_window"] = "1e-3..1e-1";

  for (const std::string& name : names) {
    const CatalogEntry& e = find_fn(name);
    for (const auto& [key, expected] : e.known_rates) {
      // keys look like "omega:k=2,p=inf"
      if (key.rfind("omega:k=", 0) != 0) continue;
      size_t comma = key.find(",p=");
      if (comma == std::string::npos) continue;
      int k = std::stoi(key.substr(8, comma - 8));
      std::string pstr = key.substr(comma + 3);
      double p = pstr == "inf" ? std::numeric_limits<double>::infinity() : std::stod(pstr);
      QuasiNormSpec spec = spec_for(p);
      OmegaSweep sweep(e.fn, k, spec, g, window);
      std::vector<std::pair<double, double>> pts;
      for (int i = 0; i < window.size(); ++i) {
        double v = sweep.prefix()[i];
        ReportRow rr;
        rr.fn = name;
        rr.p = p;
        rr.k = k;
        rr.h = window[i];
        rr.quantity = "omega";
        rr.value = v;
        rep.add_row(rr);
        if (v > 0.0) pts.push_back({window[i], v});
      }
      if (pts.size() < 4) {
        rep.add_verdict("rate:" + name + ":" + key, false, "modulus vanished on the window");
        continue;
      }
      RateFit fit = rate_fit(pts);
      rep.fitted_slopes[name + ":" + key] = fit;
      ReportRow rr;
      rr.fn = name;
      rr.p = p;
      rr.k = k;
      rr.quantity = "fitted_slope";
      rr.value = fit.slope;
      rep.add_row(rr);
      rep.add_verdict("rate:" + name + ":" + key, fit.slope >= expected - 0.2,
                      "slope " + fmt4(fit.slope) + ", expected " + fmt4(expected) +
                          ", max log deviation " + fmt4(fit.residual));
    }
  }
  return rep;
}

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"jackson", verify_jackson},
      {"stechkin", verify_stechkin_nikolskii},
      {"direct-inverse", verify_direct_inverse_holder},
      {"sandwich", verify_sandwich},
      {"counterexample", counterexample_h11},
      {"strong-converse", verify_strong_converse},
      {"pr2", verify_pr2_lower_bound},
      {"integral-condition", verify_integral_condition},
      {"modulus-properties", verify_modulus_properties},
      {"rates", rate_scan},
  };
  return reg;
}

}  // namespace approxlab
