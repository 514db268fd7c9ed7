// approxlab: compute periodic quasi-norms, moduli of smoothness, Holder
// norms, best trigonometric approximations and kernel means, or run the
// named verification suites and write their reports.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "approxlab/experiments.hpp"
#include "approxlab/kernels.hpp"
#include "approxlab/moduli.hpp"
#include "approxlab/quasi_norm.hpp"
#include "approxlab/testfns.hpp"

using namespace approxlab;

namespace {

double parse_p(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("p: expected a number or 'inf', got " + s);
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON config file: same keys as the flags; flags given on the command line win.
void load_config(const std::string& path, RunConfig& cfg, std::string& p_str) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("fns")) cfg.fns = j["fns"].get<std::vector<std::string>>();
  if (j.contains("p")) {
    if (j["p"].is_string())
      p_str = j["p"].get<std::string>();
    else
      p_str = fmt(j["p"].get<double>());
  }
  if (j.contains("r")) cfg.r = j["r"].get<int>();
  if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("k")) cfg.k = j["k"].get<int>();
  if (j.contains("kernel")) cfg.kernel = j["kernel"].get<std::string>();
  if (j.contains("n_range")) cfg.n_range = j["n_range"].get<std::vector<int>>();
  if (j.contains("grid_m")) cfg.grid_m = j["grid_m"].get<int>();
  if (j.contains("solver_m")) cfg.solver_m = j["solver_m"].get<int>();
  if (j.contains("lambda_points")) cfg.lambda_points = j["lambda_points"].get<int>();
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned>();
  if (j.contains("budget")) {
    const auto& b = j["budget"];
    if (b.contains("max_iter")) cfg.budget.max_iter = b["max_iter"].get<int>();
    if (b.contains("restarts")) cfg.budget.restarts = b["restarts"].get<int>();
    if (b.contains("lawson_iter")) cfg.budget.lawson_iter = b["lawson_iter"].get<int>();
    if (b.contains("tol")) cfg.budget.tol = b["tol"].get<double>();
  }
}

const std::vector<std::pair<std::string, std::string>>& suite_blurbs() {
  static const std::vector<std::pair<std::string, std::string>> b = {
      {"jackson", "direct estimate: E_n(f)_p stays within a constant of omega_k(f,1/n)_p"},
      {"stechkin", "h^r ||T^(r)||_p against ||Delta_h^r T||_p for polynomials of degree n"},
      {"direct-inverse",
       "Holder-error direct bounds via theta/psi majorants and inverse bounds via dyadic sums"},
      {"sandwich", "n^alpha E_n(f)_p <= C E_n(f)_H <= C'(n^alpha E_n(f)_p + tail sum)"},
      {"counterexample",
       "p < 1: L_p error of best approximants collapses while the H^{1,1} residual "
       "seminorm persists; p >= 1 control decays"},
      {"strong-converse",
       "kernel means: Holder error two-sided against modulus majorants; family version "
       "and a divergence ratio for a smooth companion"},
      {"pr2", "node-average lower bound for the Holder error at p <= 1, zero-mean bracket"},
      {"integral-condition",
       "tail integral of omega_{r+k} equivalent to psi under an integral growth condition"},
      {"modulus-properties",
       "order reduction, step and cutoff scaling, psi/theta sandwich, quasi-triangle"},
      {"rates", "log-log modulus slopes over h in [1e-3, 1e-1] against known exponents"},
  };
  return b;
}

void print_parameters(const Report& rep) {
  for (const auto& [key, val] : rep.parameters) std::printf("# %s = %s\n", key.c_str(), val.c_str());
}

int emit_report(const Report& rep, const std::string& out, const std::string& format) {
  std::string path = out;
  if (path.empty()) path = "report_" + rep.name + "." + format;
  write_file(path, format == "json" ? rep.json() : rep.csv());
  print_parameters(rep);
  std::fputs(rep.verdict_lines().c_str(), stdout);
  std::printf("wrote %s\n", path.c_str());
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string p_str = "2";
  std::string config_path, out_path, format = "csv";

  // the config file must be applied before flag parsing so flags override it
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  try {
    if (!config_path.empty()) load_config(config_path, cfg, p_str);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  CLI::App app{"periodic approximation toolkit: quasi-norms, moduli of smoothness, "
               "Holder norms, best trigonometric approximation, kernel means, and "
               "verification suites over them"};
  app.require_subcommand(1);
  app.add_option("--config", config_path, "JSON config file; flags given here override it");
  app.add_option("--grid-m", cfg.grid_m, "measurement grid size")->capture_default_str();
  app.add_option("--solver-m", cfg.solver_m, "minimum solver grid size")->capture_default_str();
  app.add_option("--lambda-points", cfg.lambda_points, "lambda grid size for family means")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized cells")->capture_default_str();
  app.add_option("--out", out_path, "output file path (default report_<suite>.<format>)");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::string fn_name = "cosx", kind, suite_name, lambda_str;
  double t_step = 0.5;
  int degree = 8;

  auto add_p = [&](CLI::App* c) {
    c->add_option("--p", p_str, "integrability exponent, 0 < p <= inf")->capture_default_str();
  };
  auto add_fn = [&](CLI::App* c) {
    c->add_option("--fn", fn_name, "catalog function name")->capture_default_str();
  };

  CLI::App* norm = app.add_subcommand("norm", "quasi-norm ||f||_p on the measurement grid");
  add_fn(norm);
  add_p(norm);

  CLI::App* mod = app.add_subcommand(
      "modulus", "modulus of smoothness: omega_k(f,t)_p, theta = sup omega/h^alpha, or "
                 "psi = sup_h omega_k(Delta_h^r f, t)/h^alpha");
  mod->add_option("kind", kind, "omega|theta|psi")
      ->required()
      ->check(CLI::IsMember({"omega", "theta", "psi"}));
  add_fn(mod);
  add_p(mod);
  mod->add_option("--k", cfg.k, "difference order")->capture_default_str();
  mod->add_option("--r", cfg.r, "inner difference order (psi)")->capture_default_str();
  mod->add_option("--alpha", cfg.alpha, "Holder exponent (theta/psi)")->capture_default_str();
  mod->add_option("--t", t_step, "step cutoff t (or delta)")->capture_default_str();

  CLI::App* hn = app.add_subcommand(
      "holder-norm", "||f||_p + sup_h ||Delta_h^r f||_p / h^alpha (requires 0 < alpha <= r)");
  add_fn(hn);
  add_p(hn);
  hn->add_option("--r", cfg.r, "difference order")->capture_default_str();
  hn->add_option("--alpha", cfg.alpha, "Holder exponent")->capture_default_str();

  CLI::App* ba = app.add_subcommand(
      "best-approx", "E_n(f)_p: best approximation by trigonometric polynomials of degree n");
  add_fn(ba);
  add_p(ba);
  ba->add_option("--n", degree, "polynomial degree")->capture_default_str();

  CLI::App* means = app.add_subcommand(
      "means", "kernel mean of f: Fourier mean, or the node-sampled mean at --lambda");
  add_fn(means);
  add_p(means);
  means->add_option("--kernel", cfg.kernel, "dirichlet|fejer|vp")->capture_default_str();
  means->add_option("--n", degree, "kernel degree")->capture_default_str();
  means->add_option("--lambda", lambda_str,
                    "sample-shift lambda: compute the node-sampled family mean instead of "
                    "the Fourier mean");

  std::string verify_desc = "run a verification suite (exit 0 iff every verdict passes):";
  for (const auto& [name, blurb] : suite_blurbs())
    if (name != "rates") verify_desc += "\n  " + name + ": " + blurb;
  CLI::App* verify = app.add_subcommand("verify", verify_desc);
  {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_registry()) (void)fn, names.push_back(name);
    verify->add_option("suite", suite_name, "suite name")
        ->required()
        ->check(CLI::IsMember(names));
  }
  verify->add_option("--fn", cfg.fns, "catalog functions (repeatable; suite default if absent)");
  add_p(verify);
  verify->add_option("--r", cfg.r, "difference order")->capture_default_str();
  verify->add_option("--alpha", cfg.alpha, "Holder exponent")->capture_default_str();
  verify->add_option("--k", cfg.k, "modulus order")->capture_default_str();
  verify->add_option("--kernel", cfg.kernel, "kernel for mean suites")->capture_default_str();
  verify->add_option("--n", cfg.n_range, "degree list (repeatable; suite default if absent)");
  verify->add_option("--trials", cfg.trials, "randomized trials")->capture_default_str();

  CLI::App* rates = app.add_subcommand("rates", suite_blurbs().back().second);
  rates->add_option("--fn", cfg.fns, "catalog functions (default: all with known exponents)");

  // let --grid-m, --seed, --out, ... appear after the subcommand name too
  for (CLI::App* s : {norm, mod, hn, ba, means, verify, rates}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.p = parse_p(p_str);
    if (!(cfg.p > 0))
      throw std::invalid_argument("p must be positive (got " + p_str + ")");
    UniformGrid g = UniformGrid::of_size(cfg.grid_m);
    QuasiNormSpec spec =
        std::isinf(cfg.p) ? QuasiNormSpec::linf() : QuasiNormSpec::lp(cfg.p);

    if (*norm) {
      std::printf("%s\n", fmt(lp_norm(find_fn(fn_name).fn, spec, g)).c_str());
    } else if (*mod) {
      const PeriodicFn& f = find_fn(fn_name).fn;
      double v = 0.0;
      if (kind == "omega")
        v = omega(f, cfg.k, t_step, spec, g);
      else if (kind == "theta")
        v = theta(f, cfg.k, cfg.alpha, t_step, spec, g);
      else
        v = psi(f, cfg.k, cfg.r, cfg.alpha, t_step, spec, g);
      std::printf("%s\n", fmt(v).c_str());
    } else if (*hn) {
      HolderSpec hs;
      hs.norm = spec;
      hs.r = cfg.r;
      hs.alpha = cfg.alpha;
      hs.validate();
      std::printf("%s\n", fmt(holder_norm(find_fn(fn_name).fn, hs, g)).c_str());
    } else if (*ba) {
      UniformGrid gs = UniformGrid::of_size(std::max(cfg.solver_m, 8 * (degree + 1)));
      ApproxResult res = best_approx(find_fn(fn_name).fn, degree, spec, gs, cfg.budget);
      std::printf("%s\n", fmt(res.value).c_str());
      if (!out_path.empty()) {
        nlohmann::ordered_json j;
        j["fn"] = fn_name;
        j["p"] = cfg.p;
        j["n"] = degree;
        j["value"] = res.value;
        j["certified"] = res.certified;
        j["poly"] = nlohmann::ordered_json::parse(poly_to_json(res.poly));
        write_file(out_path, j.dump(2) + "\n");
        std::printf("wrote %s\n", out_path.c_str());
      }
    } else if (*means) {
      const PeriodicFn& f = find_fn(fn_name).fn;
      Kernel K = kernel_catalog(cfg.kernel, degree);
      TrigPoly T = lambda_str.empty() ? fourier_mean_poly(f, K, g)
                                      : family_mean_poly(f, K, std::stod(lambda_str));
      std::printf("%s\n", fmt(lp_norm(residual(f, T), spec, g)).c_str());
      if (!out_path.empty()) {
        write_file(out_path, poly_to_json(T) + "\n");
        std::printf("wrote %s\n", out_path.c_str());
      }
    } else if (*verify) {
      for (const auto& [name, suite] : suite_registry())
        if (name == suite_name) return emit_report(suite(cfg), out_path, format);
    } else if (*rates) {
      return emit_report(rate_scan(cfg), out_path, format);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
