#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "approxlab/experiments.hpp"

using namespace approxlab;

namespace {

const Verdict& verdict_named(const Report& rep, const std::string& name) {
  for (const Verdict& v : rep.verdicts)
    if (v.name == name) return v;
  FAIL("missing verdict ", name, " in suite ", rep.name);
  static Verdict dummy;
  return dummy;
}

std::vector<double> values_of(const Report& rep, const std::string& quantity,
                              const std::string& fn = "") {
  std::vector<double> out;
  for (const ReportRow& r : rep.rows)
    if (r.quantity == quantity && (fn.empty() || r.fn == fn)) out.push_back(r.value);
  return out;
}

}  // namespace

TEST_CASE("registry lists every suite under its stable name") {
  const auto& reg = suite_registry();
  std::vector<std::string> want = {"jackson",     "stechkin",       "direct-inverse",
                                   "sandwich",    "counterexample", "strong-converse",
                                   "pr2",         "integral-condition",
                                   "modulus-properties", "rates"};
  REQUIRE(reg.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    CHECK(reg[i].first == want[i]);
    CHECK(reg[i].second != nullptr);
  }
}

TEST_CASE("jackson: polynomial catalog entries are flagged exact, rough ones gated") {
  RunConfig cfg;
  cfg.fns = {"cosx", "square"};
  cfg.p = 2.0;
  cfg.k = 1;
  cfg.n_range = {4, 8, 16, 32};
  Report rep = verify_jackson(cfg);

  // cos is a degree-1 polynomial: every E_n sits at the solver floor
  CHECK(verdict_named(rep, "exact:cosx").pass);
  CHECK(values_of(rep, "jackson_ratio", "cosx").empty());

  CHECK(verdict_named(rep, "bounded:square").pass);
  CHECK(verdict_named(rep, "no_growth:square").pass);
  CHECK(rep.passed());

  // E_n and omega decay at the same n^{-1/2} order for the step function, so
  // the ratio is pinned near a constant
  auto ratios = values_of(rep, "jackson_ratio", "square");
  REQUIRE(ratios.size() == 4);
  double lo = *std::min_element(ratios.begin(), ratios.end());
  double hi = *std::max_element(ratios.begin(), ratios.end());
  CHECK(hi / lo < 2.0);
}

TEST_CASE("stechkin: seeded ratios reproduce the single-frequency law exactly") {
  RunConfig cfg;
  cfg.p = 0.5;
  cfg.r = 1;
  cfg.trials = 3;
  cfg.n_range = {4, 8};
  Report rep = verify_stechkin_nikolskii(cfg);
  CHECK(verdict_named(rep, "single_frequency_law").pass);
  CHECK(verdict_named(rep, "spread_stable").pass);

  // h = pi/n makes the closed form (nh)^r (2 sin(nh/2))^{-r} equal pi/2
  bool found = false;
  for (const ReportRow& r : rep.rows)
    if (r.quantity == "single_freq_ratio" && r.n == 4 &&
        std::abs(r.h - pi_const / 4) < 1e-15) {
      CHECK(r.value == doctest::Approx(pi_const / 2).epsilon(1e-12));
      found = true;
    }
  CHECK(found);

  RunConfig c2 = cfg;
  c2.p = 2.0;
  Report rep2 = verify_stechkin_nikolskii(c2);
  CHECK(verdict_named(rep2, "difference_below_derivative").pass);
  CHECK(rep2.passed());

  // seeded: same config, same bytes
  Report rep3 = verify_stechkin_nikolskii(cfg);
  CHECK(rep.csv() == rep3.csv());
}

TEST_CASE("direct-inverse: smooth function keeps every route under its constant") {
  RunConfig cfg;
  cfg.fns = {"cosx"};
  cfg.p = 2.0;
  cfg.r = 1;
  cfg.alpha = 0.5;
  cfg.k = 1;
  cfg.n_range = {0, 1, 2, 4, 8};
  Report rep = verify_direct_inverse_holder(cfg);
  CHECK(verdict_named(rep, "direct_theta_bounded").pass);
  CHECK(verdict_named(rep, "direct_psi_bounded").pass);
  CHECK(verdict_named(rep, "inverse_theta_bounded").pass);
  CHECK(verdict_named(rep, "inverse_psi_bounded").pass);
  CHECK(rep.passed());

  // E_n(cos)_H collapses once n >= 1; theta stays positive
  auto eh = values_of(rep, "en_holder", "cosx");
  REQUIRE(eh.size() == 5);
  CHECK(eh[0] > 1.0);
  CHECK(eh[2] < 1e-6);
  for (double th : values_of(rep, "theta", "cosx")) CHECK(th > 0.0);
}

TEST_CASE("sandwich: both orderings hold for the step function at p = 2") {
  RunConfig cfg;
  cfg.fns = {"square"};
  cfg.p = 2.0;
  cfg.r = 1;
  cfg.alpha = 0.5;
  cfg.n_range = {4, 8};
  Report rep = verify_sandwich(cfg);
  CHECK(verdict_named(rep, "lower_ordering").pass);
  CHECK(verdict_named(rep, "upper_ordering").pass);
  CHECK(rep.passed());
  // n^alpha E_n and E_n^H are the same order for omega_1 ~ h^{1/2}: the
  // measured constants should be moderate, not just under the hard gate
  for (const ReportRow& r : rep.rows)
    if (r.quantity == "sandwich_lhs") {
      double eh = 0.0, rhs = 0.0;
      for (const ReportRow& q : rep.rows) {
        if (q.n == r.n && q.quantity == "en_holder") eh = q.value;
        if (q.n == r.n && q.quantity == "sandwich_rhs") rhs = q.value;
      }
      CHECK(r.value <= eh * 5.0);
      CHECK(eh <= rhs * 5.0);
    }
}

TEST_CASE("counterexample control: at p = 2 the residual seminorm decays") {
  RunConfig cfg;
  cfg.p = 2.0;
  cfg.n_range = {4, 32};
  Report rep = counterexample_h11(cfg);
  CHECK(verdict_named(rep, "seminorm_decays").pass);
  CHECK(verdict_named(rep, "staircase_modulus_scaling").pass);
  CHECK(rep.passed());
  auto errs = values_of(rep, "lp_error");
  REQUIRE(errs.size() == 2);
  CHECK(errs[1] < errs[0]);
  // a 1/n step crosses one stair (rise pi/n) on an x-fraction 1/pi, so
  // n omega_1(phi_n, 1/n)_p = pi^{1 - 1/p}: sqrt(pi) at p = 2
  auto scaled = values_of(rep, "staircase_omega_scaled");
  REQUIRE(scaled.size() == 2);
  CHECK(scaled[1] == doctest::Approx(std::sqrt(M_PI)).epsilon(0.05));
}

TEST_CASE("counterexample at p = 1/2: error collapses, the seminorm does not") {
  RunConfig cfg;
  cfg.p = 0.5;
  cfg.n_range = {4, 16};
  Report rep = counterexample_h11(cfg);
  CHECK(verdict_named(rep, "seminorm_persists").pass);
  CHECK(rep.passed());
  auto errs = values_of(rep, "lp_error");
  auto sems = values_of(rep, "seminorm_trunc");
  REQUIRE(errs.size() == 2);
  CHECK(errs[1] < 0.5 * errs[0]);
  CHECK(sems[1] >= 0.9 * sems[0]);
  // same crossing count: the scaled staircase modulus pins at pi^{1-1/p} = 1/pi
  auto scaled = values_of(rep, "staircase_omega_scaled");
  REQUIRE(scaled.size() == 2);
  CHECK(scaled[1] == doctest::Approx(1.0 / M_PI).epsilon(0.05));
}

TEST_CASE("strong converse on cos: ratios match the closed-form values") {
  RunConfig cfg;
  cfg.fns = {"cosx", "cosx"};
  cfg.p = 2.0;
  cfg.r = 1;
  cfg.alpha = 0.5;
  cfg.k = 1;
  cfg.kernel = "fejer";
  cfg.n_range = {2, 4, 8, 16};
  cfg.lambda_points = 8;
  Report rep = verify_strong_converse(cfg);
  CHECK(verdict_named(rep, "hypothesis_bounded").pass);
  CHECK(verdict_named(rep, "holder_two_sided").pass);
  CHECK(verdict_named(rep, "theta_two_sided").pass);
  CHECK(verdict_named(rep, "divergence_grows").pass);
  CHECK(rep.passed());

  // Fejer leaves (1 - 1/(n+1)) cos, so the residual is cos/(n+1) and every
  // quantity reduces to sines on known grid points; values derived by hand
  auto tf = values_of(rep, "theta_form_ratio", "cosx");
  REQUIRE(tf.size() == 4);
  CHECK(tf[0] == doctest::Approx(2.045).epsilon(0.03));
  CHECK(tf[1] == doctest::Approx(1.878).epsilon(0.03));
  CHECK(tf[2] == doctest::Approx(1.683).epsilon(0.03));
  CHECK(tf[3] == doctest::Approx(1.500).epsilon(0.03));

  auto divs = values_of(rep, "divergence", "cosx");
  REQUIRE(divs.size() == 4);
  CHECK(divs[3] / divs[0] == doctest::Approx(2.218).epsilon(0.03));
}

TEST_CASE("pr2: node-average lower bound brackets the solver at p = 1") {
  RunConfig cfg;
  cfg.fns = {"square"};
  cfg.p = 1.0;
  cfg.r = 1;
  cfg.alpha = 0.5;
  cfg.n_range = {2, 4};
  Report rep = verify_pr2_lower_bound(cfg);
  CHECK(verdict_named(rep, "lower_vs_holder").pass);
  CHECK(verdict_named(rep, "en0_bracket").pass);
  CHECK(verdict_named(rep, "en0_two_sided").pass);
  CHECK(rep.passed());
  CHECK_THROWS(verify_pr2_lower_bound([] {
    RunConfig c;
    c.p = 2.0;
    return c;
  }()));
}

TEST_CASE("integral condition on cos reduces to the hand-computed 2/3") {
  RunConfig cfg;
  cfg.fns = {"cosx"};
  cfg.p = 2.0;
  cfg.r = 1;
  cfg.alpha = 0.5;
  cfg.k = 1;
  Report rep = verify_integral_condition(cfg);
  CHECK(verdict_named(rep, "integral_equivalent_to_psi").pass);
  CHECK(rep.passed());

  // omega_2(cos, t) = 2 sqrt2 sin^2(t/2): at small delta the tail integral is
  // (2/3) 0.707 delta^{3/2} while psi is 0.707 delta^{3/2}
  auto eq = values_of(rep, "equivalence_ratio", "cosx");
  REQUIRE(!eq.empty());
  CHECK(eq.front() == doctest::Approx(2.0 / 3.0).epsilon(0.05));
  auto cond = values_of(rep, "condition_ratio", "cosx");
  REQUIRE(!cond.empty());
  CHECK(cond.front() == doctest::Approx(2.0 / 3.0).epsilon(0.08));
}

TEST_CASE("modulus properties hold across p on a catalog slice plus seeds") {
  RunConfig cfg;
  cfg.fns = {"cosx", "triangle", "square"};
  cfg.trials = 3;
  cfg.seed = 7;
  Report rep = verify_modulus_properties(cfg);
  for (const char* prop : {"order_reduction", "omega_monotone", "step_scaling",
                           "theta_monotone", "theta_scaling", "psi_theta_sandwich",
                           "quasi_triangle"})
    CHECK(verdict_named(rep, prop).pass);
  CHECK(rep.passed());

  Report rep2 = verify_modulus_properties(cfg);
  CHECK(rep.csv() == rep2.csv());
  CHECK(rep.json() == rep2.json());
}

TEST_CASE("rate scan recovers the known cos exponent") {
  RunConfig cfg;
  cfg.fns = {"cosx"};
  Report rep = rate_scan(cfg);
  CHECK(rep.passed());
  REQUIRE(rep.fitted_slopes.count("cosx:omega:k=1,p=2"));
  CHECK(rep.fitted_slopes.at("cosx:omega:k=1,p=2").slope == doctest::Approx(1.0).epsilon(0.02));
}
