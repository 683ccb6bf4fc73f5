#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lindex/error.hpp"
#include "lindex/catalog.hpp"
#include "lindex/growth.hpp"
#include "lindex/numeric.hpp"

using namespace lindex;

namespace {

const std::vector<double> kDoublings{2, 4, 8, 16, 32, 64, 128};

WeightVector swapped() { return WeightVector::parse(std::vector<std::string>{"abs(z2)+1", "abs(z1)+1"}, 2); }

// Integral for L = (|z2| + 1, |z1| + 1) along the staircase, written with
// one-based sigma and j as in the original case table. Each integrand is
// constant in t because l_j never depends on z_j.
double staircase_oracle(double r1, double r2, const std::vector<int>& sigma, bool composed) {
  const double r[3] = {0.0, r1, r2};
  const double base = 1.0;
  double total = 0.0;
  for (int j = 1; j <= 2; ++j) {
    const int k = 3 - j;
    const int lhs = sigma[k - 1];
    const int rhs = composed ? sigma[j - 1] : j;
    const double other = lhs < rhs ? base : r[k];
    total += (other + 1.0) * r[j];
  }
  return total;
}

}  // namespace

TEST_SUITE("growth") {
  TEST_CASE("maximum modulus closed forms") {
    const GridSpec g;
    const auto e12 = catalog::make_function(catalog::function("exp_z1z2"));
    CHECK(max_modulus(e12, PolyRadius{2, 3}, g).log_value == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(max_modulus(e12, PolyRadius{2, 3}, g).value == doctest::Approx(std::exp(6.0)).epsilon(1e-12));
    CHECK(max_modulus(EntireFunction::parse("z^2", 1), PolyRadius{3}, g).value == doctest::Approx(9.0));
    CHECK(max_modulus(EntireFunction::parse("exp(z)", 1), PolyRadius{5}, g).log_value == doctest::Approx(5.0));
    // The maximum of |sin| on |z| = r sits at z = i r.
    CHECK(max_modulus(EntireFunction::parse("sin(z)", 1), PolyRadius{2.5}, g).value ==
          doctest::Approx(std::sinh(2.5)).epsilon(1e-12));
    // |exp(i z1 - z2)| = exp(-Im z1 - Re z2), largest at theta = (3 pi / 2, pi).
    const auto off = max_modulus(EntireFunction::parse("exp(z1*i - z2)", 2), PolyRadius{1, 2}, g);
    CHECK(off.log_value == doctest::Approx(3.0).epsilon(1e-9));
  }

  TEST_CASE("inactive axes are not sampled") {
    const auto m = max_modulus(EntireFunction::parse("exp(z1+z2)", 2), PolyRadius{0, 2}, GridSpec{});
    CHECK(m.log_value == doctest::Approx(2.0));
    CHECK(m.theta[0] == 0.0);
  }

  TEST_CASE("maximum modulus grows with the polyradius") {
    SeededUniform rng(11);
    for (const auto& e : catalog::functions()) {
      CAPTURE(e.name);
      const auto f = catalog::make_function(e);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<double> a, b;
        for (int j = 0; j < e.arity; ++j) {
          a.push_back(rng.next(0.1, 3.0));
          b.push_back(a.back() + rng.next(0.0, 1.0));
        }
        const double lo = max_modulus(f, PolyRadius(a), GridSpec{}).log_value;
        const double hi = max_modulus(f, PolyRadius(b), GridSpec{}).log_value;
        CHECK(lo <= hi + 1e-9 * (1.0 + std::abs(hi)));
      }
    }
  }

  TEST_CASE("angle and permutation sets") {
    CHECK(theta_grid(1, 0).size() == 16u);
    CHECK(theta_grid(2, 0).size() == 256u);
    CHECK(theta_grid(3, 0).size() == 512u);
    CHECK(theta_grid(4, 5).size() == 512u);
    CHECK(theta_grid(4, 5) == theta_grid(4, 5));
    CHECK(theta_grid(4, 5) != theta_grid(4, 6));
    CHECK(default_permutations(3).size() == 6u);
    CHECK(default_permutations(4).size() == 24u);
    CHECK(default_permutations(5).size() == 10u);
  }

  TEST_CASE("staircase radius follows the case table") {
    const PolyRadius R{5, 6, 7}, R0{1, 2, 3};
    // sigma = identity, axis 2 (zero-based 1): axis 0 sits below it, axis 2 above.
    CHECK(staircase_radius(R, R0, {0, 1, 2}, 1, 0.5, CaseMode::Verbatim) == std::vector<double>{1, 0.5, 7});
    // Reversed sigma; verbatim compares sigma(k) with the axis itself.
    CHECK(staircase_radius(R, R0, {2, 1, 0}, 1, 0.5, CaseMode::Verbatim) == std::vector<double>{5, 0.5, 3});
    CHECK(staircase_radius(R, R0, {2, 1, 0}, 1, 0.5, CaseMode::Composed) == std::vector<double>{5, 0.5, 3});
    CHECK(staircase_radius(R, R0, {1, 2, 0}, 0, 0.5, CaseMode::Verbatim) == std::vector<double>{0.5, 6, 7});
    CHECK(staircase_radius(R, R0, {1, 2, 0}, 0, 0.5, CaseMode::Composed) == std::vector<double>{0.5, 6, 3});
  }

  TEST_CASE("weight integral closed forms") {
    Thm2Config cfg;
    CHECK(thm2_integral(WeightVector::constant(3), PolyRadius{1, 2, 3.5}, cfg).value == doctest::Approx(6.5));
    const auto lin = WeightVector::parse(std::vector<std::string>{"abs(z)+1"}, 1);
    CHECK(thm2_integral(lin, PolyRadius{4}, cfg).value == doctest::Approx(12.0).epsilon(1e-9));
    for (const auto& R : {PolyRadius{4, 4}, PolyRadius{2, 5}, PolyRadius{6, 1.5}}) {
      for (bool composed : {false, true}) {
        cfg.mode = composed ? CaseMode::Composed : CaseMode::Verbatim;
        const double want = std::min(staircase_oracle(R[0], R[1], {1, 2}, composed),
                                     staircase_oracle(R[0], R[1], {2, 1}, composed));
        CHECK(thm2_integral(swapped(), R, cfg).value == doctest::Approx(want).epsilon(1e-6));
      }
    }
    cfg.mode = CaseMode::Verbatim;
    const auto sweep = thm2_base_sweep(swapped(), PolyRadius{4, 4}, cfg, {0.5, 1, 2, 4});
    REQUIRE(sweep.size() == 4u);
    CHECK(sweep[1].value == doctest::Approx(28.0).epsilon(1e-6));
    CHECK_FALSE(sweep[2].below_base);
    CHECK(sweep[3].below_base == false);
    CHECK(thm2_base_sweep(swapped(), PolyRadius{1, 1}, cfg, {2})[0].below_base);
  }

  TEST_CASE("ratio scans") {
    Thm2Config cfg;
    const auto ex = thm2_ratio_scan(EntireFunction::parse("exp(z)", 1), WeightVector::constant(1), PolyRadius{1},
                                    kDoublings, cfg, GridSpec{});
    for (const auto& row : ex.rows) CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ex.consistent);
    const auto sharp = thm2_ratio_scan(catalog::make_function(catalog::function("exp_z1z2")), swapped(),
                                       PolyRadius{1, 1}, kDoublings, cfg, GridSpec{});
    CHECK(sharp.consistent);
    CHECK(sharp.rows.back().ratio < 1.0);
    CHECK(sharp.rows.back().ratio > 0.95);
    const auto wild = thm2_ratio_scan(EntireFunction::parse("exp(z^2)", 1), WeightVector::constant(1), PolyRadius{1},
                                      kDoublings, cfg, GridSpec{});
    CHECK(wild.diverging);
    CHECK_FALSE(wild.consistent);
  }

  TEST_CASE("derivative bound: closed forms") {
    const auto ex = thm3_rhs(EntireFunction::parse("exp(z)", 1), WeightVector::constant(1), PolyRadius{3}, {0.0}, 0);
    CHECK(ex.rhs == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(ex.lhs == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(ex.holds);
    const auto c = thm3_rhs(EntireFunction::parse("3", 2), swapped(), PolyRadius{1, 2}, {0.3, 1.1}, 0);
    CHECK(c.lhs == doctest::Approx(std::log(3.0)));
    CHECK(c.rhs > c.lhs);
    // beta = 2 tau + 2 along the diagonal, so rhs = r^2 + 2 r.
    for (double r : {1.0, 3.0, 6.0}) {
      const auto s = thm3_rhs(catalog::make_function(catalog::function("exp_z1z2")), swapped(), PolyRadius{r, r},
                              {0.0, 0.0}, 0, 0);
      CHECK(s.lhs == doctest::Approx(r * r).epsilon(1e-12));
      CHECK(s.rhs == doctest::Approx(r * r + 2 * r).epsilon(1e-9));
      CHECK(s.gamma_integral == 0.0);
      for (std::size_t i = 0; i < s.trace.t.size(); ++i) CHECK(s.trace.beta[i] >= s.trace.weighted_sum[i]);
    }
    CHECK_THROWS_AS(thm3_rhs(EntireFunction::parse("z^2", 1), WeightVector::constant(1), PolyRadius{2}, {0.0}, 1),
                    DomainError);
    CHECK_THROWS_AS(thm3_rhs(EntireFunction::parse("exp(z1)", 2), swapped(), PolyRadius{0, 2}, {0.0, 0.0}, 0, 0),
                    DomainError);
  }

  TEST_CASE("derivative bound holds for every known pair") {
    for (const auto& pair : catalog::known_pairs()) {
      CAPTURE(pair.name);
      const auto f = EntireFunction::parse(pair.function, pair.arity);
      const auto L = WeightVector::parse(pair.weights, pair.arity);
      for (double r : {0.5, 2.0, 5.0}) {
        for (int a = 0; a < 8; ++a) {
          const std::vector<double> theta(static_cast<std::size_t>(pair.arity), a * std::numbers::pi / 4);
          const auto res = thm3_rhs(f, L, PolyRadius::filled(static_cast<std::size_t>(pair.arity), r), theta, pair.N);
          CHECK(res.lhs <= res.rhs + 1e-6 * (1.0 + std::abs(res.rhs)));
        }
      }
    }
  }

  TEST_CASE("decay constant") {
    const auto thetas = theta_grid(1, 0);
    std::vector<PolyRadius> Rs;
    for (double r : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) Rs.push_back(PolyRadius{r});
    CHECK(suplinf_C(WeightVector::constant(1), Rs, thetas).C == 0.0);
    CHECK(suplinf_C(WeightVector::parse(std::vector<std::string>{"1+abs(z)"}, 1), Rs, thetas).C == 0.0);
    // (-u')/l^2 = 1 / (t + 2)^2, largest at t = 0.
    const auto dec = suplinf_C(WeightVector::parse(std::vector<std::string>{"1+1/(1+abs(z))"}, 1), Rs, thetas);
    CHECK(dec.C == doctest::Approx(0.25).epsilon(5e-3));
    CHECK(dec.vanishing);
    CHECK(dec.rows.back().endpoint == doctest::Approx(1.0 / (66.0 * 66.0)).epsilon(1e-2));
  }

  TEST_CASE("growth verdicts") {
    Thm2Config cfg;
    const auto ex = growth_verdict(EntireFunction::parse("exp(z)", 1), WeightVector::constant(1), PolyRadius{1},
                                   kDoublings, 0, cfg, GridSpec{});
    CHECK(ex.outcome == GrowthOutcome::WithinBound);
    for (const auto& row : ex.rows) CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-9));
    const auto s = growth_verdict(EntireFunction::parse("sin(z)", 1), WeightVector::constant(1), PolyRadius{1},
                                  kDoublings, 1, cfg, GridSpec{});
    CHECK(s.outcome == GrowthOutcome::WithinBound);
    CHECK(s.bound == 2.0);
    CHECK(s.limsup == doctest::Approx(1.0).epsilon(0.05));
    // A decaying weight has a bounded denominator.
    const auto flat = growth_verdict(EntireFunction::parse("exp(z)", 1),
                                     WeightVector::parse(std::vector<std::string>{"1/(1+abs(z)^2)"}, 1), PolyRadius{1},
                                     kDoublings, 0, cfg, GridSpec{});
    CHECK(flat.outcome == GrowthOutcome::HypothesesNotMet);
  }

  TEST_CASE("pivot choice does not change the verdict") {
    Thm2Config cfg;
    const auto f = catalog::make_function(catalog::function("exp_z1z2"));
    const std::vector<double> rs{2, 4, 8, 16};
    const auto a = growth_verdict(f, swapped(), PolyRadius{1, 2}, rs, 0, cfg, GridSpec{}, 0);
    const auto b = growth_verdict(f, swapped(), PolyRadius{1, 2}, rs, 0, cfg, GridSpec{}, 1);
    CHECK(a.outcome == b.outcome);
    CHECK(a.pivot == 0u);
    CHECK(b.pivot == 1u);
  }

  TEST_CASE("bound comparison identity") {
    for (int N = 0; N < 6; ++N) {
      for (double C : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
        const auto g = sheremeta_gap(N, C);
        CHECK(g.old_bound - g.new_bound == C);
        CHECK(g.gap == C);
      }
    }
    const auto g = sheremeta_gap(2, 1.0);
    CHECK(g.new_bound == 5.0);
    CHECK(g.old_bound == 6.0);
  }

  TEST_CASE("log-convexity of the maximum modulus") {
    for (const char* name : {"exp", "square", "sin", "exp_z1z2"}) {
      CAPTURE(name);
      const auto e = catalog::function(name);
      const auto f = catalog::make_function(e);
      const auto n = static_cast<std::size_t>(e.arity);
      const auto rep = convexity_check(f, PolyRadius::filled(n, 0.5), PolyRadius::filled(n, 4.0), 8, GridSpec{});
      CHECK(rep.convex);
      CHECK(rep.values.size() == (n == 1 ? 8u : 64u));
    }
    // ln M(z^2) = 2 ln r is affine: second differences vanish away from ln^+ clipping.
    const auto sq = convexity_check(EntireFunction::parse("z^2", 1), PolyRadius{1.0}, PolyRadius{8.0}, 16, GridSpec{});
    CHECK(std::abs(sq.min_second_difference) < 1e-12);
    CHECK_THROWS_AS(
        convexity_check(EntireFunction::parse("z", 1), PolyRadius{0.0}, PolyRadius{2.0}, 8, GridSpec{}),
        DomainError);
  }
}
