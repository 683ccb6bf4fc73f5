#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lindex/error.hpp"
#include "lindex/weights.hpp"

using namespace lindex;

namespace {

WeightVector weight(std::vector<std::string> texts) {
  const int n = static_cast<int>(texts.size());
  return WeightVector::parse(texts, n);
}

std::vector<CPoint> real_line(double step, int count) {
  std::vector<CPoint> pts;
  for (int i = 0; i < count; ++i) pts.push_back(CPoint{Complex(step * i, 0.0)});
  return pts;
}

std::vector<PolyRadius> radii_1_to(int last) {
  std::vector<PolyRadius> out;
  for (int r = 1; r <= last; ++r) out.push_back(PolyRadius{static_cast<double>(r)});
  return out;
}

}  // namespace

TEST_SUITE("weights") {
  TEST_CASE("distortion of 1 + |z| over a disc of radius R / l(z0)") {
    // The disc around 3 has radius 1/4, so |z| runs over [2.75, 3.25].
    const auto L = weight({"1+abs(z)"});
    const auto lb = lambda_bounds(L, CPoint{Complex(3, 0)}, PolyRadius{1.0}, GridSpec{});
    REQUIRE(lb.size() == 1u);
    CHECK(lb[0].lambda2 == doctest::Approx(4.25 / 4.0).epsilon(1e-12));
    CHECK(lb[0].lambda1 == doctest::Approx(3.75 / 4.0).epsilon(1e-12));
    CHECK(lb[0].log_lambda2 == doctest::Approx(std::log(4.25 / 4.0)).epsilon(1e-12));
  }

  TEST_CASE("sampled lambdas bracket 1") {
    const auto L = weight({"abs(z2)+1", "abs(z1)+1"});
    for (double r : {0.1, 0.5, 2.0}) {
      const auto lb = lambda_bounds(L, CPoint{Complex(1, 1), Complex(-2, 0)}, PolyRadius{r, r}, GridSpec{});
      for (const auto& p : lb) {
        CHECK(p.lambda1 <= 1.0);
        CHECK(p.lambda2 >= 1.0);
      }
    }
  }

  TEST_CASE("constant weights are in both classes with ratio exactly 1") {
    const auto L = WeightVector::constant(2);
    const auto q = qn_scan(L, PolyRadius{1.0, 1.0}, {CPoint(2), CPoint{Complex(5, 0), Complex(0, 5)}}, GridSpec{});
    CHECK(q.verdict == Verdict::Satisfied);
    CHECK(q.extremal_value == 1.0);
    const auto k = kn_scan(L, {PolyRadius{1.0, 2.0}}, GridSpec{});
    CHECK(k.verdict == Verdict::Satisfied);
    CHECK(k.extremal_value == 1.0);
    CHECK_FALSE(q.scanned_range.empty());
    CHECK_FALSE(k.scanned_range.empty());
  }

  TEST_CASE("|e^z| + 1 is outside K with witness angles 0 and pi") {
    const auto k = kn_scan(weight({"abs(exp(z))+1"}), radii_1_to(10), GridSpec{});
    CHECK(k.verdict == Verdict::Violated);
    // (e^r + 1) / (e^-r + 1) = e^r exactly.
    CHECK(k.log_extremal == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(k.witness_theta_max == std::vector<double>{0.0});
    CHECK(k.witness_theta_min[0] == doctest::Approx(std::numbers::pi));
    REQUIRE(k.witness_radius.has_value());
    CHECK((*k.witness_radius)[0] == 10.0);
  }

  TEST_CASE("|e^z| + 1 stays inside Q") {
    const auto q = qn_scan(weight({"abs(exp(z))+1"}), PolyRadius{1.0}, real_line(1.0, 21), GridSpec{});
    CHECK(q.verdict == Verdict::Satisfied);
    CHECK(q.extremal_value < std::exp(1.0) + 1e-9);
  }

  TEST_CASE("radial weights have angular ratio 1") {
    for (const char* text : {"exp(exp(abs(z)))", "1+1/(1+abs(z))", "1+abs(z)"}) {
      const auto k = kn_scan(weight({text}), radii_1_to(20), GridSpec{});
      CHECK(k.verdict == Verdict::Satisfied);
      // ln l reaches e^20 for the double exponential, so rounding is relative to that.
      CHECK(std::abs(k.log_extremal) <= 1e-13 * std::exp(20.0));
    }
  }

  TEST_CASE("sustained growth is caught even when every step is small") {
    // l = e^{x / 2} + 1: ratio e^{r/2}-ish, growing by under 10x per unit step.
    const auto k = kn_scan(weight({"abs(exp(z/2))+1"}), radii_1_to(10), GridSpec{});
    CHECK(k.verdict == Verdict::Violated);
  }

  TEST_CASE("Wirtinger derivative") {
    const Expr e = parse_expression("abs(z)^2", 1);
    const Complex w = wirtinger_derivative(e, CPoint{Complex(1, 2)}, 0);
    CHECK(std::abs(w - Complex(1, -2)) < 1e-6);
    const Expr h = parse_expression("z^3", 1);
    CHECK(std::abs(wirtinger_derivative(h, CPoint{Complex(1, 1)}, 0) - 3.0 * Complex(1, 1) * Complex(1, 1)) < 1e-10);
  }

  TEST_CASE("sufficient condition for the swapped identity weights") {
    // d(z2)/dz2 / (1 + |z2|) peaks at z2 = 0 with value 1.
    GridSpec g;
    g.radial_resolution = 4;
    g.angular_resolution = 8;
    const auto domain = polydisc_samples(CPoint(2), PolyRadius{2.0, 2.0}, g);
    const auto p = prop1_check({parse_expression("z2", 2), parse_expression("z1", 2)}, 1.0, domain);
    CHECK(p.P == doctest::Approx(1.0));
    CHECK(p.envelope(PolyRadius{1.0, 2.0}) == doctest::Approx(std::exp(3.0)));
    CHECK(p.star.values(CPoint{Complex(0, 3), Complex(4, 0)})[0] == doctest::Approx(5.0));
    const auto rows = prop1_envelope_scan(p, {PolyRadius{0.6, 0.6}, PolyRadius{3.0, 1.2}}, domain, g);
    for (const auto& r : rows) CHECK(r.contained);
  }

  TEST_CASE("divergence probe") {
    const auto grow = qn_growth_probe(WeightVector::constant(1), CPoint(1), 0, {1, 2, 4, 8, 16, 32, 64}, 0.0);
    CHECK(grow.consistent);
    CHECK(grow.rows.back().product == doctest::Approx(64.0));
    const auto flat =
        qn_growth_probe(weight({"1/(1+abs(z)^2)"}), CPoint(1), 0, {1, 2, 4, 8, 16, 32, 64}, 0.0);
    CHECK_FALSE(flat.consistent);
    CHECK_THROWS_AS(qn_growth_probe(WeightVector::constant(1), CPoint(1), 1, {1, 2}, 0.0), DomainError);
  }
}
