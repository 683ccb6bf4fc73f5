#include <cmath>

#include "doctest.h"
#include "lindex/error.hpp"
#include "lindex/catalog.hpp"
#include "lindex/function.hpp"
#include "lindex/numeric.hpp"
#include "oracles.hpp"

using namespace lindex;

namespace {

std::vector<Complex> random_point(SeededUniform& rng, int n, double radius) {
  std::vector<Complex> z;
  for (int j = 0; j < n; ++j) z.push_back(std::polar(radius * std::sqrt(rng.next()), 2.0 * M_PI * rng.next()));
  return z;
}

}  // namespace

TEST_SUITE("derivatives") {
  TEST_CASE("entire functions reject non-holomorphic text") {
    CHECK_THROWS_AS(EntireFunction::parse("abs(z)", 1), DomainError);
    CHECK(EntireFunction::parse("0", 1).is_zero_literal());
    const auto f = EntireFunction::parse("exp(z)", 1);
    CHECK(f.log_abs(CPoint{Complex(700, 3)}) == doctest::Approx(700.0));
  }

  TEST_CASE("weights must be real and positive") {
    const auto neg = WeightComponent::parse("re(z)", 1);
    CHECK_THROWS_AS(neg.value(CPoint{Complex(-1, 0)}), NumericalError);
    const auto cplx = WeightComponent::parse("1 + i", 1);
    CHECK_THROWS_AS(cplx.value(CPoint{Complex(0, 0)}), NumericalError);
    const auto big = WeightComponent::parse("exp(exp(abs(z)))", 1);
    CHECK(big.log_value(CPoint{Complex(0, 20)}) == doctest::Approx(std::exp(20.0)));
    CHECK_THROWS_AS(big.value(CPoint{Complex(0, 20)}), NumericalError);
    const auto L = WeightVector::parse(std::vector<std::string>{"abs(z2)+1", "abs(z1)+1"}, 2);
    const auto v = L.values(CPoint{Complex(3, 4), Complex(0, 2)});
    CHECK(v[0] == doctest::Approx(3.0));
    CHECK(v[1] == doctest::Approx(6.0));
    CHECK(L.scaled(2.0).values(CPoint{Complex(3, 4), Complex(0, 2)})[1] == doctest::Approx(12.0));
    CHECK(WeightVector::constant(3, 2.5).values(CPoint(3))[2] == 2.5);
    CHECK_THROWS_AS(WeightVector::parse(std::vector<std::string>{"1"}, 2), DomainError);
  }

  TEST_CASE("derivative set order and lookup") {
    const auto f = EntireFunction::parse("exp(z1*z2)", 2);
    const DerivativeSet set(f, 4);
    CHECK(set.indices() == multi_indices_up_to(2, 4));
    for (std::size_t i = 0; i < set.indices().size(); ++i) CHECK(set.position(set.indices()[i]) == i);
    const CPoint z{Complex(0.5, 0.2), Complex(-0.3, 0.7)};
    const auto vals = set.evaluate(z);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const auto& k = set.indices()[i];
      const Complex want = oracle::exp_z1z2_derivative(k[0], k[1], z[0], z[1]);
      CHECK(std::abs(vals[i].value() - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
  }

  TEST_CASE("normalized derivatives use K! and L^K") {
    const auto f = EntireFunction::parse("exp(z1*z2)", 2);
    const auto L = WeightVector::parse(std::vector<std::string>{"abs(z2)+1", "abs(z1)+1"}, 2);
    const CPoint z{Complex(1, 0), Complex(2, 0)};
    const MultiIndex k{2, 1};
    const double want = std::abs(oracle::exp_z1z2_derivative(2, 1, z[0], z[1])) / (2.0 * 1.0 * 9.0 * 2.0);
    CHECK(normalized_derivative(f, L, z, k) == doctest::Approx(want).epsilon(1e-13));
    CHECK(normalized_derivative(f, L, z, k, DerivativeMethod::Cauchy) == doctest::Approx(want).epsilon(1e-9));
    const DerivativeSet set(f, 3);
    const auto logs = log_normalized_derivatives(set, L, z);
    CHECK(logs[set.position(k)] == doctest::Approx(std::log(want)).epsilon(1e-13));
  }

  TEST_CASE("Cauchy quadrature matches closed forms on random points") {
    SeededUniform rng(2024);
    for (const auto& e : catalog::functions()) {
      CAPTURE(e.name);
      const auto f = catalog::make_function(e);
      for (int trial = 0; trial < 3; ++trial) {
        const auto zc = random_point(rng, e.arity, 2.0);
        for (const auto& k : oracle::indices(e.arity, 5)) {
          const CauchyResult r = derivative_cauchy(f, CPoint(zc), MultiIndex(k), PolyRadius::filled(e.arity, 1.0));
          const Complex want = oracle::derivative(e.name, k, zc);
          CHECK(std::abs(r.value - want) <= 1e-8 * (1.0 + std::abs(want)));
          CHECK(r.convergence_estimate < 1e-6 * (1.0 + std::abs(want)));
        }
      }
    }
  }

  TEST_CASE("batched Cauchy derivatives equal one-at-a-time results") {
    const auto f = EntireFunction::parse("exp(z1*z2)", 2);
    const CPoint z{Complex(0.7, -0.4), Complex(-1.1, 0.3)};
    const auto ks = multi_indices_up_to(2, 6);
    const auto batch = derivative_cauchy(f, z, ks, PolyRadius{1.0, 1.0});
    REQUIRE(batch.size() == ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      CHECK(batch[i].value == derivative_cauchy(f, z, ks[i], PolyRadius{1.0, 1.0}).value);
    }
  }

  TEST_CASE("Cauchy grids must resolve the order") {
    const auto f = EntireFunction::parse("exp(z)", 1);
    GridSpec g;
    g.angular_resolution = 8;
    CHECK_THROWS_AS(derivative_cauchy(f, CPoint(1), MultiIndex{3}, PolyRadius{1.0}, g), DomainError);
    CHECK(default_cauchy_resolution(MultiIndex{3})[0] == 64);
    CHECK(default_cauchy_resolution(MultiIndex{20})[0] == 128);
  }

  TEST_CASE("too coarse a grid for a fast-growing function is reported") {
    const auto f = EntireFunction::parse("exp(z^2)", 1);
    GridSpec g;
    g.angular_resolution = 16;
    g.sample_cap = 16;
    CHECK_THROWS_AS(derivative_cauchy(f, CPoint{Complex(0, 0)}, MultiIndex{4}, PolyRadius{6.0}, g),
                    NumericalError);
  }

  TEST_CASE("box quadrature returns every order in the box") {
    const auto f = EntireFunction::parse("exp(z1*z2)", 2);
    const CPoint z0{Complex(0.4, -0.1), Complex(0.2, 0.3)};
    const std::vector<int> res{32, 32};
    const auto box = cauchy_derivative_box(f, z0, PolyRadius{1.0, 1.0}, MultiIndex{3, 2}, res);
    REQUIRE(box.size() == 12u);
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 2; ++b) {
        const Complex want = oracle::exp_z1z2_derivative(a, b, z0[0], z0[1]);
        CHECK(std::abs(box[static_cast<std::size_t>(a * 3 + b)] - want) <= 1e-9 * (1.0 + std::abs(want)));
      }
    }
  }
}
