#include <cmath>

#include "doctest.h"
#include "lindex/error.hpp"
#include "lindex/catalog.hpp"
#include "lindex/index.hpp"
#include "oracles.hpp"

using namespace lindex;

namespace {

std::vector<CPoint> disc_grid(std::size_t n, double radius, int radial, int angular) {
  GridSpec g;
  g.radial_resolution = radial;
  g.angular_resolution = angular;
  return polydisc_samples(CPoint(n), PolyRadius::filled(n, radius), g);
}

std::vector<CPoint> real_points(std::initializer_list<double> xs) {
  std::vector<CPoint> out;
  for (double x : xs) out.push_back(CPoint{Complex(x, 0)});
  return out;
}

}  // namespace

TEST_SUITE("index") {
  TEST_CASE("known pairs reproduce their index") {
    for (const auto& pair : catalog::known_pairs()) {
      CAPTURE(pair.name);
      const auto f = EntireFunction::parse(pair.function, pair.arity);
      const auto L = WeightVector::parse(pair.weights, pair.arity);
      const auto grid = disc_grid(static_cast<std::size_t>(pair.arity), 5.0, 4, pair.arity == 1 ? 24 : 8);
      const auto e = estimate_joint_index(f, L, grid, 5, 8);
      CHECK(e.bounded);
      CHECK(e.N == pair.N);
      CHECK(e.worst_margin >= 0.0);
      CHECK(e.grid_size == grid.size());
    }
  }

  TEST_CASE("per-point orders agree with the brute-force oracle") {
    const auto grid = disc_grid(1, 6.0, 6, 16);
    for (const char* name : {"sin", "cos", "exp", "cubic"}) {
      CAPTURE(name);
      const auto f = catalog::make_function(catalog::function(name));
      const auto e = estimate_joint_index(f, WeightVector::constant(1), grid, 6, 10);
      REQUIRE(e.point_orders.size() == grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(e.point_orders[i] == oracle::point_order(name, {grid[i][0]}, {1.0}, 10));
      }
    }
    const auto L = WeightVector::parse(std::vector<std::string>{"abs(z2)+1", "abs(z1)+1"}, 2);
    const auto grid2 = disc_grid(2, 3.0, 3, 6);
    const auto e2 = estimate_joint_index(catalog::make_function(catalog::function("exp_z1z2")), L, grid2, 4, 8);
    for (std::size_t i = 0; i < grid2.size(); ++i) {
      const std::vector<Complex> z{grid2[i][0], grid2[i][1]};
      CHECK(e2.point_orders[i] == oracle::point_order("exp_z1z2", z, L.values(grid2[i]), 8));
    }
  }

  TEST_CASE("margin of the defining inequality") {
    const auto f = EntireFunction::parse("exp(z)", 1);
    const auto one = WeightVector::constant(1);
    CHECK(index_margin(f, one, CPoint{Complex(1.5, 2)}, MultiIndex{1}, 0) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(index_margin(f, one, CPoint{Complex(1.5, 2)}, MultiIndex{2}, 0) == doctest::Approx(std::log(2.0)));
    const auto e = estimate_joint_index(f, one, real_points({0, 1, 2}), 2, 4);
    CHECK(e.worst_margin == doctest::Approx(0.0).epsilon(1e-13));
    // J = 1 meets the bound with equality.
    CHECK(e.witness_J == MultiIndex{1});
  }

  TEST_CASE("exp(z^2) with constant weight exceeds every small order") {
    const auto f = EntireFunction::parse("exp(z^2)", 1);
    const auto e = estimate_joint_index(f, WeightVector::constant(1), real_points({0, 2, 4, 8}), 6, 12);
    CHECK_FALSE(e.bounded);
    CHECK(e.N > 6);
    CHECK(e.worst_margin < 0.0);
  }

  TEST_CASE("argument checks") {
    const auto one = WeightVector::constant(1);
    CHECK_THROWS_AS(estimate_joint_index(EntireFunction::parse("0", 1), one, real_points({0}), 2), DomainError);
    CHECK_THROWS_AS(estimate_joint_index(EntireFunction::parse("z - z", 1), one, real_points({0, 1}), 2),
                    DomainError);
    const auto f = EntireFunction::parse("exp(z)", 1);
    CHECK_THROWS_AS(estimate_joint_index(f, one, real_points({0}), 4, 5), DomainError);
    CHECK_THROWS_AS(estimate_joint_index(f, one, real_points({0}), 4, 21), DomainError);
    CHECK(estimate_joint_index(f, one, real_points({0}), 4).j_max == 8);
  }

  TEST_CASE("doubling the weights never raises the estimate") {
    for (const auto& pair : catalog::known_pairs()) {
      CAPTURE(pair.name);
      const auto f = EntireFunction::parse(pair.function, pair.arity);
      const auto L = WeightVector::parse(pair.weights, pair.arity);
      const auto grid = disc_grid(static_cast<std::size_t>(pair.arity), 4.0, 3, pair.arity == 1 ? 16 : 6);
      const auto base = estimate_joint_index(f, L, grid, 5, 8);
      const auto doubled = estimate_joint_index(f, L.scaled(2.0), grid, 5, 8);
      CHECK(doubled.N <= base.N);
    }
  }

  TEST_CASE("local behaviour separates bounded from unbounded index") {
    const auto one = WeightVector::constant(1);
    const auto centers = real_points({0, 1, 2, 3, 4, 5, 6, 7, 8});
    const auto bounded =
        local_behavior_ratio(EntireFunction::parse("exp(z)", 1), one, PolyRadius{0.5}, PolyRadius{3.5}, centers, GridSpec{});
    CHECK_FALSE(bounded.growing);
    // ln M(z0, r) = |z0| + r along the positive axis, so every ratio is e^3.
    for (const auto& row : bounded.trace) CHECK(row.log_ratio == doctest::Approx(3.0).epsilon(1e-9));
    const auto unbounded = local_behavior_ratio(EntireFunction::parse("exp(z^2)", 1), one, PolyRadius{0.5},
                                                PolyRadius{3.5}, centers, GridSpec{});
    CHECK(unbounded.growing);
    // (x + r)^2 - (x + r')^2 grows like 6 x.
    CHECK(unbounded.trace[8].log_ratio - unbounded.trace[2].log_ratio == doctest::Approx(36.0).epsilon(1e-9));
    CHECK_THROWS_AS(local_behavior_ratio(EntireFunction::parse("exp(z)", 1), one, PolyRadius{0.5}, PolyRadius{2.0},
                                         centers, GridSpec{}),
                    DomainError);
  }
}
