#include <doctest.h>

#include <algorithm>
#include <limits>

#include "ddmc/operations.hpp"

using namespace ddmc;

namespace {

LatticeFunction square_1d(Coord lo, Coord hi) {
  return make_separable({UnivariateConvex::square(0)}, Box({lo}, {hi}));
}

}  // namespace

TEST_CASE("translate follows g(x) = f(x+d)") {
  const LatticeFunction f = make_indicator({{0, 0}});
  const LatticeFunction g = translate(f, {1, 1});
  CHECK(g({-1, -1}) == ExtendedValue(0.0));
  CHECK(g({1, 1}).is_infinite());
  CHECK(g.universe().lo() == LatticePoint{-1, -1});
}

TEST_CASE("permute and sign flip") {
  // f(x, y) = x + 2y encoded as a table over [0,1]^2.
  const Box box(LatticePoint{0, 0}, LatticePoint{1, 1});
  const LatticeFunction f = make_table(box, {0, 2, 1, 3});
  const LatticeFunction g = permute(f, {1, 0});  // g(x, y) = f(y, x)
  CHECK(g({1, 0}) == f(LatticePoint{0, 1}));
  CHECK(g({0, 1}) == f(LatticePoint{1, 0}));
  CHECK_THROWS_AS(permute(f, {0, 0}), ArgumentError);

  const LatticeFunction h = sign_flip(f, {-1, 1});
  CHECK(h({-1, 1}) == f(LatticePoint{1, 1}));
  CHECK(h.universe().lo() == LatticePoint{-1, 0});
  CHECK_THROWS_AS(sign_flip(f, {0, 1}), ArgumentError);
}

TEST_CASE("scaling the argument") {
  const LatticeFunction f = square_1d(-10, 10);
  const LatticeFunction g = scale(f, 2);
  CHECK(g({3}) == ExtendedValue(36.0));
  CHECK(g.universe().lo() == LatticePoint{-5});
  CHECK_THROWS_AS(scale(f, 0), ArgumentError);
  CHECK_THROWS_AS(scale(make_indicator({{5}, {7}}), 8), ArgumentError);
}

TEST_CASE("nonnegative combinations and direct sums") {
  const LatticeFunction delta = make_indicator({{1, 0}, {0, 1}});
  const LatticeFunction sum = nonneg_sum(delta, delta, 1, 1);
  CHECK(sum({1, 0}) == ExtendedValue(0.0));
  CHECK(sum({0, 0}).is_infinite());
  CHECK_THROWS_AS(nonneg_sum(delta, delta, -1, 0), ArgumentError);

  const LatticeFunction ds = direct_sum(delta, make_indicator({{0}}));
  CHECK(ds({1, 0, 0}) == ExtendedValue(0.0));
  CHECK(ds({1, 1, 0}).is_infinite());
  CHECK(ds.dim() == 3);

  const LatticeFunction fx2 = square_1d(-5, 5);
  const LatticeFunction fabs = make_separable({UnivariateConvex::abs(0)}, Box({-5}, {5}));
  const LatticeFunction mix = nonneg_sum(fx2, fabs, 2, 3);
  CHECK(mix({-2}) == ExtendedValue(14.0));

  // Zero coefficients drop their term (0 * inf = 0).
  const LatticeFunction only_abs = nonneg_sum(make_indicator({{1}}, Box({-5}, {5})), fabs, 0, 1);
  CHECK(only_abs({-2}) == ExtendedValue(2.0));
}

TEST_CASE("restriction fixes coordinates") {
  const Box box(LatticePoint{-3, -3}, LatticePoint{3, 3});
  const LatticeFunction f = make_separable(
      {UnivariateConvex::square(0), UnivariateConvex::square(0)}, box);
  const LatticeFunction g = restrict_fn(f, {{1, 0}});
  CHECK(g.dim() == 1);
  CHECK(g({2}) == ExtendedValue(4.0));
  const LatticeFunction shifted = restrict_fn(f, {{0, 3}});
  CHECK(shifted({1}) == ExtendedValue(10.0));
  CHECK_THROWS_AS(restrict_fn(f, {{0, 0}, {1, 0}}), ArgumentError);
  CHECK_THROWS_AS(restrict_fn(f, {{5, 0}}), ArgumentError);
}

TEST_CASE("projection minimizes over eliminated coordinates") {
  // f(x1, x2) = (x1 - x2)^2 over x2 in [-3, 3].
  const Box box(LatticePoint{-3, -3}, LatticePoint{3, 3});
  const QuadraticSpec q({{1, -1}, {-1, 1}}, {});
  const LatticeFunction f = make_quadratic(q, box);
  const LatticeFunction g = project_fn(f, {0});
  for (Coord x1 = -3; x1 <= 3; ++x1) {
    // Independent oracle: direct enumeration of the eliminated coordinate.
    double expected = std::numeric_limits<double>::infinity();
    for (Coord x2 = -3; x2 <= 3; ++x2) {
      expected = std::min(expected, q.evaluate({x1, x2}));
    }
    CHECK(g({x1}).finite() == expected);
    CHECK(expected == 0.0);
  }

  // Projection inverts the direct sum of indicators.
  const LatticeFunction s1 = make_indicator({{1, 0}, {0, 1}});
  const LatticeFunction s2 = make_indicator({{4}, {5}});
  const LatticeFunction both = direct_sum(s1, s2);
  const LatticeFunction back = project_fn(both, {0, 1});
  for (Coord a = 0; a <= 1; ++a) {
    for (Coord b = 0; b <= 1; ++b) {
      CHECK((back({a, b}) == s1(LatticePoint{a, b})));
    }
  }
  CHECK_THROWS_AS(project_fn(s1, {0, 1}), ArgumentError);
}

TEST_CASE("infimal convolution") {
  const LatticeFunction f = make_indicator({{0, 0}, {1, 1}});

  // Convolution with the origin indicator is the identity.
  const LatticeFunction identity = infimal_convolution(f, make_indicator({{0, 0}}));
  CHECK(identity({0, 0}) == ExtendedValue(0.0));
  CHECK(identity({1, 1}) == ExtendedValue(0.0));
  CHECK(identity({1, 0}).is_infinite());

  // Minkowski sum with the integral box [0,1]^2.
  const LatticeFunction origin = make_indicator({{0, 0}});
  const LatticeFunction box_ind = make_indicator({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const LatticeFunction sum = infimal_convolution(origin, box_ind);
  for (Coord a = 0; a <= 1; ++a) {
    for (Coord b = 0; b <= 1; ++b) {
      CHECK(sum({a, b}) == ExtendedValue(0.0));
    }
  }

  // Separable form requires bounded pieces.
  const LatticeFunction g = square_1d(-2, 2);
  CHECK_THROWS_AS(infconv_separable(g, {UnivariateConvex::abs(0)}), ArgumentError);
  const LatticeFunction conv =
      infconv_separable(g, {UnivariateConvex::table(-1, {1, 0, 1})});
  // (g [] |.|)(3) = min over z in [-1,1] of (3-z)^2 + |z| = 4 + 1 at z = 1.
  CHECK(conv({3}) == ExtendedValue(5.0));

  const auto sum_points = minkowski_sum({{0, 0, 0}, {1, 1, 0}}, {{0, 0, 0}, {0, 1, 1}});
  CHECK(sum_points == std::vector<LatticePoint>{{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}});
}

TEST_CASE("linear tilt") {
  const LatticeFunction f = square_1d(-3, 3);
  const LatticeFunction tilted = linear_tilt(f, {2.0});
  CHECK(tilted({2}) == ExtendedValue(0.0));
  CHECK(tilted({-1}) == ExtendedValue(3.0));
}
