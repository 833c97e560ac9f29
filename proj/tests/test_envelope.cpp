#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "ddmc/envelope.hpp"
#include "ddmc/generators.hpp"

using namespace ddmc;

TEST_CASE("rational arithmetic") {
  const Rational a(3, 6);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK((a + Rational(1, 3)) == Rational(5, 6));
  CHECK((a * Rational(-4, 2)) == Rational(-1));
  CHECK((Rational(7) / Rational(2)).to_double() == 3.5);
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Rational(3, 2).floor() == 1);
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), ArgumentError);

  // Overflow is detected, never silently wrapped.
  const Rational huge(1, std::numeric_limits<std::int64_t>::max() / 2);
  CHECK_THROWS_AS(huge * huge, DiagnosticError);
}

TEST_CASE("integer neighborhood") {
  const std::vector<Rational> integral = {Rational(2), Rational(-1)};
  CHECK(integer_neighborhood(integral) == std::vector<LatticePoint>{{2, -1}});

  const std::vector<Rational> half = {Rational(1, 2), Rational(3)};
  const auto nbhd = integer_neighborhood(half);
  CHECK(nbhd.size() == 2);
  CHECK(std::find(nbhd.begin(), nbhd.end(), LatticePoint{0, 3}) != nbhd.end());
  CHECK(std::find(nbhd.begin(), nbhd.end(), LatticePoint{1, 3}) != nbhd.end());

  const std::vector<Rational> negative_half = {Rational(-1, 2)};
  const auto nn = integer_neighborhood(negative_half);
  CHECK(std::find(nn.begin(), nn.end(), LatticePoint{-1}) != nn.end());
  CHECK(std::find(nn.begin(), nn.end(), LatticePoint{0}) != nn.end());
}

TEST_CASE("envelope at worked points") {
  // Integral points: the envelope is f itself.
  const LatticeFunction f = make_indicator({{0, 0}, {1, 1}});
  CHECK(local_convex_envelope(f, {Rational(1), Rational(1)}) == ExtendedValue(0.0));
  CHECK(local_convex_envelope(f, {Rational(1), Rational(0)}).is_infinite());

  // Half of the diagonal pair.
  CHECK(local_convex_envelope(f, {Rational(1, 2), Rational(1, 2)}) == ExtendedValue(0.0));

  // x1^2 + x2^2 at (1/2, 1/2): every feasible combination costs exactly 1.
  const Box box(LatticePoint{-2, -2}, LatticePoint{2, 2});
  const LatticeFunction sq =
      make_quadratic(QuadraticSpec({{1, 0}, {0, 1}}, {}), box);
  const ExtendedValue v = local_convex_envelope(sq, {Rational(1, 2), Rational(1, 2)});
  CHECK(v.finite() == doctest::Approx(1.0));

  // Midpoint helper.
  CHECK(envelope_at_midpoint(f, {0, 0}, {1, 1}) == ExtendedValue(0.0));
}

namespace {

// Independent oracle: enumerate every basis subset of finite neighbors of
// size <= n+1, solve the equality system by Gaussian elimination, and keep
// the best feasible objective. Exponential and simplex-free.
double envelope_by_enumeration(const LatticeFunction& f, const std::vector<Rational>& z) {
  const auto neighborhood = integer_neighborhood(z);
  std::vector<LatticePoint> pts;
  std::vector<double> costs;
  for (const auto& w : neighborhood) {
    const ExtendedValue v = f(w);
    if (v.is_finite()) {
      pts.push_back(w);
      costs.push_back(v.finite());
    }
  }
  const int n = static_cast<int>(z.size());
  const int rows = n + 1;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t count = pts.size();
  for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
    if (std::popcount(mask) > rows) continue;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < count; ++j) {
      if (mask & (1u << j)) support.push_back(j);
    }
    // Solve [w; 1] lambda = [z; 1] by least-structure Gaussian elimination.
    const std::size_t cols = support.size();
    std::vector<std::vector<double>> a(static_cast<std::size_t>(rows),
                                       std::vector<double>(cols + 1, 0.0));
    for (int r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        a[static_cast<std::size_t>(r)][c] =
            static_cast<double>(pts[support[c]][static_cast<std::size_t>(r)]);
      }
      a[static_cast<std::size_t>(r)][cols] = z[static_cast<std::size_t>(r)].to_double();
    }
    for (std::size_t c = 0; c < cols; ++c) a[static_cast<std::size_t>(n)][c] = 1.0;
    a[static_cast<std::size_t>(n)][cols] = 1.0;

    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t best_row = static_cast<std::size_t>(rank);
      for (std::size_t r = static_cast<std::size_t>(rank); r < a.size(); ++r) {
        if (std::abs(a[r][c]) > std::abs(a[best_row][c])) best_row = r;
      }
      if (std::abs(a[best_row][c]) < 1e-12) continue;
      std::swap(a[static_cast<std::size_t>(rank)], a[best_row]);
      const double pivot = a[static_cast<std::size_t>(rank)][c];
      for (auto& entry : a[static_cast<std::size_t>(rank)]) entry /= pivot;
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (r == static_cast<std::size_t>(rank)) continue;
        const double factor = a[r][c];
        if (factor == 0.0) continue;
        for (std::size_t k = 0; k <= cols; ++k) {
          a[r][k] -= factor * a[static_cast<std::size_t>(rank)][k];
        }
      }
      pivot_of_col[c] = rank;
      ++rank;
    }
    // Inconsistent system?
    bool consistent = true;
    for (std::size_t r = static_cast<std::size_t>(rank); r < a.size(); ++r) {
      if (std::abs(a[r][cols]) > 1e-9) consistent = false;
    }
    if (!consistent) continue;
    // Free columns pinned to zero; read off the pivot solution.
    std::vector<double> lambda(cols, 0.0);
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] >= 0) {
        lambda[c] = a[static_cast<std::size_t>(pivot_of_col[c])][cols];
      }
    }
    bool feasible = true;
    double objective = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (lambda[c] < -1e-9) feasible = false;
      objective += lambda[c] * costs[support[c]];
    }
    if (feasible) best = std::min(best, objective);
  }
  return best;
}

}  // namespace

TEST_CASE("simplex agrees with exhaustive basis enumeration") {
  Rng rng(606);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.range(2, 3));
    const Box box(LatticePoint(static_cast<std::size_t>(n), -2),
                  LatticePoint(static_cast<std::size_t>(n), 2));
    std::vector<double> values(box.size());
    for (auto& v : values) {
      v = rng.chance(0.25) ? std::numeric_limits<double>::infinity()
                           : static_cast<double>(rng.range(0, 9));
    }
    const LatticeFunction f = make_table(box, std::move(values));

    LatticePoint x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (auto& c : x) c = rng.range(-2, 2);
    for (auto& c : y) c = rng.range(-2, 2);
    std::vector<Rational> z;
    for (int i = 0; i < n; ++i) {
      z.emplace_back(x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)], 2);
    }

    const ExtendedValue via_simplex = local_convex_envelope(f, z);
    const double via_enumeration = envelope_by_enumeration(f, z);
    if (via_simplex.is_infinite()) {
      CHECK(std::isinf(via_enumeration));
    } else {
      CHECK(via_simplex.finite() == doctest::Approx(via_enumeration).epsilon(1e-7));
      ++compared;
    }
  }
  CHECK(compared > 50);  // the corpus must exercise feasible instances
}
