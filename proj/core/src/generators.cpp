#include "ddmc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace ddmc {

LatticeFunction random_table(Rng& rng, int max_dim, Coord max_side, double hole_probability) {
  const int n = static_cast<int>(rng.range(1, max_dim));
  LatticePoint lo(static_cast<std::size_t>(n), 0), hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) hi[static_cast<std::size_t>(i)] = rng.range(1, max_side);
  const Box box(lo, hi);
  std::vector<double> values(box.size());
  for (auto& v : values) {
    v = rng.chance(hole_probability) ? std::numeric_limits<double>::infinity()
                                     : static_cast<double>(rng.range(0, 9));
  }
  return make_table(box, std::move(values));
}

LatticeFunction random_binary_cube_table(Rng& rng, int n) {
  const Box box(LatticePoint(static_cast<std::size_t>(n), 0),
                LatticePoint(static_cast<std::size_t>(n), 1));
  std::vector<double> values(box.size());
  for (auto& v : values) v = static_cast<double>(rng.range(0, 9));
  return make_table(box, std::move(values));
}

namespace {

double quarter(Rng& rng, Coord lo_quarters, Coord hi_quarters) {
  return static_cast<double>(rng.range(lo_quarters, hi_quarters)) / 4.0;
}

}  // namespace

QuadraticSpec random_symmetric_quadratic(Rng& rng, int n) {
  std::vector<std::vector<double>> q(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = quarter(rng, -12, 12);  // quarter-integers in [-3, 3]
      q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }
  return QuadraticSpec(q, {});
}

QuadraticSpec random_diag_dominant_quadratic(Rng& rng, int n) {
  std::vector<std::vector<double>> q(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = quarter(rng, -12, 12);
      q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) row += std::abs(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = row + quarter(rng, 0, 12);
  }
  std::vector<double> c(static_cast<std::size_t>(n));
  for (auto& ci : c) ci = quarter(rng, -8, 8);
  return QuadraticSpec(q, std::move(c));
}

UnivariateConvex random_univariate(Rng& rng) {
  switch (rng.below(5)) {
    case 0:
      return UnivariateConvex::abs(rng.range(-2, 2), quarter(rng, 1, 8));
    case 1:
      return UnivariateConvex::square(rng.range(-2, 2), quarter(rng, 1, 8));
    case 2:
      return UnivariateConvex::affine(quarter(rng, -8, 8), quarter(rng, -4, 4));
    case 3: {
      std::vector<std::pair<double, double>> pieces;
      const int count = static_cast<int>(rng.range(2, 3));
      for (int k = 0; k < count; ++k) {
        pieces.emplace_back(static_cast<double>(rng.range(-3, 3)),
                            static_cast<double>(rng.range(-3, 3)));
      }
      return UnivariateConvex::affine_max(std::move(pieces));
    }
    default: {
      // Convex table built from nonnegative second differences.
      const Coord lo = rng.range(-4, 0);
      const int len = static_cast<int>(rng.range(4, 9));
      double value = static_cast<double>(rng.range(0, 5));
      double slope = static_cast<double>(rng.range(-3, 1));
      std::vector<double> values;
      values.push_back(value);
      for (int k = 1; k < len; ++k) {
        value += slope;
        values.push_back(value);
        slope += static_cast<double>(rng.range(0, 2));
      }
      return UnivariateConvex::table(lo, std::move(values));
    }
  }
}

TwoSeparableSpec random_two_separable(Rng& rng, int n) {
  TwoSeparableSpec spec(n);
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (rng.chance(0.85)) {
      spec.set_xi(i, random_univariate(rng));
      any = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng.chance(0.35)) spec.set_phi(i, j, random_univariate(rng));
      if (rng.chance(0.35)) spec.set_psi(i, j, random_univariate(rng));
    }
  }
  if (!any) spec.set_xi(0, UnivariateConvex::square(0, 1.0));
  return spec;
}

std::vector<UnivariateConvex> random_separable_bounded(Rng& rng, int n, Coord lo, Coord hi) {
  std::vector<UnivariateConvex> pieces;
  pieces.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Coord a = rng.range(lo, hi);
    std::vector<double> values;
    const double weight = quarter(rng, 0, 6);
    for (Coord t = lo; t <= hi; ++t) {
      values.push_back(weight * static_cast<double>(std::abs(t - a)));
    }
    pieces.push_back(UnivariateConvex::table(lo, std::move(values)));
  }
  return pieces;
}

std::vector<LatticePoint> random_monotone_family(Rng& rng, int n, int m) {
  // Per coordinate: a sign and a cutoff; d^k_i = sign_i for k <= cutoff_i.
  // Some coordinate must keep its sign through level m so that every d^k is
  // nonzero.
  std::vector<int> sign(static_cast<std::size_t>(n)), cutoff(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    sign[iu] = static_cast<int>(rng.range(-1, 1));
    cutoff[iu] = sign[iu] == 0 ? 0 : static_cast<int>(rng.range(0, m));
  }
  const int full = static_cast<int>(rng.range(0, n - 1));
  sign[static_cast<std::size_t>(full)] = rng.chance(0.5) ? 1 : -1;
  cutoff[static_cast<std::size_t>(full)] = m;
  std::vector<LatticePoint> family;
  family.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    LatticePoint d(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      if (k <= cutoff[iu]) d[iu] = sign[iu];
    }
    family.push_back(std::move(d));
  }
  return family;
}

std::vector<LatticePoint> random_ddm_set(Rng& rng, int n, Coord radius, int seeds) {
  std::set<LatticePoint> closed;
  for (int s = 0; s < seeds; ++s) {
    LatticePoint p(static_cast<std::size_t>(n));
    for (auto& c : p) c = rng.range(-radius, radius);
    closed.insert(std::move(p));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<LatticePoint> snapshot(closed.begin(), closed.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        const auto [p, q] = directed_midpoint_pair(snapshot[i], snapshot[j]);
        if (closed.insert(p).second) grew = true;
        if (closed.insert(q).second) grew = true;
      }
    }
  }
  return {closed.begin(), closed.end()};
}

ContinuousTwoSeparable random_smooth_continuous_two_separable(Rng& rng, int n) {
  ContinuousTwoSeparable spec;
  spec.n = n;
  for (int i = 0; i < n; ++i) {
    // A strictly convex xi keeps the instance's minimizer unique enough for
    // coordinate descent to be trustworthy.
    spec.xi.emplace(i, ContinuousUnivariate::square(quarter(rng, -8, 8), quarter(rng, 2, 8)));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng.chance(0.4)) {
        spec.phi.emplace(std::make_pair(i, j),
                         ContinuousUnivariate::square(quarter(rng, -4, 4), quarter(rng, 1, 4)));
      }
      if (rng.chance(0.4)) {
        spec.psi.emplace(std::make_pair(i, j),
                         ContinuousUnivariate::square(quarter(rng, -4, 4), quarter(rng, 1, 4)));
      }
    }
  }
  return spec;
}

MinimizationInstance random_ddm_minimization_instance(Rng& rng) {
  const auto pick_start = [&rng](const LatticeFunction& f) {
    // Any point of dom f, biased toward the corners.
    const Box& box = f.universe();
    for (int tries = 0; tries < 256; ++tries) {
      LatticePoint x(box.lo().size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng.chance(0.5) ? (rng.chance(0.5) ? box.lo()[i] : box.hi()[i])
                               : rng.range(box.lo()[i], box.hi()[i]);
      }
      if (f(x).is_finite()) return x;
    }
    // Dense fallback.
    LatticePoint x = box.first();
    do {
      if (f(x).is_finite()) return x;
    } while (box.next(x));
    throw ArgumentError("random_ddm_minimization_instance: empty domain");
  };

  switch (rng.below(4)) {
    case 0: {
      const int n = static_cast<int>(rng.range(1, 2));
      const Coord r = rng.range(3, 5);
      const Box box(LatticePoint(static_cast<std::size_t>(n), -r),
                    LatticePoint(static_cast<std::size_t>(n), r));
      LatticeFunction f = make_two_separable(random_two_separable(rng, n), box);
      LatticePoint x0 = pick_start(f);
      return {std::move(f), std::move(x0), "two_separable"};
    }
    case 1: {
      const int n = static_cast<int>(rng.range(2, 3));
      const Coord r = rng.range(3, 5);
      const Box box(LatticePoint(static_cast<std::size_t>(n), -r),
                    LatticePoint(static_cast<std::size_t>(n), r));
      LatticeFunction f = make_quadratic(random_diag_dominant_quadratic(rng, n), box);
      LatticePoint x0 = pick_start(f);
      return {std::move(f), std::move(x0), "dd_quadratic"};
    }
    case 2: {
      // Univariate convex table (DDM-convex in one dimension).
      const Coord hi = rng.range(5, 9);
      const Box box(LatticePoint{0}, LatticePoint{hi});
      double value = static_cast<double>(rng.range(0, 6));
      double slope = static_cast<double>(rng.range(-4, 0));
      std::vector<double> values{value};
      for (Coord t = 1; t <= hi; ++t) {
        value += slope;
        values.push_back(value);
        slope += static_cast<double>(rng.range(0, 2));
      }
      LatticeFunction f = make_table(box, std::move(values));
      LatticePoint x0 = pick_start(f);
      return {std::move(f), std::move(x0), "convex_table_1d"};
    }
    default: {
      const int n = static_cast<int>(rng.range(2, 3));
      LatticeFunction f = random_binary_cube_table(rng, n);
      LatticePoint x0 = pick_start(f);
      return {std::move(f), std::move(x0), "binary_cube"};
    }
  }
}

}  // namespace ddmc
