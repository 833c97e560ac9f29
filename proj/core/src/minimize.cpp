#include "ddmc/minimize.hpp"

#include <algorithm>
#include <sstream>

namespace ddmc {

namespace {

std::string point_str(const LatticePoint& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ",";
    out << x[i];
  }
  out << ")";
  return out.str();
}

// Lexicographic scan of N_1(x) within the universe. `evals` counts raw
// function evaluations (the center is not re-evaluated; its value is passed
// in).
LatticePoint neighborhood_argmin_impl(const LatticeFunction& f, const LatticePoint& x,
                                      double center_value, double& best_value,
                                      std::uint64_t& evals) {
  const int n = f.dim();
  LatticePoint best = x;
  best_value = center_value;
  LatticePoint offset(static_cast<std::size_t>(n), -1);
  LatticePoint y(static_cast<std::size_t>(n));
  while (true) {
    bool is_center = true;
    for (int i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      y[iu] = x[iu] + offset[iu];
      if (offset[iu] != 0) is_center = false;
    }
    if (!is_center && f.universe().contains(y)) {
      const ExtendedValue v = f(y);
      ++evals;
      if (v.is_finite() && v.finite() < best_value) {
        best_value = v.finite();
        best = y;
      }
    }
    int i = n - 1;
    while (i >= 0 && offset[static_cast<std::size_t>(i)] == 1) {
      offset[static_cast<std::size_t>(i)] = -1;
      --i;
    }
    if (i < 0) break;
    ++offset[static_cast<std::size_t>(i)];
  }
  return best;
}

}  // namespace

LatticePoint one_neighborhood_argmin(const LatticeFunction& f, const LatticePoint& x) {
  const ExtendedValue fx = f(x);
  if (fx.is_infinite()) {
    throw ArgumentError("one_neighborhood_argmin: " + point_str(x) + " is not in dom f");
  }
  double best_value = 0.0;
  std::uint64_t evals = 0;
  return neighborhood_argmin_impl(f, x, fx.finite(), best_value, evals);
}

DescentTrace steepest_descent(const LatticeFunction& f, const LatticePoint& x0,
                              const DescentOptions& opts) {
  const ExtendedValue f0 = f(x0);
  if (f0.is_infinite()) {
    throw ArgumentError("steepest_descent: initial point " + point_str(x0) +
                        " is not in dom f");
  }
  const std::uint64_t guard = static_cast<std::uint64_t>(f.universe().diameter()) + 2;

  DescentTrace trace;
  trace.path.push_back(x0);
  trace.values.push_back(f0.finite());
  trace.function_evals = 1;

  LatticePoint current = x0;
  double current_value = f0.finite();
  while (true) {
    if (trace.oracle_calls >= guard) {
      throw DiagnosticError(
          "steepest_descent: iteration cap of " + std::to_string(guard) +
          " 1-neighborhood calls exceeded; the input is not DDM-convex or descends "
          "without bound");
    }
    double next_value = 0.0;
    const LatticePoint next =
        neighborhood_argmin_impl(f, current, current_value, next_value, trace.function_evals);
    ++trace.oracle_calls;
    trace.path.push_back(next);
    trace.values.push_back(next_value);
    if (next_value == current_value) {
      trace.minimizer = current;
      break;
    }
    current = next;
    current_value = next_value;
  }

  if (opts.compute_distance) {
    const BruteForceResult result = brute_force_argmin(f, f.universe(), opts.max_points);
    Coord best = -1;
    for (const auto& minimizer : result.minimizers) {
      const Coord d = chebyshev_distance(x0, minimizer);
      if (best < 0 || d < best) best = d;
    }
    if (best >= 0) trace.distance_to_argmin = best;
  }
  return trace;
}

ScalingTrace scaling_minimize(const LatticeFunction& f, const LatticePoint& x0,
                              std::optional<Coord> k_inf_override) {
  const ExtendedValue f0 = f(x0);
  if (f0.is_infinite()) {
    throw ArgumentError("scaling_minimize: initial point " + point_str(x0) +
                        " is not in dom f");
  }
  const Coord k_inf = k_inf_override.value_or(f.universe().diameter());
  if (k_inf < 0) throw ArgumentError("scaling_minimize: negative K_inf");

  Coord alpha = 1;
  while (alpha <= k_inf) alpha <<= 1;  // 2^ceil(log2(K_inf + 1))

  const int n = f.dim();
  ScalingTrace trace;
  trace.k_inf = k_inf;
  LatticePoint x = x0;

  const LatticePoint ball_lo(static_cast<std::size_t>(n), -static_cast<Coord>(n));
  const LatticePoint ball_hi(static_cast<std::size_t>(n), static_cast<Coord>(n));
  const Box ball(ball_lo, ball_hi);
  const LatticePoint origin(static_cast<std::size_t>(n), 0);

  while (true) {
    const Coord step = alpha;
    const LatticePoint base = x;
    const LatticeFunction phase_fn(
        ball,
        [&f, base, step](const LatticePoint& y) {
          LatticePoint target(base.size());
          for (std::size_t i = 0; i < base.size(); ++i) target[i] = base[i] + step * y[i];
          // Points mapping outside the universe of f evaluate to +inf there.
          for (std::size_t i = 0; i < base.size(); ++i) {
            if (std::abs(target[i]) > kCoordLimit) return ExtendedValue::infinity();
          }
          return f(target);
        },
        "scaled-phase");

    DescentOptions phase_opts;
    phase_opts.compute_distance = false;
    const DescentTrace descent = steepest_descent(phase_fn, origin, phase_opts);
    if (norm_inf(descent.minimizer) > static_cast<Coord>(n)) {
      throw DiagnosticError(
          "scaling_minimize: a phase left the ||y||_inf <= n ball, which the proximity "
          "theorem forbids for DDM-convex inputs");
    }
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base[i] + step * descent.minimizer[i];
    trace.phases.push_back({alpha, x, descent.oracle_calls});
    trace.total_oracle_calls += descent.oracle_calls;
    trace.function_evals += descent.function_evals;
    if (alpha == 1) break;
    alpha >>= 1;
  }
  trace.minimizer = x;
  return trace;
}

bool is_global_min(const LatticeFunction& f, const LatticePoint& x) {
  const ExtendedValue fx = f(x);
  if (fx.is_infinite()) {
    throw ArgumentError("is_global_min: " + point_str(x) + " is not in dom f");
  }
  double best = 0.0;
  std::uint64_t evals = 0;
  const LatticePoint better = neighborhood_argmin_impl(f, x, fx.finite(), best, evals);
  (void)better;
  return best == fx.finite();
}

BruteForceResult brute_force_argmin(const LatticeFunction& f, const Box& box,
                                    std::uint64_t max_points) {
  if (box.size() > max_points) {
    throw ResourceError("brute_force_argmin: box of " + std::to_string(box.size()) +
                        " points exceeds the cap of " + std::to_string(max_points));
  }
  BruteForceResult result;
  LatticePoint x = box.first();
  do {
    const ExtendedValue v = f(x);
    if (v.is_infinite()) continue;
    if (result.minimizers.empty() || v < result.min_value) {
      result.min_value = v;
      result.minimizers.clear();
      result.minimizers.push_back(x);
    } else if (v == result.min_value) {
      result.minimizers.push_back(x);
    }
  } while (box.next(x));
  return result;
}

Verdict box_barrier_verify(const LatticeFunction& f, const BarrierWalls& walls,
                           const LatticePoint& xhat, const Box& box,
                           const CheckOptions& opts) {
  const int n = f.dim();
  if (static_cast<int>(walls.lower.size()) != n || static_cast<int>(walls.upper.size()) != n ||
      static_cast<int>(xhat.size()) != n) {
    throw ArgumentError("box_barrier_verify: dimension mismatch");
  }
  for (int i = 0; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    if (walls.lower[iu] && walls.upper[iu] && *walls.lower[iu] > *walls.upper[iu]) {
      throw ArgumentError("box_barrier_verify: p > q in coordinate " + std::to_string(i));
    }
    if ((walls.lower[iu] && xhat[iu] <= *walls.lower[iu]) ||
        (walls.upper[iu] && xhat[iu] >= *walls.upper[iu])) {
      throw ArgumentError("box_barrier_verify: xhat is outside the open box S");
    }
  }
  const ExtendedValue fhat_value = f(xhat);
  if (fhat_value.is_infinite()) {
    throw ArgumentError("box_barrier_verify: xhat is not in dom f");
  }
  const double fhat = fhat_value.finite();

  const auto within_closed = [&](const LatticePoint& y, int except) {
    for (int j = 0; j < n; ++j) {
      if (j == except) continue;
      const auto ju = static_cast<std::size_t>(j);
      if (walls.lower[ju] && y[ju] < *walls.lower[ju]) return false;
      if (walls.upper[ju] && y[ju] > *walls.upper[ju]) return false;
    }
    return true;
  };
  const auto on_wall = [&](const LatticePoint& y) {
    for (int i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      if (walls.upper[iu] && y[iu] == *walls.upper[iu] && within_closed(y, i)) return true;
      if (walls.lower[iu] && y[iu] == *walls.lower[iu] && within_closed(y, i)) return true;
    }
    return false;
  };
  const auto in_open_box = [&](const LatticePoint& y) {
    for (int i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      if (walls.lower[iu] && y[iu] <= *walls.lower[iu]) return false;
      if (walls.upper[iu] && y[iu] >= *walls.upper[iu]) return false;
    }
    return true;
  };

  Verdict verdict;
  // Premise: f(xhat) <= f(y) on every wall point inside the enumeration box.
  LatticePoint y = box.first();
  do {
    if (!on_wall(y)) continue;
    ++verdict.pairs_checked;
    const ExtendedValue v = f(y);
    if (v.is_finite() && v.finite() < fhat - opts.eps) {
      verdict.detail = "premise fails: wall point " + point_str(y) + " has f = " +
                       std::to_string(v.finite()) + " < f(xhat) = " + std::to_string(fhat) +
                       "; the implication is vacuous";
      return verdict;  // vacuously holds
    }
  } while (box.next(y));

  // Conclusion: f(xhat) <= f(z) outside the open box.
  LatticePoint z = box.first();
  do {
    if (in_open_box(z)) continue;
    ++verdict.pairs_checked;
    const ExtendedValue v = f(z);
    if (v.is_finite() && v.finite() < fhat - opts.eps) {
      verdict.holds = false;
      verdict.witness = Witness{xhat, z};
      verdict.detail = "box-barrier violated: walls dominate f(xhat) = " +
                       std::to_string(fhat) + " but f" + point_str(z) + " = " +
                       std::to_string(v.finite()) + "; f is not integrally convex";
      return verdict;
    }
  } while (box.next(z));
  return verdict;
}

Verdict verify_proximity(const LatticeFunction& f, Coord alpha, const Box& box,
                         const CheckOptions& opts) {
  if (alpha < 1) throw ArgumentError("verify_proximity: alpha must be a positive integer");
  const BruteForceResult result = brute_force_argmin(f, box, opts.max_pairs);
  if (result.minimizers.empty()) {
    throw ArgumentError("verify_proximity: dom f is empty within the box");
  }
  Verdict verdict;
  const auto shrunk = box.shrunk(alpha);
  if (!shrunk) {
    verdict.detail = "box shrunk by alpha is empty; no candidate points";
    return verdict;
  }
  const int n = f.dim();
  const Coord bound = static_cast<Coord>(n) * (alpha - 1);

  LatticePoint x = shrunk->first();
  do {
    const ExtendedValue fx = f(x);
    if (fx.is_infinite()) continue;

    // alpha-local test: f(x) <= f(x + alpha d) for every d in {-1,0,+1}^n.
    bool qualifies = true;
    LatticePoint offset(static_cast<std::size_t>(n), -1);
    while (qualifies) {
      LatticePoint target(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) target[i] = x[i] + alpha * offset[i];
      const ExtendedValue v = f(target);
      if (v.is_finite() && v.finite() < fx.finite()) qualifies = false;
      int i = n - 1;
      while (i >= 0 && offset[static_cast<std::size_t>(i)] == 1) {
        offset[static_cast<std::size_t>(i)] = -1;
        --i;
      }
      if (i < 0) break;
      ++offset[static_cast<std::size_t>(i)];
    }
    if (!qualifies) continue;

    ++verdict.pairs_checked;
    Coord best = -1;
    LatticePoint nearest;
    for (const auto& minimizer : result.minimizers) {
      const Coord d = chebyshev_distance(x, minimizer);
      if (best < 0 || d < best) {
        best = d;
        nearest = minimizer;
      }
    }
    if (best > bound) {
      verdict.holds = false;
      verdict.witness = Witness{x, nearest};
      verdict.detail = "alpha-local point " + point_str(x) + " is at distance " +
                       std::to_string(best) + " from the nearest minimizer " +
                       point_str(nearest) + ", exceeding n(alpha-1) = " +
                       std::to_string(bound);
      return verdict;
    }
  } while (shrunk->next(x));
  return verdict;
}

}  // namespace ddmc
