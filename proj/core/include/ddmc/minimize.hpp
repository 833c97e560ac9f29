#pragma once

#include "ddmc/classify.hpp"
#include "ddmc/function.hpp"
#include "ddmc/verdict.hpp"

namespace ddmc {

/// A point of N_1(x) = { y : ||y - x||_inf <= 1 } with minimum f-value.
/// Ties: x itself wins at equal value (so a local minimum returns x);
/// among strictly improving neighbors the lexicographically smallest wins.
/// Points outside the universe are skipped by the scan. Throws
/// ArgumentError when x is not in dom f.
LatticePoint one_neighborhood_argmin(const LatticeFunction& f, const LatticePoint& x);

struct DescentTrace {
  std::vector<LatticePoint> path;  // x(0) .. x(k), last value repeats
  std::vector<double> values;      // f along the path
  std::uint64_t oracle_calls = 0;  // 1-neighborhood minimizations, = iterations
  std::uint64_t function_evals = 0;
  LatticePoint minimizer;
  /// L = min l_inf distance from x(0) to argmin f, brute-forced over the
  /// universe when requested; the descent above uses exactly L+1 calls on a
  /// DDM-convex input.
  std::optional<Coord> distance_to_argmin;
};

struct DescentOptions {
  bool compute_distance = true;
  std::uint64_t max_points = 50'000'000;  // brute-force budget for L
};

/// The 1-neighborhood steepest descent loop: repeat the neighborhood
/// minimization from the last point and stop at the first repeated value,
/// returning the previous point. Iteration guard: (universe diameter + 2)
/// oracle calls; exceeding it raises DiagnosticError (the input is not
/// DDM-convex or descends without bound).
DescentTrace steepest_descent(const LatticeFunction& f, const LatticePoint& x0,
                              const DescentOptions& opts = {});

struct ScalingPhase {
  Coord alpha = 1;
  LatticePoint point;  // x after the phase
  std::uint64_t oracle_calls = 0;
};

struct ScalingTrace {
  std::vector<ScalingPhase> phases;  // alphas descend by halving to 1
  std::uint64_t total_oracle_calls = 0;
  std::uint64_t function_evals = 0;
  Coord k_inf = 0;
  LatticePoint minimizer;
};

/// Proximity-driven scaling: alpha starts at 2^ceil(log2(K_inf + 1)) and
/// halves down to 1; each phase minimizes f(x + alpha y) over ||y||_inf <= n
/// by steepest descent from y = 0, the ball enforced by clamping the
/// neighborhood enumeration. K_inf defaults to the universe diameter.
ScalingTrace scaling_minimize(const LatticeFunction& f, const LatticePoint& x0,
                              std::optional<Coord> k_inf_override = std::nullopt);

/// The raw 1-neighborhood local-minimality test f(x) <= f(x + d) for all
/// d in {-1,0,+1}^n. For an integrally convex (in particular DDM-convex) f
/// this certifies global minimality; for anything else the caller owns the
/// interpretation.
bool is_global_min(const LatticeFunction& f, const LatticePoint& x);

struct BruteForceResult {
  ExtendedValue min_value = ExtendedValue::infinity();
  std::vector<LatticePoint> minimizers;  // lexicographic order
};

BruteForceResult brute_force_argmin(const LatticeFunction& f, const Box& box,
                                    std::uint64_t max_points = 50'000'000);

/// Wall bounds for the box-barrier check: nullopt means -inf / +inf on that
/// side.
struct BarrierWalls {
  std::vector<std::optional<Coord>> lower;  // p
  std::vector<std::optional<Coord>> upper;  // q
};

/// Empirical box-barrier check: with S the open box p < x < q and W its
/// walls, if f(xhat) <= f(y) for all wall points y within the enumeration
/// box, then f(xhat) <= f(z) must hold for every z in box \ S. A violation
/// refutes integral convexity of f.
Verdict box_barrier_verify(const LatticeFunction& f, const BarrierWalls& walls,
                           const LatticePoint& xhat, const Box& box,
                           const CheckOptions& opts = {});

/// Proximity sweep: every alpha-local point x^a in the box shrunk by alpha
/// (f(x^a) <= f(x^a + alpha d) for all d in {-1,0,+1}^n) must have a global
/// minimizer within l_inf distance n (alpha - 1).
Verdict verify_proximity(const LatticeFunction& f, Coord alpha, const Box& box,
                         const CheckOptions& opts = {});

}  // namespace ddmc
