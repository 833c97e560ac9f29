#pragma once

#include "ddmc/continuous.hpp"
#include "ddmc/function.hpp"

namespace ddmc {

/// SplitMix64. Deterministic across platforms and standard-library versions
/// (std distributions are implementation-defined, which would break the
/// byte-identical-fuzz-output contract), and more than random enough for
/// instance generation.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  Coord range(Coord lo, Coord hi) {  // inclusive
    return lo + static_cast<Coord>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return real01() < p; }

private:
  std::uint64_t state_;
};

/// Random table function: a box up to [0,3]^3, values in {0..9}, +inf holes
/// with the given probability.
LatticeFunction random_table(Rng& rng, int max_dim = 3, Coord max_side = 3,
                             double hole_probability = 0.2);

/// Random table on {0,1}^n (always DDM-convex).
LatticeFunction random_binary_cube_table(Rng& rng, int n);

/// Random symmetric Q with quarter-integer entries in [-3,3] (dominance not
/// enforced), as the equivalence oracle for the diagonal-dominance theorem.
QuadraticSpec random_symmetric_quadratic(Rng& rng, int n);

/// Random diagonally dominant Q with nonnegative diagonals: quarter-integer
/// off-diagonals, diagonal = row absolute sum + nonnegative slack.
QuadraticSpec random_diag_dominant_quadratic(Rng& rng, int n);

/// Random univariate discrete convex piece from the closed-form-plus-table
/// pool.
UnivariateConvex random_univariate(Rng& rng);

/// Random 2-separable spec with pieces from the pool.
TwoSeparableSpec random_two_separable(Rng& rng, int n);

/// Random separable convex pieces, each with a bounded finite part (table
/// form), usable as a convolution argument.
std::vector<UnivariateConvex> random_separable_bounded(Rng& rng, int n, Coord lo, Coord hi);

/// Random monotone direction family: nonzero {-1,0,+1}^n vectors d^1..d^m
/// whose per-coordinate sequences are sign-constant with nonincreasing
/// magnitude, the hypothesis of the decomposition round-trip.
std::vector<LatticePoint> random_monotone_family(Rng& rng, int n, int m);

/// Random DDM-convex set: close a random point seed under the directed
/// midpoint pair until stable.
std::vector<LatticePoint> random_ddm_set(Rng& rng, int n, Coord radius, int seeds);

/// Random continuous 2-separable spec with smooth pieces only (squares and
/// affines), so coordinate descent is a reliable solver.
ContinuousTwoSeparable random_smooth_continuous_two_separable(Rng& rng, int n);

/// A DDM-convex minimization instance with a feasible start point.
struct MinimizationInstance {
  LatticeFunction f;
  LatticePoint x0;
  std::string kind;
};

/// Mixture of 2-separable, diagonally dominant quadratic, univariate convex
/// table, and binary-cube instances; every one is DDM-convex by construction
/// or theorem.
MinimizationInstance random_ddm_minimization_instance(Rng& rng);

}  // namespace ddmc
