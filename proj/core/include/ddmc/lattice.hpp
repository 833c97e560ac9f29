#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ddmc/errors.hpp"

namespace ddmc {

using Coord = std::int64_t;

/// A point of the integer lattice Z^n. All cross-point operations require
/// equal lengths and throw ArgumentError otherwise. Coordinates are kept
/// within |c| <= kCoordLimit by the enumeration machinery, far inside the
/// representable range, so the integer arithmetic below never wraps.
using LatticePoint = std::vector<Coord>;

inline constexpr Coord kCoordLimit = 1'000'000;

void require_same_dim(const LatticePoint& x, const LatticePoint& y);

/// floor(a/2) and ceil(a/2), exact for negative values (no floating point).
constexpr Coord floor_half(Coord a) { return a >> 1; }
constexpr Coord ceil_half(Coord a) { return -((-a) >> 1); }

/// The directed midpoint: component i is (x_i+y_i)/2 rounded toward x_i.
LatticePoint directed_midpoint(const LatticePoint& x, const LatticePoint& y);

/// (mu(x,y), mu(y,x)). The pair p, q is characterized by p+q = x+y,
/// ||p-q||_inf <= 1, and p_i >= q_i exactly where x_i >= y_i.
std::pair<LatticePoint, LatticePoint> directed_midpoint_pair(const LatticePoint& x,
                                                             const LatticePoint& y);

/// (ceil((x+y)/2), floor((x+y)/2)), componentwise.
std::pair<LatticePoint, LatticePoint> rounded_midpoint_pair(const LatticePoint& x,
                                                            const LatticePoint& y);

Coord chebyshev_distance(const LatticePoint& x, const LatticePoint& y);
Coord norm_inf(const LatticePoint& x);

LatticePoint add(const LatticePoint& x, const LatticePoint& y);
LatticePoint subtract(const LatticePoint& x, const LatticePoint& y);
LatticePoint negate(const LatticePoint& x);
LatticePoint join(const LatticePoint& x, const LatticePoint& y);  // componentwise max
LatticePoint meet(const LatticePoint& x, const LatticePoint& y);  // componentwise min

/// One level of the decomposition of y-x: `up` holds the coordinates i with
/// y_i - x_i >= level, `down` those with y_i - x_i <= -level. Over
/// level = 1..m the two families are nested and up/down never intersect.
struct LevelSetPair {
  Coord level = 0;
  std::vector<int> up;
  std::vector<int> down;

  /// The direction vector 1_up - 1_down in dimension n.
  LatticePoint direction(int n) const;

  bool operator==(const LevelSetPair&) const = default;
};

/// The nested level sets of the displacement y-x, for levels 1..||y-x||_inf.
/// Throws ArgumentError when x == y (the decomposition would be empty and
/// callers are expected to branch on the distance first).
std::vector<LevelSetPair> level_set_decomposition(const LatticePoint& x,
                                                  const LatticePoint& y);

/// A multiset of nonzero {-1,0,+1} directions, kept lexicographically sorted
/// so equality is deterministic. The elements always sum to the vector they
/// decompose.
struct DirectionMultiset {
  std::vector<LatticePoint> elements;

  explicit DirectionMultiset(std::vector<LatticePoint> elems = {});
  LatticePoint sum(int n) const;
  bool operator==(const DirectionMultiset&) const = default;
};

/// The recursive midpoint decomposition D(x):
///   D(0) = {},  D(x) = {x} for ||x||_inf = 1,
///   D(x) = {mu(x,0), mu(0,x)} for ||x||_inf = 2,
///   D(x) = D(mu(x,0)) u D(mu(0,x)) for ||x||_inf >= 3.
/// The result equals the level-set direction family of (0, x).
DirectionMultiset midpoint_decompose(const LatticePoint& x);

}  // namespace ddmc
