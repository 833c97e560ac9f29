#pragma once

#include <cstdint>
#include <optional>

#include "ddmc/lattice.hpp"

namespace ddmc {

/// An axis-aligned integer box [lo, hi], the enumeration universe for all
/// brute-force checks. lo <= hi componentwise, coordinates within
/// kCoordLimit, and the cardinality fits a 64-bit count.
class Box {
public:
  Box(LatticePoint lo, LatticePoint hi);

  int dim() const { return static_cast<int>(lo_.size()); }
  const LatticePoint& lo() const { return lo_; }
  const LatticePoint& hi() const { return hi_; }

  std::uint64_t size() const;
  bool contains(const LatticePoint& x) const;

  /// Max side length hi_i - lo_i: the l_inf diameter of the box.
  Coord diameter() const;

  /// Lexicographic iteration: first point, then in-place successor.
  LatticePoint first() const { return lo_; }
  bool next(LatticePoint& x) const;

  /// The box shrunk by `margin` on every side; nullopt when that is empty.
  std::optional<Box> shrunk(Coord margin) const;

  /// Intersection; nullopt when disjoint.
  static std::optional<Box> intersect(const Box& a, const Box& b);

  bool operator==(const Box&) const = default;

private:
  LatticePoint lo_, hi_;
};

/// The smallest box containing all the points (which must be nonempty and
/// of equal dimension).
Box bounding_box(const std::vector<LatticePoint>& points);

}  // namespace ddmc
