#include "ddmc/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace ddmc {

void require_same_dim(const LatticePoint& x, const LatticePoint& y) {
  if (x.size() != y.size()) {
    throw ArgumentError("lattice points have mismatched dimensions: " +
                        std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
}

LatticePoint directed_midpoint(const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y);
  LatticePoint p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Coord s = x[i] + y[i];
    p[i] = (x[i] >= y[i]) ? ceil_half(s) : floor_half(s);
  }
  return p;
}

std::pair<LatticePoint, LatticePoint> directed_midpoint_pair(const LatticePoint& x,
                                                             const LatticePoint& y) {
  return {directed_midpoint(x, y), directed_midpoint(y, x)};
}

std::pair<LatticePoint, LatticePoint> rounded_midpoint_pair(const LatticePoint& x,
                                                            const LatticePoint& y) {
  require_same_dim(x, y);
  LatticePoint up(x.size()), down(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Coord s = x[i] + y[i];
    up[i] = ceil_half(s);
    down[i] = floor_half(s);
  }
  return {up, down};
}

Coord chebyshev_distance(const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y);
  Coord m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    m = std::max(m, std::abs(x[i] - y[i]));
  }
  return m;
}

Coord norm_inf(const LatticePoint& x) {
  Coord m = 0;
  for (Coord c : x) m = std::max(m, std::abs(c));
  return m;
}

LatticePoint add(const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y);
  LatticePoint r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

LatticePoint subtract(const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y);
  LatticePoint r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

LatticePoint negate(const LatticePoint& x) {
  LatticePoint r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

LatticePoint join(const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y);
  LatticePoint r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::max(x[i], y[i]);
  return r;
}

LatticePoint meet(const LatticePoint& x, const LatticePoint& y) {
  require_same_dim(x, y);
  LatticePoint r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::min(x[i], y[i]);
  return r;
}

LatticePoint LevelSetPair::direction(int n) const {
  LatticePoint d(static_cast<std::size_t>(n), 0);
  for (int i : up) d[static_cast<std::size_t>(i)] = 1;
  for (int i : down) d[static_cast<std::size_t>(i)] = -1;
  return d;
}

std::vector<LevelSetPair> level_set_decomposition(const LatticePoint& x,
                                                  const LatticePoint& y) {
  require_same_dim(x, y);
  const Coord m = chebyshev_distance(x, y);
  if (m == 0) {
    throw ArgumentError("level_set_decomposition: x == y gives an empty decomposition");
  }
  std::vector<LevelSetPair> levels;
  levels.reserve(static_cast<std::size_t>(m));
  for (Coord k = 1; k <= m; ++k) {
    LevelSetPair pair;
    pair.level = k;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Coord diff = y[i] - x[i];
      if (diff >= k) pair.up.push_back(static_cast<int>(i));
      if (diff <= -k) pair.down.push_back(static_cast<int>(i));
    }
    levels.push_back(std::move(pair));
  }
  return levels;
}

DirectionMultiset::DirectionMultiset(std::vector<LatticePoint> elems)
    : elements(std::move(elems)) {
  std::sort(elements.begin(), elements.end());
}

LatticePoint DirectionMultiset::sum(int n) const {
  LatticePoint total(static_cast<std::size_t>(n), 0);
  for (const auto& d : elements) total = add(total, d);
  return total;
}

namespace {

void decompose_into(const LatticePoint& x, std::vector<LatticePoint>& out) {
  const Coord m = norm_inf(x);
  if (m == 0) return;
  if (m == 1) {
    out.push_back(x);
    return;
  }
  const LatticePoint zero(x.size(), 0);
  const LatticePoint toward_x = directed_midpoint(x, zero);
  const LatticePoint toward_zero = directed_midpoint(zero, x);
  if (m == 2) {
    out.push_back(toward_x);
    out.push_back(toward_zero);
    return;
  }
  decompose_into(toward_x, out);
  decompose_into(toward_zero, out);
}

}  // namespace

DirectionMultiset midpoint_decompose(const LatticePoint& x) {
  std::vector<LatticePoint> elems;
  decompose_into(x, elems);
  return DirectionMultiset(std::move(elems));
}

}  // namespace ddmc
