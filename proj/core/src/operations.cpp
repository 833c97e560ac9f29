#include "ddmc/operations.hpp"

#include <algorithm>
#include <set>

namespace ddmc {

namespace {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

void check_permutation(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) {
    throw ArgumentError("permute: permutation has wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s : sigma) {
    if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)]) {
      throw ArgumentError("permute: not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
}

}  // namespace

LatticeFunction translate(const LatticeFunction& f, const LatticePoint& d) {
  require_same_dim(f.universe().lo(), d);
  const Box box(subtract(f.universe().lo(), d), subtract(f.universe().hi(), d));
  return LatticeFunction(
      box, [f, d](const LatticePoint& x) { return f(add(x, d)); }, f.family());
}

LatticeFunction permute(const LatticeFunction& f, const std::vector<int>& sigma) {
  const int n = f.dim();
  check_permutation(sigma, n);
  // g(x)_i reads x_{sigma[i]}, so coordinate j of g ranges over the bounds of
  // the f-coordinate it feeds: box'_j = box_{sigma^{-1}[j]} inverted below.
  LatticePoint lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    lo[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] =
        f.universe().lo()[static_cast<std::size_t>(i)];
    hi[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] =
        f.universe().hi()[static_cast<std::size_t>(i)];
  }
  return LatticeFunction(
      Box(lo, hi),
      [f, sigma](const LatticePoint& x) {
        LatticePoint permuted(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          permuted[i] = x[static_cast<std::size_t>(sigma[i])];
        }
        return f(permuted);
      },
      f.family());
}

LatticeFunction sign_flip(const LatticeFunction& f, const std::vector<int>& tau) {
  const int n = f.dim();
  if (static_cast<int>(tau.size()) != n) throw ArgumentError("sign_flip: tau has wrong length");
  for (int t : tau) {
    if (t != 1 && t != -1) throw ArgumentError("sign_flip: tau entries must be +1 or -1");
  }
  LatticePoint lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    if (tau[iu] == 1) {
      lo[iu] = f.universe().lo()[iu];
      hi[iu] = f.universe().hi()[iu];
    } else {
      lo[iu] = -f.universe().hi()[iu];
      hi[iu] = -f.universe().lo()[iu];
    }
  }
  return LatticeFunction(
      Box(lo, hi),
      [f, tau](const LatticePoint& x) {
        LatticePoint flipped(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) flipped[i] = tau[i] * x[i];
        return f(flipped);
      },
      f.family());
}

LatticeFunction scale(const LatticeFunction& f, Coord alpha) {
  if (alpha <= 0) throw ArgumentError("scale: alpha must be a positive integer");
  const int n = f.dim();
  LatticePoint lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    lo[iu] = ceil_div(f.universe().lo()[iu], alpha);
    hi[iu] = floor_div(f.universe().hi()[iu], alpha);
    if (lo[iu] > hi[iu]) {
      throw ArgumentError("scale: no multiple of alpha lies in the universe");
    }
  }
  return LatticeFunction(
      Box(lo, hi),
      [f, alpha](const LatticePoint& x) {
        LatticePoint scaled(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = alpha * x[i];
        return f(scaled);
      },
      f.family());
}

LatticeFunction nonneg_sum(const LatticeFunction& f1, const LatticeFunction& f2, double a1,
                           double a2) {
  if (f1.dim() != f2.dim()) throw ArgumentError("nonneg_sum: dimension mismatch");
  if (a1 < 0 || a2 < 0) throw ArgumentError("nonneg_sum: coefficients must be nonnegative");
  const auto box = Box::intersect(f1.universe(), f2.universe());
  if (!box) throw ArgumentError("nonneg_sum: universes are disjoint");
  return LatticeFunction(
      *box,
      [f1, f2, a1, a2](const LatticePoint& x) {
        return scale_nonneg(a1, f1(x)) + scale_nonneg(a2, f2(x));
      },
      "sum");
}

LatticeFunction direct_sum(const LatticeFunction& f1, const LatticeFunction& f2) {
  LatticePoint lo = f1.universe().lo(), hi = f1.universe().hi();
  lo.insert(lo.end(), f2.universe().lo().begin(), f2.universe().lo().end());
  hi.insert(hi.end(), f2.universe().hi().begin(), f2.universe().hi().end());
  const std::size_t n1 = f1.universe().lo().size();
  return LatticeFunction(
      Box(lo, hi),
      [f1, f2, n1](const LatticePoint& x) {
        const LatticePoint left(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n1));
        const LatticePoint right(x.begin() + static_cast<std::ptrdiff_t>(n1), x.end());
        return f1(left) + f2(right);
      },
      "direct_sum");
}

LatticeFunction restrict_fn(const LatticeFunction& f, const std::map<int, Coord>& fixed) {
  const int n = f.dim();
  if (fixed.empty()) throw ArgumentError("restrict: no coordinates fixed");
  for (const auto& [i, v] : fixed) {
    if (i < 0 || i >= n) throw ArgumentError("restrict: coordinate index out of range");
    (void)v;
  }
  if (static_cast<int>(fixed.size()) == n) {
    throw ArgumentError("restrict: at least one coordinate must survive");
  }
  std::vector<int> kept;
  for (int i = 0; i < n; ++i) {
    if (!fixed.contains(i)) kept.push_back(i);
  }
  LatticePoint lo, hi;
  for (int i : kept) {
    lo.push_back(f.universe().lo()[static_cast<std::size_t>(i)]);
    hi.push_back(f.universe().hi()[static_cast<std::size_t>(i)]);
  }
  return LatticeFunction(
      Box(lo, hi),
      [f, fixed, kept, n](const LatticePoint& x) {
        LatticePoint full(static_cast<std::size_t>(n));
        for (const auto& [i, v] : fixed) full[static_cast<std::size_t>(i)] = v;
        for (std::size_t k = 0; k < kept.size(); ++k) {
          full[static_cast<std::size_t>(kept[k])] = x[k];
        }
        return f(full);
      },
      "restriction");
}

LatticeFunction project_fn(const LatticeFunction& f, const std::vector<int>& keep_dims) {
  const int n = f.dim();
  if (keep_dims.empty()) throw ArgumentError("project: must keep at least one coordinate");
  for (std::size_t k = 0; k < keep_dims.size(); ++k) {
    if (keep_dims[k] < 0 || keep_dims[k] >= n) {
      throw ArgumentError("project: coordinate index out of range");
    }
    if (k > 0 && keep_dims[k] <= keep_dims[k - 1]) {
      throw ArgumentError("project: keep_dims must be strictly increasing");
    }
  }
  if (static_cast<int>(keep_dims.size()) == n) {
    throw ArgumentError("project: nothing to eliminate");
  }
  std::vector<int> gone;
  {
    std::set<int> keep(keep_dims.begin(), keep_dims.end());
    for (int i = 0; i < n; ++i) {
      if (!keep.contains(i)) gone.push_back(i);
    }
  }
  LatticePoint lo, hi, gone_lo, gone_hi;
  for (int i : keep_dims) {
    lo.push_back(f.universe().lo()[static_cast<std::size_t>(i)]);
    hi.push_back(f.universe().hi()[static_cast<std::size_t>(i)]);
  }
  for (int i : gone) {
    gone_lo.push_back(f.universe().lo()[static_cast<std::size_t>(i)]);
    gone_hi.push_back(f.universe().hi()[static_cast<std::size_t>(i)]);
  }
  const Box eliminated(gone_lo, gone_hi);
  return LatticeFunction(
      Box(lo, hi),
      [f, keep_dims, gone, eliminated, n](const LatticePoint& x) {
        LatticePoint full(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < keep_dims.size(); ++k) {
          full[static_cast<std::size_t>(keep_dims[k])] = x[k];
        }
        ExtendedValue best = ExtendedValue::infinity();
        LatticePoint y = eliminated.first();
        do {
          for (std::size_t k = 0; k < gone.size(); ++k) {
            full[static_cast<std::size_t>(gone[k])] = y[k];
          }
          const ExtendedValue v = f(full);
          if (v < best) best = v;
        } while (eliminated.next(y));
        return best;
      },
      "projection");
}

LatticeFunction infimal_convolution(const LatticeFunction& f1, const LatticeFunction& f2) {
  if (f1.dim() != f2.dim()) throw ArgumentError("infimal_convolution: dimension mismatch");
  const Box sum_box(add(f1.universe().lo(), f2.universe().lo()),
                    add(f1.universe().hi(), f2.universe().hi()));
  const Box inner = f1.universe();
  return LatticeFunction(
      sum_box,
      [f1, f2, inner](const LatticePoint& x) {
        ExtendedValue best = ExtendedValue::infinity();
        LatticePoint y = inner.first();
        do {
          const ExtendedValue a = f1(y);
          if (a.is_infinite()) continue;
          const ExtendedValue v = a + f2(subtract(x, y));
          if (v < best) best = v;
        } while (inner.next(y));
        return best;
      },
      "convolution");
}

LatticeFunction infconv_separable(const LatticeFunction& f,
                                  const std::vector<UnivariateConvex>& phi) {
  if (static_cast<int>(phi.size()) != f.dim()) {
    throw ArgumentError("infconv_separable: need one piece per dimension");
  }
  LatticePoint lo, hi;
  for (const auto& piece : phi) {
    const auto range = piece.finite_range();
    if (!range) {
      throw ArgumentError(
          "infconv_separable: piece has an unbounded finite part; the decomposition "
          "range must be bounded");
    }
    lo.push_back(range->first);
    hi.push_back(range->second);
  }
  return infimal_convolution(f, make_separable(phi, Box(lo, hi)));
}

LatticeFunction linear_tilt(const LatticeFunction& f, const std::vector<double>& p) {
  if (static_cast<int>(p.size()) != f.dim()) throw ArgumentError("linear_tilt: dimension mismatch");
  return LatticeFunction(
      f.universe(),
      [f, p](const LatticePoint& x) {
        const ExtendedValue v = f(x);
        if (v.is_infinite()) return v;
        double tilt = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) tilt += p[i] * static_cast<double>(x[i]);
        return ExtendedValue(v.finite() - tilt);
      },
      f.family());
}

std::vector<LatticePoint> minkowski_sum(const std::vector<LatticePoint>& a,
                                        const std::vector<LatticePoint>& b) {
  std::set<LatticePoint> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      out.insert(add(x, y));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace ddmc
