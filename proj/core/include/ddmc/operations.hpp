#pragma once

#include <map>

#include "ddmc/function.hpp"

namespace ddmc {

/// g(x) = f(x + d). The universe box shifts by -d.
LatticeFunction translate(const LatticeFunction& f, const LatticePoint& d);

/// g(x) = f(x_{sigma[0]}, ..., x_{sigma[n-1]}) for a permutation sigma of 0..n-1.
LatticeFunction permute(const LatticeFunction& f, const std::vector<int>& sigma);

/// g(x) = f(tau . x) for tau in {+1,-1}^n (componentwise sign flip).
LatticeFunction sign_flip(const LatticeFunction& f, const std::vector<int>& tau);

/// The alpha-scaling g(x) = f(alpha x), alpha >= 1. Throws ArgumentError for
/// alpha <= 0 or when no multiple of alpha lies in the universe.
LatticeFunction scale(const LatticeFunction& f, Coord alpha);

/// a1 f1 + a2 f2 with a1, a2 >= 0 and equal dimensions (0 * inf = 0, so a
/// zero coefficient drops its term). The universe is the box intersection.
LatticeFunction nonneg_sum(const LatticeFunction& f1, const LatticeFunction& f2, double a1,
                           double a2);

/// (f1 (+) f2)(x, y) = f1(x) + f2(y) on the concatenated coordinates.
LatticeFunction direct_sum(const LatticeFunction& f1, const LatticeFunction& f2);

/// Fixes the given coordinates to constants and keeps the rest, in order.
/// The paper's restriction is the all-zeros assignment; translation reduces
/// any other fixed value to that case.
LatticeFunction restrict_fn(const LatticeFunction& f, const std::map<int, Coord>& fixed);

/// g(x) = min over the eliminated coordinates (within the universe box) of f.
/// keep_dims lists the surviving coordinates in strictly increasing order.
LatticeFunction project_fn(const LatticeFunction& f, const std::vector<int>& keep_dims);

/// (f1 [] f2)(x) = min { f1(y) + f2(z) | y + z = x } over the bounded
/// universes; the result lives on the Minkowski sum of the two boxes.
LatticeFunction infimal_convolution(const LatticeFunction& f1, const LatticeFunction& f2);

/// Convolution with the separable convex function sum_i phi_i(z_i). Every
/// piece must have a bounded finite part (a table piece); closed forms are
/// rejected since the decomposition range would be unbounded.
LatticeFunction infconv_separable(const LatticeFunction& f,
                                  const std::vector<UnivariateConvex>& phi);

/// Minkowski sum of two point sets, deduplicated and sorted.
std::vector<LatticePoint> minkowski_sum(const std::vector<LatticePoint>& a,
                                        const std::vector<LatticePoint>& b);

/// The tilted function (f - p)(x) = f(x) - p . x on the same universe.
LatticeFunction linear_tilt(const LatticeFunction& f, const std::vector<double>& p);

}  // namespace ddmc
