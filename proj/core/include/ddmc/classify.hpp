#pragma once

#include <set>

#include "ddmc/envelope.hpp"
#include "ddmc/function.hpp"
#include "ddmc/verdict.hpp"

namespace ddmc {

/// Tolerances shared by every brute-force verifier. A violation of
/// f(x) + f(y) >= rhs is reported only when lhs < rhs - eps; inequalities
/// with +inf on the left are vacuously satisfied. max_pairs caps the number
/// of unordered pairs a single check may enumerate (ResourceError beyond).
struct CheckOptions {
  double eps = 1e-9;
  std::uint64_t max_pairs = 200'000'000;
};

/// Directed discrete midpoint convexity over the box:
/// f(x) + f(y) >= f(mu(x,y)) + f(mu(y,x)) for every unordered pair.
Verdict is_ddm_convex(const LatticeFunction& f, const Box& box, const CheckOptions& opts = {});

/// L-natural convexity via discrete midpoint convexity with plain rounding
/// for every pair.
Verdict is_lnat_convex(const LatticeFunction& f, const Box& box, const CheckOptions& opts = {});

struct DmcVerdicts {
  Verdict global;  // plain-rounding midpoint convexity at distance >= 2
  Verdict local;   // dom f a discrete midpoint convex set + inequality at distance == 2
};
DmcVerdicts classify_dmc(const LatticeFunction& f, const Box& box, const CheckOptions& opts = {});

/// Integral convexity via weak discrete midpoint convexity at distance >= 2:
/// f(x) + f(y) >= 2 f~((x+y)/2) with f~ the local convex envelope.
Verdict is_integrally_convex(const LatticeFunction& f, const Box& box,
                             const CheckOptions& opts = {});

/// f(x) + f(y) >= f(x v y) + f(x ^ y) for every pair.
Verdict is_submodular(const LatticeFunction& f, const Box& box, const CheckOptions& opts = {});

/// Whether dom f (within the box) is exactly an integral box: the only
/// separable-convexity aspect that is checkable at the domain level.
Verdict has_box_domain(const LatticeFunction& f, const Box& box, const CheckOptions& opts = {});

/// The five equivalent characterizations of DDM-convexity:
///   1 full directed midpoint inequality,
///   2 dom f a DDM-convex set + the inequality at distance exactly 2,
///   3 parallelogram inequality for every pair and every level subset J,
///   4 the outermost-level inequality for every pair,
///   5 the prefix inequality for every pair and every alpha in 1..m.
/// Variant 3 is exponential in m = ||x-y||_inf and refuses m > 8.
Verdict check_ddm_characterization(const LatticeFunction& f, const Box& box, int variant,
                                   const CheckOptions& opts = {});

/// Closure of a finite point set under the directed midpoint pair (all
/// pairs) and under plain rounding (pairs at distance >= 2), respectively.
Verdict is_ddm_set(const std::vector<LatticePoint>& points);
Verdict is_dmc_set(const std::vector<LatticePoint>& points);

/// Translation-submodularity f(x)+f(y) >= f((x-a1) v y) + f(x ^ (y+a1))
/// for every ordered pair and every a in 0..diameter; the original
/// L-natural definition, available as a cross-check of is_lnat_convex.
Verdict lnat_translation_submodular(const LatticeFunction& f, const Box& box,
                                    const CheckOptions& opts = {});

/// The steepest-pair characterization of L-natural convexity: for x not >= y
/// and A = argmax_i (y_i - x_i), f(x)+f(y) >= f(x + 1_A) + f(y - 1_A).
Verdict lnat_ascending_pair(const LatticeFunction& f, const Box& box,
                            const CheckOptions& opts = {});

ClassificationReport classify_all(const LatticeFunction& f, const Box& box,
                                  const std::set<ConvexityClass>& classes,
                                  const CheckOptions& opts = {});

/// All seven classes.
std::set<ConvexityClass> all_classes();
/// The default CLI set: ddm, lnat, gdmc, ldmc, ic, submodular.
std::set<ConvexityClass> default_classes();

}  // namespace ddmc
