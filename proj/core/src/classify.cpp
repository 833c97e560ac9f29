#include "ddmc/classify.hpp"

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

std::string value_str(ExtendedValue v) {
  if (v.is_infinite()) return "+inf";
  std::ostringstream out;
  out << v.finite();
  return out.str();
}

void check_pair_budget(const Box& box, const CheckOptions& opts) {
  const std::uint64_t points = box.size();
  if (points > 3'000'000'000ULL || points * (points - 1) / 2 > opts.max_pairs) {
    throw ResourceError("pair enumeration over " + std::to_string(points) +
                        " box points exceeds the cap of " + std::to_string(opts.max_pairs) +
                        " pairs");
  }
}

// Lexicographic scan over unordered pairs {x, y} with both values finite
// (pairs with an infinite side satisfy every inequality vacuously). The
// callback returns false to stop at the first violation, which makes the
// reported witness the lexicographically first one.
template <class OnPair>
Verdict scan_finite_pairs(const LatticeFunction& f, const Box& box, const CheckOptions& opts,
                          OnPair&& on_pair) {
  check_pair_budget(box, opts);
  Verdict verdict;
  LatticePoint x = box.first();
  do {
    const ExtendedValue fx = f(x);
    if (fx.is_infinite()) continue;
    LatticePoint y = x;
    while (box.next(y)) {
      const ExtendedValue fy = f(y);
      if (fy.is_infinite()) continue;
      if (!on_pair(x, fx, y, fy, verdict)) return verdict;
    }
  } while (box.next(x));
  return verdict;
}

// The shared inequality step: lhs >= rhs - eps, where rhs may be +inf.
// Fills the verdict on violation and renders the re-derivation.
bool require_ge(Verdict& verdict, const CheckOptions& opts, const LatticePoint& x,
                const LatticePoint& y, double lhs, ExtendedValue rhs,
                const std::string& rhs_desc) {
  if (lhs < rhs.raw() - opts.eps) {
    verdict.holds = false;
    verdict.witness = Witness{x, y};
    verdict.detail = "f" + point_str(x) + " + f" + point_str(y) + " = " + value_str(lhs) +
                     " < " + value_str(rhs) + " = " + rhs_desc;
    return false;
  }
  return true;
}

}  // namespace

Verdict is_ddm_convex(const LatticeFunction& f, const Box& box, const CheckOptions& opts) {
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        ++verdict.pairs_checked;
        const auto [p, q] = directed_midpoint_pair(x, y);
        const ExtendedValue rhs = f(p) + f(q);
        return require_ge(verdict, opts, x, y, fx.finite() + fy.finite(), rhs,
                          "f(mu(x,y)) + f(mu(y,x)) with mu(x,y) = " + point_str(p) +
                              ", mu(y,x) = " + point_str(q));
      });
}

Verdict is_lnat_convex(const LatticeFunction& f, const Box& box, const CheckOptions& opts) {
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        ++verdict.pairs_checked;
        const auto [up, down] = rounded_midpoint_pair(x, y);
        const ExtendedValue rhs = f(up) + f(down);
        return require_ge(verdict, opts, x, y, fx.finite() + fy.finite(), rhs,
                          "f(ceil) + f(floor) with ceil = " + point_str(up) +
                              ", floor = " + point_str(down));
      });
}

DmcVerdicts classify_dmc(const LatticeFunction& f, const Box& box, const CheckOptions& opts) {
  DmcVerdicts result;
  result.global = scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        if (chebyshev_distance(x, y) < 2) return true;
        ++verdict.pairs_checked;
        const auto [up, down] = rounded_midpoint_pair(x, y);
        const ExtendedValue rhs = f(up) + f(down);
        return require_ge(verdict, opts, x, y, fx.finite() + fy.finite(), rhs,
                          "f(ceil) + f(floor) with ceil = " + point_str(up) +
                              ", floor = " + point_str(down));
      });
  result.local = scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        const Coord dist = chebyshev_distance(x, y);
        if (dist < 2) return true;
        ++verdict.pairs_checked;
        const auto [up, down] = rounded_midpoint_pair(x, y);
        // dom f must be a discrete midpoint convex set.
        if (f(up).is_infinite() || f(down).is_infinite()) {
          verdict.holds = false;
          verdict.witness = Witness{x, y};
          verdict.detail = "dom f is not a discrete midpoint convex set: midpoints " +
                           point_str(up) + ", " + point_str(down) + " of " + point_str(x) +
                           ", " + point_str(y) + " leave the domain";
          return false;
        }
        if (dist != 2) return true;
        const ExtendedValue rhs = f(up) + f(down);
        return require_ge(verdict, opts, x, y, fx.finite() + fy.finite(), rhs,
                          "f(ceil) + f(floor) at distance 2 with ceil = " + point_str(up) +
                              ", floor = " + point_str(down));
      });
  return result;
}

Verdict is_integrally_convex(const LatticeFunction& f, const Box& box,
                             const CheckOptions& opts) {
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        if (chebyshev_distance(x, y) < 2) return true;
        ++verdict.pairs_checked;
        const ExtendedValue envelope = envelope_at_midpoint(f, x, y);
        const ExtendedValue rhs = envelope + envelope;
        return require_ge(verdict, opts, x, y, fx.finite() + fy.finite(), rhs,
                          "2 f~((x+y)/2), envelope value " + value_str(envelope));
      });
}

Verdict is_submodular(const LatticeFunction& f, const Box& box, const CheckOptions& opts) {
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        ++verdict.pairs_checked;
        const LatticePoint top = join(x, y);
        const LatticePoint bottom = meet(x, y);
        const ExtendedValue rhs = f(top) + f(bottom);
        return require_ge(verdict, opts, x, y, fx.finite() + fy.finite(), rhs,
                          "f(x v y) + f(x ^ y) with join = " + point_str(top) +
                              ", meet = " + point_str(bottom));
      });
}

Verdict has_box_domain(const LatticeFunction& f, const Box& box, const CheckOptions& opts) {
  check_pair_budget(box, opts);
  Verdict verdict;
  const auto dom = effective_domain(f, box);
  verdict.pairs_checked = box.size();
  if (dom.empty()) {
    verdict.detail = "dom f is empty within the box (vacuously an integral box)";
    return verdict;
  }
  const Box hull = bounding_box(dom);
  LatticePoint x = hull.first();
  do {
    if (f(x).is_infinite()) {
      verdict.holds = false;
      verdict.witness = Witness{x, x};
      verdict.detail = "dom f is not an integral box: " + point_str(x) +
                       " lies in the bounding box of dom f but f there is +inf";
      return verdict;
    }
  } while (hull.next(x));
  return verdict;
}

namespace {

Verdict check_variant_two(const LatticeFunction& f, const Box& box, const CheckOptions& opts) {
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        const Coord dist = chebyshev_distance(x, y);
        if (dist < 2) return true;
        ++verdict.pairs_checked;
        const auto [p, q] = directed_midpoint_pair(x, y);
        // dom f must be a DDM-convex set.
        if (f(p).is_infinite() || f(q).is_infinite()) {
          verdict.holds = false;
          verdict.witness = Witness{x, y};
          verdict.detail = "dom f is not a DDM-convex set: mu(x,y) = " + point_str(p) +
                           " or mu(y,x) = " + point_str(q) + " leaves the domain";
          return false;
        }
        if (dist != 2) return true;
        const ExtendedValue rhs = f(p) + f(q);
        return require_ge(verdict, opts, x, y, fx.finite() + fy.finite(), rhs,
                          "f(mu(x,y)) + f(mu(y,x)) at distance 2");
      });
}

Verdict check_variant_parallelogram(const LatticeFunction& f, const Box& box,
                                    const CheckOptions& opts, bool all_subsets) {
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        const auto levels = level_set_decomposition(x, y);
        const int m = static_cast<int>(levels.size());
        if (all_subsets && m > 8) {
          throw ResourceError("parallelogram variant: ||x-y||_inf = " + std::to_string(m) +
                              " > 8 makes the 2^m subset scan infeasible");
        }
        ++verdict.pairs_checked;
        const int n = static_cast<int>(x.size());
        std::vector<LatticePoint> dirs;
        dirs.reserve(levels.size());
        for (const auto& level : levels) dirs.push_back(level.direction(n));
        const double lhs = fx.finite() + fy.finite();

        const auto check_direction = [&](const LatticePoint& d, const std::string& label) {
          const LatticePoint xd = add(x, d);
          const LatticePoint yd = subtract(y, d);
          const ExtendedValue rhs = f(xd) + f(yd);
          return require_ge(verdict, opts, x, y, lhs, rhs,
                            "f(x+d) + f(y-d) for " + label + ", d = " + point_str(d));
        };

        if (all_subsets) {
          for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            LatticePoint d(x.size(), 0);
            for (int k = 0; k < m; ++k) {
              if (mask & (1u << k)) d = add(d, dirs[static_cast<std::size_t>(k)]);
            }
            if (!check_direction(d, "J = mask " + std::to_string(mask))) return false;
          }
          return true;
        }
        // Prefix sums: alpha = 1..m.
        LatticePoint d(x.size(), 0);
        for (int alpha = 1; alpha <= m; ++alpha) {
          d = add(d, dirs[static_cast<std::size_t>(alpha - 1)]);
          if (!check_direction(d, "alpha = " + std::to_string(alpha))) return false;
        }
        return true;
      });
}

Verdict check_variant_outermost(const LatticeFunction& f, const Box& box,
                                const CheckOptions& opts) {
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        const auto levels = level_set_decomposition(x, y);
        ++verdict.pairs_checked;
        const LatticePoint d = levels.back().direction(static_cast<int>(x.size()));
        const ExtendedValue rhs = f(add(x, d)) + f(subtract(y, d));
        return require_ge(verdict, opts, x, y, fx.finite() + fy.finite(), rhs,
                          "f(x + 1_Am - 1_Bm) + f(y - 1_Am + 1_Bm), d = " + point_str(d));
      });
}

}  // namespace

Verdict check_ddm_characterization(const LatticeFunction& f, const Box& box, int variant,
                                   const CheckOptions& opts) {
  switch (variant) {
    case 1:
      return is_ddm_convex(f, box, opts);
    case 2:
      return check_variant_two(f, box, opts);
    case 3:
      return check_variant_parallelogram(f, box, opts, /*all_subsets=*/true);
    case 4:
      return check_variant_outermost(f, box, opts);
    case 5:
      return check_variant_parallelogram(f, box, opts, /*all_subsets=*/false);
    default:
      throw ArgumentError("check_ddm_characterization: variant must be 1..5");
  }
}

namespace {

template <class MidpointRule>
Verdict set_closure_verdict(const std::vector<LatticePoint>& points, Coord min_distance,
                            MidpointRule&& midpoints, const std::string& rule_name) {
  Verdict verdict;
  if (points.empty()) return verdict;
  std::vector<LatticePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& p : sorted) require_same_dim(p, sorted.front());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto& x = sorted[i];
      const auto& y = sorted[j];
      if (chebyshev_distance(x, y) < min_distance) continue;
      ++verdict.pairs_checked;
      const auto [p, q] = midpoints(x, y);
      const bool p_in = std::binary_search(sorted.begin(), sorted.end(), p);
      const bool q_in = std::binary_search(sorted.begin(), sorted.end(), q);
      if (!p_in || !q_in) {
        verdict.holds = false;
        verdict.witness = Witness{x, y};
        verdict.detail = rule_name + " closure fails: midpoint " +
                         point_str(p_in ? q : p) + " of " + point_str(x) + ", " +
                         point_str(y) + " is not in the set";
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace

Verdict is_ddm_set(const std::vector<LatticePoint>& points) {
  // Distance <= 1 pairs are trivially closed (mu(x,y) = x, mu(y,x) = y).
  return set_closure_verdict(
      points, 2, [](const LatticePoint& x, const LatticePoint& y) {
        return directed_midpoint_pair(x, y);
      },
      "directed midpoint");
}

Verdict is_dmc_set(const std::vector<LatticePoint>& points) {
  return set_closure_verdict(
      points, 2, [](const LatticePoint& x, const LatticePoint& y) {
        return rounded_midpoint_pair(x, y);
      },
      "rounded midpoint");
}

Verdict lnat_translation_submodular(const LatticeFunction& f, const Box& box,
                                    const CheckOptions& opts) {
  const Coord diameter = box.diameter();
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        ++verdict.pairs_checked;
        const double lhs = fx.finite() + fy.finite();
        // The inequality is not symmetric in (x, y): test both orders.
        for (int order = 0; order < 2; ++order) {
          const LatticePoint& a = order == 0 ? x : y;
          const LatticePoint& b = order == 0 ? y : x;
          for (Coord alpha = 0; alpha <= diameter; ++alpha) {
            LatticePoint shifted_down(a.size()), shifted_up(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
              shifted_down[i] = a[i] - alpha;
              shifted_up[i] = b[i] + alpha;
            }
            const ExtendedValue rhs = f(join(shifted_down, b)) + f(meet(a, shifted_up));
            if (!require_ge(verdict, opts, a, b, lhs, rhs,
                            "f((x - a1) v y) + f(x ^ (y + a1)) at alpha = " +
                                std::to_string(alpha))) {
              return false;
            }
          }
        }
        return true;
      });
}

Verdict lnat_ascending_pair(const LatticeFunction& f, const Box& box,
                            const CheckOptions& opts) {
  return scan_finite_pairs(
      f, box, opts,
      [&](const LatticePoint& x, ExtendedValue fx, const LatticePoint& y, ExtendedValue fy,
          Verdict& verdict) {
        ++verdict.pairs_checked;
        const double lhs = fx.finite() + fy.finite();
        for (int order = 0; order < 2; ++order) {
          const LatticePoint& a = order == 0 ? x : y;
          const LatticePoint& b = order == 0 ? y : x;
          // Applies only when a is not componentwise >= b.
          Coord best = 0;
          for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, b[i] - a[i]);
          if (best <= 0) continue;
          LatticePoint up = a, down = b;
          for (std::size_t i = 0; i < a.size(); ++i) {
            if (b[i] - a[i] == best) {
              ++up[i];
              --down[i];
            }
          }
          const ExtendedValue rhs = f(up) + f(down);
          if (!require_ge(verdict, opts, a, b, lhs, rhs,
                          "f(x + 1_A) + f(y - 1_A) for A = argmax(y_i - x_i)")) {
            return false;
          }
        }
        return true;
      });
}

ClassificationReport classify_all(const LatticeFunction& f, const Box& box,
                                  const std::set<ConvexityClass>& classes,
                                  const CheckOptions& opts) {
  ClassificationReport report{box, {}};
  const bool want_global = classes.contains(ConvexityClass::GlobalDmc);
  const bool want_local = classes.contains(ConvexityClass::LocalDmc);
  if (want_global || want_local) {
    const DmcVerdicts dmc = classify_dmc(f, box, opts);
    if (want_global) report.verdicts.emplace(ConvexityClass::GlobalDmc, dmc.global);
    if (want_local) report.verdicts.emplace(ConvexityClass::LocalDmc, dmc.local);
  }
  for (ConvexityClass c : classes) {
    switch (c) {
      case ConvexityClass::Ddm:
        report.verdicts.emplace(c, is_ddm_convex(f, box, opts));
        break;
      case ConvexityClass::LNat:
        report.verdicts.emplace(c, is_lnat_convex(f, box, opts));
        break;
      case ConvexityClass::IntegrallyConvex:
        report.verdicts.emplace(c, is_integrally_convex(f, box, opts));
        break;
      case ConvexityClass::Submodular:
        report.verdicts.emplace(c, is_submodular(f, box, opts));
        break;
      case ConvexityClass::SeparableConvexDomainOnly:
        report.verdicts.emplace(c, has_box_domain(f, box, opts));
        break;
      case ConvexityClass::GlobalDmc:
      case ConvexityClass::LocalDmc:
        break;  // handled above in one pass
    }
  }
  return report;
}

std::string class_token(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::Ddm:
      return "ddm";
    case ConvexityClass::LNat:
      return "lnat";
    case ConvexityClass::GlobalDmc:
      return "gdmc";
    case ConvexityClass::LocalDmc:
      return "ldmc";
    case ConvexityClass::IntegrallyConvex:
      return "ic";
    case ConvexityClass::Submodular:
      return "submodular";
    case ConvexityClass::SeparableConvexDomainOnly:
      return "sepdom";
  }
  throw ArgumentError("class_token: unknown class");
}

std::optional<ConvexityClass> class_from_token(const std::string& token) {
  for (ConvexityClass c : all_classes()) {
    if (class_token(c) == token) return c;
  }
  return std::nullopt;
}

std::set<ConvexityClass> all_classes() {
  return {ConvexityClass::Ddm,
          ConvexityClass::LNat,
          ConvexityClass::GlobalDmc,
          ConvexityClass::LocalDmc,
          ConvexityClass::IntegrallyConvex,
          ConvexityClass::Submodular,
          ConvexityClass::SeparableConvexDomainOnly};
}

std::set<ConvexityClass> default_classes() {
  return {ConvexityClass::Ddm,        ConvexityClass::LNat,
          ConvexityClass::GlobalDmc,  ConvexityClass::LocalDmc,
          ConvexityClass::IntegrallyConvex, ConvexityClass::Submodular};
}

}  // namespace ddmc
