#include "ddmc/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ddmc/minimize.hpp"

namespace ddmc {

bool RealBox::contains(const std::vector<double>& x, double tol) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ContinuousUnivariate

ContinuousUnivariate ContinuousUnivariate::affine(double slope, double intercept) {
  ContinuousUnivariate g;
  g.kind_ = Kind::Affine;
  g.a_ = slope;
  g.b_ = intercept;
  return g;
}

ContinuousUnivariate ContinuousUnivariate::abs(double center, double weight) {
  if (weight < 0) throw ArgumentError("ContinuousUnivariate::abs: negative weight");
  ContinuousUnivariate g;
  g.kind_ = Kind::Abs;
  g.a_ = center;
  g.weight_ = weight;
  return g;
}

ContinuousUnivariate ContinuousUnivariate::square(double center, double weight) {
  if (weight < 0) throw ArgumentError("ContinuousUnivariate::square: negative weight");
  ContinuousUnivariate g;
  g.kind_ = Kind::Square;
  g.a_ = center;
  g.weight_ = weight;
  return g;
}

ContinuousUnivariate ContinuousUnivariate::affine_max(
    std::vector<std::pair<double, double>> pieces) {
  if (pieces.empty()) throw ArgumentError("ContinuousUnivariate::affine_max: empty list");
  ContinuousUnivariate g;
  g.kind_ = Kind::AffineMax;
  g.pieces_ = std::move(pieces);
  return g;
}

double ContinuousUnivariate::operator()(double t) const {
  switch (kind_) {
    case Kind::Affine:
      return a_ * t + b_;
    case Kind::Abs:
      return weight_ * std::abs(t - a_);
    case Kind::Square: {
      const double d = t - a_;
      return weight_ * d * d;
    }
    case Kind::AffineMax: {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& [a, b] : pieces_) best = std::max(best, a * t + b);
      return best;
    }
  }
  throw ArgumentError("ContinuousUnivariate: unknown kind");
}

bool ContinuousUnivariate::is_smooth() const {
  return kind_ == Kind::Affine || kind_ == Kind::Square;
}

// ---------------------------------------------------------------------------
// ContinuousTwoSeparable

double ContinuousTwoSeparable::evaluate(const std::vector<double>& x) const {
  double total = 0.0;
  for (const auto& [i, g] : xi) total += g(x[static_cast<std::size_t>(i)]);
  for (const auto& [ij, g] : phi) {
    total += g(x[static_cast<std::size_t>(ij.first)] - x[static_cast<std::size_t>(ij.second)]);
  }
  for (const auto& [ij, g] : psi) {
    total += g(x[static_cast<std::size_t>(ij.first)] + x[static_cast<std::size_t>(ij.second)]);
  }
  return total;
}

bool ContinuousTwoSeparable::is_smooth() const {
  for (const auto& [i, g] : xi) {
    (void)i;
    if (!g.is_smooth()) return false;
  }
  for (const auto& [ij, g] : phi) {
    (void)ij;
    if (!g.is_smooth()) return false;
  }
  for (const auto& [ij, g] : psi) {
    (void)ij;
    if (!g.is_smooth()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ContinuousFunction

ContinuousFunction ContinuousFunction::quadratic(QuadraticSpec spec, RealBox universe) {
  if (spec.dim() != universe.dim()) {
    throw ArgumentError("ContinuousFunction::quadratic: dimension mismatch");
  }
  ContinuousFunction f;
  f.kind_ = Kind::Quadratic;
  f.universe_ = std::move(universe);
  f.quad_ = std::make_shared<const QuadraticSpec>(std::move(spec));
  return f;
}

ContinuousFunction ContinuousFunction::two_separable(ContinuousTwoSeparable spec,
                                                     RealBox universe) {
  if (spec.n != universe.dim()) {
    throw ArgumentError("ContinuousFunction::two_separable: dimension mismatch");
  }
  ContinuousFunction f;
  f.kind_ = Kind::TwoSeparable;
  f.universe_ = std::move(universe);
  f.twosep_ = std::make_shared<const ContinuousTwoSeparable>(std::move(spec));
  return f;
}

ContinuousFunction ContinuousFunction::simplex_hull_indicator(int n) {
  if (n < 1) throw ArgumentError("simplex_hull_indicator: dimension must be >= 1");
  ContinuousFunction f;
  f.kind_ = Kind::SimplexHull;
  f.universe_ = RealBox{std::vector<double>(static_cast<std::size_t>(n), 0.0),
                        std::vector<double>(static_cast<std::size_t>(n), 1.0)};
  return f;
}

ExtendedValue ContinuousFunction::operator()(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw ArgumentError("ContinuousFunction: point dimension mismatch");
  }
  if (!universe_.contains(x)) return ExtendedValue::infinity();
  switch (kind_) {
    case Kind::Quadratic:
      return ExtendedValue(quad_->evaluate_real(x));
    case Kind::TwoSeparable:
      return ExtendedValue(twosep_->evaluate(x));
    case Kind::SimplexHull: {
      double total = 0.0;
      for (double xi : x) {
        if (xi < -1e-12) return ExtendedValue::infinity();
        total += xi;
      }
      return std::abs(total - 1.0) <= 1e-12 ? ExtendedValue(0.0) : ExtendedValue::infinity();
    }
  }
  throw ArgumentError("ContinuousFunction: unknown kind");
}

const QuadraticSpec* ContinuousFunction::as_quadratic() const {
  return kind_ == Kind::Quadratic ? quad_.get() : nullptr;
}

const ContinuousTwoSeparable* ContinuousFunction::as_two_separable() const {
  return kind_ == Kind::TwoSeparable ? twosep_.get() : nullptr;
}

bool ContinuousFunction::is_smooth() const {
  switch (kind_) {
    case Kind::Quadratic:
      return true;
    case Kind::TwoSeparable:
      return twosep_->is_smooth();
    case Kind::SimplexHull:
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Fractional restriction

Box scaled_lattice_box(const ContinuousFunction& F, Coord alpha) {
  if (alpha < 1) throw ArgumentError("scaled_lattice_box: alpha must be a positive integer");
  const auto& u = F.universe();
  LatticePoint lo(u.lo.size()), hi(u.lo.size());
  for (std::size_t i = 0; i < u.lo.size(); ++i) {
    lo[i] = static_cast<Coord>(std::ceil(static_cast<double>(alpha) * u.lo[i] - 1e-9));
    hi[i] = static_cast<Coord>(std::floor(static_cast<double>(alpha) * u.hi[i] + 1e-9));
    if (lo[i] > hi[i]) {
      throw ArgumentError("scaled_lattice_box: the scaled universe contains no lattice point");
    }
  }
  return Box(lo, hi);
}

LatticeFunction fractional_restriction(const ContinuousFunction& F, Coord alpha,
                                       const Box& box) {
  if (alpha < 1) {
    throw ArgumentError("fractional_restriction: alpha must be a positive integer");
  }
  if (box.dim() != F.dim()) {
    throw ArgumentError("fractional_restriction: box dimension mismatch");
  }
  if (F.is_simplex_hull()) {
    // Exact integer membership: x/alpha in the hull iff x >= 0 and sum = alpha.
    return LatticeFunction(
        box,
        [alpha](const LatticePoint& x) {
          Coord total = 0;
          for (Coord c : x) {
            if (c < 0) return ExtendedValue::infinity();
            total += c;
          }
          return total == alpha ? ExtendedValue(0.0) : ExtendedValue::infinity();
        },
        "fractional-restriction");
  }
  return LatticeFunction(
      box,
      [F, alpha](const LatticePoint& x) {
        std::vector<double> real(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          real[i] = static_cast<double>(x[i]) / static_cast<double>(alpha);
        }
        return F(real);
      },
      "fractional-restriction");
}

RDdmVerdict verify_r_ddm(const ContinuousFunction& F, int alpha_max,
                         const CheckOptions& opts) {
  if (alpha_max < 1) throw ArgumentError("verify_r_ddm: alpha_max must be >= 1");
  RDdmVerdict result;
  for (int alpha = 1; alpha <= alpha_max; ++alpha) {
    const Box box = scaled_lattice_box(F, alpha);
    const LatticeFunction f = fractional_restriction(F, alpha, box);
    Verdict v = is_ddm_convex(f, box, opts);
    result.alpha_checked = alpha;
    if (!v.holds) {
      v.detail = "f^{1/" + std::to_string(alpha) + "} is not DDM-convex: " + v.detail;
      result.verdict = std::move(v);
      result.failed_alpha = alpha;
      return result;
    }
    result.verdict.pairs_checked += v.pairs_checked;
  }
  result.verdict.holds = true;
  result.verdict.detail = "evidence up to alpha = " + std::to_string(alpha_max) +
                          "; the definition quantifies over all alpha";
  return result;
}

// ---------------------------------------------------------------------------
// Continuous minimization

namespace {

// Dense Cholesky of the symmetric matrix 2Q (the Hessian of x^T Q x + c^T x);
// returns false when a pivot drops below tolerance (singular or indefinite).
bool cholesky(const QuadraticSpec& q, std::vector<std::vector<double>>& lower) {
  const int n = q.dim();
  lower.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = 2.0 * q.q(i, j);
      for (int k = 0; k < j; ++k) {
        sum -= lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
               lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      }
      if (i == j) {
        if (sum <= 1e-12) return false;
        lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::sqrt(sum);
      } else {
        lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            sum / lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
      }
    }
  }
  return true;
}

// Solves (2Q) x = -c by forward/back substitution with the Cholesky factor.
std::vector<double> solve_stationary(const QuadraticSpec& q,
                                     const std::vector<std::vector<double>>& lower) {
  const int n = q.dim();
  std::vector<double> y(static_cast<std::size_t>(n), 0.0), x(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double sum = -q.c()[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; ++k) {
      sum -= lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
             y[static_cast<std::size_t>(k)];
    }
    y[static_cast<std::size_t>(i)] = sum / lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }
  for (int i = n - 1; i >= 0; --i) {
    double sum = y[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k) {
      sum -= lower[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
             x[static_cast<std::size_t>(k)];
    }
    x[static_cast<std::size_t>(i)] = sum / lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }
  return x;
}

// Ternary search for the minimum of a convex univariate slice on [lo, hi].
double minimize_slice(const std::function<double(double)>& g, double lo, double hi) {
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (g(m1) <= g(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> coordinate_descent(const ContinuousFunction& F, std::vector<double> x) {
  const auto& u = F.universe();
  const int n = F.dim();
  const auto objective = [&](const std::vector<double>& p) {
    const ExtendedValue v = F(p);
    return v.is_finite() ? v.finite() : std::numeric_limits<double>::infinity();
  };
  for (int sweep = 0; sweep < 100000; ++sweep) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      std::vector<double> probe = x;
      const double best = minimize_slice(
          [&](double t) {
            probe[iu] = t;
            return objective(probe);
          },
          u.lo[iu], u.hi[iu]);
      moved = std::max(moved, std::abs(best - x[iu]));
      x[iu] = best;
    }
    if (moved < 1e-8) return x;
  }
  throw DiagnosticError("continuous_argmin: coordinate descent did not converge in 1e5 sweeps");
}

}  // namespace

ContinuousArgmin continuous_argmin(const ContinuousFunction& F) {
  ContinuousArgmin result;
  if (const QuadraticSpec* q = F.as_quadratic()) {
    std::vector<std::vector<double>> lower;
    if (!cholesky(*q, lower)) {
      throw ArgumentError(
          "continuous_argmin: Q is singular or not positive definite; the quadratic has no "
          "reliable closed-form minimizer");
    }
    std::vector<double> stationary = solve_stationary(*q, lower);
    if (F.universe().contains(stationary)) {
      result.point = std::move(stationary);
      result.unique = true;
      result.value = F(result.point).finite();
      return result;
    }
    // Stationary point outside the declared universe: fall back to descent
    // over the box; the constrained minimizer is no longer certified unique.
    std::vector<double> center(F.universe().lo.size());
    for (std::size_t i = 0; i < center.size(); ++i) {
      center[i] = 0.5 * (F.universe().lo[i] + F.universe().hi[i]);
    }
    result.point = coordinate_descent(F, std::move(center));
    result.unique = false;
    result.value = F(result.point).finite();
    return result;
  }
  if (F.as_two_separable() != nullptr) {
    std::vector<double> center(F.universe().lo.size());
    for (std::size_t i = 0; i < center.size(); ++i) {
      center[i] = 0.5 * (F.universe().lo[i] + F.universe().hi[i]);
    }
    result.point = coordinate_descent(F, std::move(center));
    result.unique = false;
    result.value = F(result.point).finite();
    return result;
  }
  // Simplex hull: every hull point minimizes; report the barycenter.
  const auto n = F.universe().lo.size();
  result.point.assign(n, 1.0 / static_cast<double>(n));
  result.unique = false;
  result.value = 0.0;
  return result;
}

namespace {

double linf_distance(const LatticePoint& x, const std::vector<double>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d = std::max(d, std::abs(static_cast<double>(x[i]) - y[i]));
  }
  return d;
}

// Best value of F over the l_inf ball of the given radius around a lattice
// point, intersected with the universe: dense grid plus two refinements,
// then a coordinate-descent polish for smooth instances.
double min_over_ball(const ContinuousFunction& F, const LatticePoint& center, double radius) {
  const auto& u = F.universe();
  std::vector<double> lo(center.size()), hi(center.size());
  for (std::size_t i = 0; i < center.size(); ++i) {
    lo[i] = std::max(static_cast<double>(center[i]) - radius, u.lo[i]);
    hi[i] = std::min(static_cast<double>(center[i]) + radius, u.hi[i]);
    if (lo[i] > hi[i]) return std::numeric_limits<double>::infinity();
  }
  const int per_dim = 13;
  std::vector<double> best_point = lo;
  double best = std::numeric_limits<double>::infinity();
  for (int level = 0; level < 3; ++level) {
    std::vector<std::size_t> index(center.size(), 0);
    while (true) {
      std::vector<double> p(center.size());
      for (std::size_t i = 0; i < center.size(); ++i) {
        p[i] = lo[i] + (hi[i] - lo[i]) * static_cast<double>(index[i]) /
                           static_cast<double>(per_dim - 1);
      }
      const ExtendedValue v = F(p);
      if (v.is_finite() && v.finite() < best) {
        best = v.finite();
        best_point = p;
      }
      std::size_t i = 0;
      while (i < index.size() && ++index[i] == static_cast<std::size_t>(per_dim)) {
        index[i] = 0;
        ++i;
      }
      if (i == index.size()) break;
    }
    // Refine around the best point.
    for (std::size_t i = 0; i < center.size(); ++i) {
      const double span = (hi[i] - lo[i]) / static_cast<double>(per_dim - 1);
      lo[i] = std::max(lo[i], best_point[i] - span);
      hi[i] = std::min(hi[i], best_point[i] + span);
    }
  }
  return best;
}

}  // namespace

ContinuousProximityReport verify_continuous_proximity(const ContinuousFunction& F,
                                                      const Box& box,
                                                      const CheckOptions& opts) {
  ContinuousProximityReport report;
  const int n = F.dim();

  ContinuousArgmin cont;
  try {
    cont = continuous_argmin(F);
  } catch (const std::exception& e) {
    report.status = ProximityStatus::Inconclusive;
    report.detail = std::string("continuous minimization unavailable: ") + e.what();
    return report;
  }

  const LatticeFunction f = fractional_restriction(F, 1, box);
  const BruteForceResult discrete = brute_force_argmin(f, box, opts.max_pairs);
  if (discrete.minimizers.empty()) {
    report.status = ProximityStatus::Inconclusive;
    report.detail = "dom f is empty within the box";
    return report;
  }

  // The discrete argmin over the box only stands in for argmin over Z^n when
  // the box covers the continuous minimizer with slack n+1.
  for (std::size_t i = 0; i < cont.point.size(); ++i) {
    const double lo_needed = cont.point[i] - static_cast<double>(n + 1);
    const double hi_needed = cont.point[i] + static_cast<double>(n + 1);
    const double box_lo = static_cast<double>(box.lo()[i]);
    const double box_hi = static_cast<double>(box.hi()[i]);
    const double u_lo = F.universe().lo[i], u_hi = F.universe().hi[i];
    if (std::max(lo_needed, u_lo) < box_lo - 1e-9 ||
        std::min(hi_needed, u_hi) > box_hi + 1e-9) {
      report.status = ProximityStatus::Inconclusive;
      report.detail = "box does not cover the continuous minimizer with slack n+1";
      return report;
    }
  }

  const double tol = 1e-6;

  // (ii)/(iii): some discrete minimizer within n of the continuous minimizer.
  double nearest_discrete = std::numeric_limits<double>::infinity();
  for (const auto& x : discrete.minimizers) {
    nearest_discrete = std::min(nearest_discrete, linf_distance(x, cont.point));
  }
  report.continuous_to_discrete = nearest_discrete;
  if (nearest_discrete > static_cast<double>(n) + tol) {
    report.status = ProximityStatus::Violated;
    report.detail = "no discrete minimizer within n of the continuous minimizer (distance " +
                    std::to_string(nearest_discrete) + ")";
    return report;
  }

  // (i): each discrete minimizer has a continuous minimizer within n.
  double worst = 0.0;
  for (const auto& x : discrete.minimizers) {
    if (cont.unique) {
      worst = std::max(worst, linf_distance(x, cont.point));
      if (linf_distance(x, cont.point) > static_cast<double>(n) + tol) {
        report.status = ProximityStatus::Violated;
        report.detail = "discrete minimizer beyond n of the unique continuous minimizer";
        report.discrete_to_continuous = worst;
        return report;
      }
      continue;
    }
    // Non-unique case: dense-grid refinement inside the ball of radius n.
    const double ball_min = min_over_ball(F, x, static_cast<double>(n));
    if (ball_min > cont.value + tol) {
      report.status = F.is_smooth() ? ProximityStatus::Violated : ProximityStatus::Inconclusive;
      report.detail = "no near-minimal continuous point within n of a discrete minimizer "
                      "(ball minimum exceeds the global minimum by " +
                      std::to_string(ball_min - cont.value) + ")";
      return report;
    }
  }
  report.discrete_to_continuous = worst;
  report.detail = "distances observed: discrete-to-continuous " + std::to_string(worst) +
                  ", continuous-to-discrete " + std::to_string(nearest_discrete) +
                  " (bound n = " + std::to_string(n) + ")";
  return report;
}

}  // namespace ddmc
