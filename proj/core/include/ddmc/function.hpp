#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddmc/box.hpp"
#include "ddmc/extended_value.hpp"

namespace ddmc {

/// A univariate discrete convex function Z -> R u {+inf}, either in closed
/// form (affine, w|t-a|, w(t-a)^2, max of affines) or as an explicit value
/// table over an integer interval with +inf outside. Closed forms with
/// integer parameters evaluate through integer arithmetic so table-vs-form
/// cross-checks stay bit-exact. Table form is validated on construction:
/// g(t-1) + g(t+1) >= 2 g(t) at every interior point.
class UnivariateConvex {
public:
  static UnivariateConvex affine(double slope, double intercept = 0.0);
  static UnivariateConvex abs(Coord center, double weight = 1.0);
  static UnivariateConvex square(Coord center, double weight = 1.0);
  /// a t^2 + b t + c with a >= 0 (the general convex quadratic form the
  /// diagonal-dominance rewrite produces for its xi pieces).
  static UnivariateConvex quadratic(double quad, double lin = 0.0, double constant = 0.0);
  /// max over (slope, intercept) pairs; the list must be nonempty.
  static UnivariateConvex affine_max(std::vector<std::pair<double, double>> pieces);
  /// Values over [lo, lo + values.size() - 1]; +inf entries are allowed.
  static UnivariateConvex table(Coord lo, std::vector<double> values);
  /// The zero function (absent xi/phi/psi entries of a 2-separable spec).
  static UnivariateConvex zero();

  ExtendedValue operator()(Coord t) const;

  /// The interval carrying finite values, when it is bounded: table form
  /// reports its interval; closed forms have unbounded support.
  std::optional<std::pair<Coord, Coord>> finite_range() const;

  bool is_zero() const;

private:
  UnivariateConvex() = default;

  enum class Kind { Affine, Abs, Square, Quadratic, AffineMax, Table, Zero };
  Kind kind_ = Kind::Zero;
  double slope_ = 0.0, intercept_ = 0.0;
  Coord center_ = 0;
  double weight_ = 0.0;
  double quad_ = 0.0, lin_ = 0.0, const_ = 0.0;
  std::vector<std::pair<double, double>> affine_pieces_;
  Coord table_lo_ = 0;
  std::vector<double> table_values_;
};

/// A quadratic x^T Q x + c^T x with exactly symmetric Q (stored as the
/// upper triangle, so symmetry is structural). Construction from a full
/// matrix rejects any asymmetry.
class QuadraticSpec {
public:
  QuadraticSpec(const std::vector<std::vector<double>>& q_full, std::vector<double> c);

  int dim() const { return n_; }
  double q(int i, int j) const;
  const std::vector<double>& c() const { return c_; }

  double evaluate(const LatticePoint& x) const;
  double evaluate_real(const std::vector<double>& x) const;

private:
  int n_ = 0;
  std::vector<double> upper_;  // row-major upper triangle, i <= j
  std::vector<double> c_;
};

struct RowSlack {
  int row = 0;
  double slack = 0.0;  // q_ii - sum_{j != i} |q_ij|
};

struct DiagDominanceReport {
  bool dominant = true;
  std::vector<RowSlack> rows;
};

/// Diagonal dominance with nonnegative diagonals:
/// q_ii >= sum_{j != i} |q_ij| for every row, with per-row slack.
DiagDominanceReport quadratic_is_diag_dominant(const QuadraticSpec& q);

/// A 2-separable convex function
///   f(x) = sum_i xi_i(x_i) + sum_{i != j} phi_ij(x_i - x_j)
///        + sum_{i != j} psi_ij(x_i + x_j),
/// every piece univariate discrete convex, absent pieces identically zero.
class TwoSeparableSpec {
public:
  explicit TwoSeparableSpec(int n);

  int dim() const { return n_; }
  void set_xi(int i, UnivariateConvex piece);
  void set_phi(int i, int j, UnivariateConvex piece);  // applied to x_i - x_j
  void set_psi(int i, int j, UnivariateConvex piece);  // applied to x_i + x_j

  const std::map<int, UnivariateConvex>& xi() const { return xi_; }
  const std::map<std::pair<int, int>, UnivariateConvex>& phi() const { return phi_; }
  const std::map<std::pair<int, int>, UnivariateConvex>& psi() const { return psi_; }

  ExtendedValue evaluate(const LatticePoint& x) const;

private:
  void check_pair(int i, int j) const;
  int n_;
  std::map<int, UnivariateConvex> xi_;
  std::map<std::pair<int, int>, UnivariateConvex> phi_, psi_;
};

/// Rewrites x^T Q x + c^T x per the algebraic identity
///   sum_i (q_ii - sum_{j!=i} |q_ij|) x_i^2 + c_i x_i
///   + 1/2 sum_{i!=j} (q_ij^+ (x_i+x_j)^2 + q_ij^- (x_i-x_j)^2),
/// valid as a 2-separable convex representation exactly when Q is diagonally
/// dominant with nonnegative diagonals. Throws ArgumentError naming the
/// violating row otherwise.
TwoSeparableSpec quadratic_to_two_separable(const QuadraticSpec& q);

/// An evaluation oracle Z^n -> R u {+inf} with a declared bounding box.
/// Every point outside the universe evaluates to +inf; evaluation is pure
/// and deterministic, so instances are freely shareable between threads.
class LatticeFunction {
public:
  using Evaluator = std::function<ExtendedValue(const LatticePoint&)>;

  LatticeFunction(Box universe, Evaluator evaluator, std::string family = "");

  ExtendedValue operator()(const LatticePoint& x) const {
    if (static_cast<int>(x.size()) != universe_.dim()) {
      throw ArgumentError("evaluate: point dimension " + std::to_string(x.size()) +
                          " does not match universe dimension " +
                          std::to_string(universe_.dim()));
    }
    if (!universe_.contains(x)) return ExtendedValue::infinity();
    return eval_(x);
  }

  int dim() const { return universe_.dim(); }
  const Box& universe() const { return universe_; }
  const std::string& family() const { return family_; }

private:
  Box universe_;
  Evaluator eval_;
  std::string family_;
};

/// Dense table over a box; values may be +inf.
LatticeFunction make_table(const Box& box, std::vector<double> values,
                           std::string family = "table");

/// Indicator delta_S: 0 on the points, +inf elsewhere. The universe defaults
/// to the bounding box of the points.
LatticeFunction make_indicator(const std::vector<LatticePoint>& points,
                               std::optional<Box> universe = std::nullopt);

LatticeFunction make_quadratic(QuadraticSpec q, const Box& box);

LatticeFunction make_two_separable(TwoSeparableSpec spec, const Box& box);

/// Separable convex sum_i pieces[i](x_i).
LatticeFunction make_separable(std::vector<UnivariateConvex> pieces, const Box& box);

/// The distinct finite values of f on the box, as (point, value) pairs in
/// lexicographic point order.
std::vector<std::pair<LatticePoint, double>> enumerate_finite(const LatticeFunction& f,
                                                              const Box& box);

/// The effective domain dom f within the box, in lexicographic order.
std::vector<LatticePoint> effective_domain(const LatticeFunction& f, const Box& box);

}  // namespace ddmc
