#include "ddmc/function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ddmc {

// ---------------------------------------------------------------------------
// Box

Box::Box(LatticePoint lo, LatticePoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_same_dim(lo_, hi_);
  if (lo_.empty()) throw ArgumentError("Box: dimension must be >= 1");
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (lo_[i] > hi_[i]) {
      throw ArgumentError("Box: lo > hi in coordinate " + std::to_string(i));
    }
    if (std::abs(lo_[i]) > kCoordLimit || std::abs(hi_[i]) > kCoordLimit) {
      throw ArgumentError("Box: coordinate bound exceeds " + std::to_string(kCoordLimit));
    }
    const std::uint64_t side = static_cast<std::uint64_t>(hi_[i] - lo_[i]) + 1;
    if (cells > std::numeric_limits<std::uint64_t>::max() / side) {
      throw ArgumentError("Box: cardinality overflows a 64-bit count");
    }
    cells *= side;
  }
}

std::uint64_t Box::size() const {
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    cells *= static_cast<std::uint64_t>(hi_[i] - lo_[i]) + 1;
  }
  return cells;
}

bool Box::contains(const LatticePoint& x) const {
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (x[i] < lo_[i] || x[i] > hi_[i]) return false;
  }
  return true;
}

Coord Box::diameter() const {
  Coord d = 0;
  for (std::size_t i = 0; i < lo_.size(); ++i) d = std::max(d, hi_[i] - lo_[i]);
  return d;
}

bool Box::next(LatticePoint& x) const {
  for (std::size_t i = lo_.size(); i-- > 0;) {
    if (x[i] < hi_[i]) {
      ++x[i];
      return true;
    }
    x[i] = lo_[i];
  }
  return false;
}

std::optional<Box> Box::shrunk(Coord margin) const {
  LatticePoint lo = lo_, hi = hi_;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] += margin;
    hi[i] -= margin;
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return Box(lo, hi);
}

std::optional<Box> Box::intersect(const Box& a, const Box& b) {
  require_same_dim(a.lo_, b.lo_);
  LatticePoint lo(a.lo_.size()), hi(a.lo_.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::max(a.lo_[i], b.lo_[i]);
    hi[i] = std::min(a.hi_[i], b.hi_[i]);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return Box(lo, hi);
}

Box bounding_box(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw ArgumentError("bounding_box: empty point set");
  LatticePoint lo = points.front(), hi = points.front();
  for (const auto& p : points) {
    require_same_dim(p, lo);
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return Box(lo, hi);
}

// ---------------------------------------------------------------------------
// UnivariateConvex

UnivariateConvex UnivariateConvex::affine(double slope, double intercept) {
  UnivariateConvex g;
  g.kind_ = Kind::Affine;
  g.slope_ = slope;
  g.intercept_ = intercept;
  return g;
}

UnivariateConvex UnivariateConvex::abs(Coord center, double weight) {
  if (weight < 0) throw ArgumentError("UnivariateConvex::abs: negative weight");
  UnivariateConvex g;
  g.kind_ = Kind::Abs;
  g.center_ = center;
  g.weight_ = weight;
  return g;
}

UnivariateConvex UnivariateConvex::square(Coord center, double weight) {
  if (weight < 0) throw ArgumentError("UnivariateConvex::square: negative weight");
  UnivariateConvex g;
  g.kind_ = Kind::Square;
  g.center_ = center;
  g.weight_ = weight;
  return g;
}

UnivariateConvex UnivariateConvex::quadratic(double quad, double lin, double constant) {
  if (quad < 0) throw ArgumentError("UnivariateConvex::quadratic: negative leading coefficient");
  UnivariateConvex g;
  g.kind_ = Kind::Quadratic;
  g.quad_ = quad;
  g.lin_ = lin;
  g.const_ = constant;
  return g;
}

UnivariateConvex UnivariateConvex::affine_max(std::vector<std::pair<double, double>> pieces) {
  if (pieces.empty()) throw ArgumentError("UnivariateConvex::affine_max: empty piece list");
  UnivariateConvex g;
  g.kind_ = Kind::AffineMax;
  g.affine_pieces_ = std::move(pieces);
  return g;
}

UnivariateConvex UnivariateConvex::table(Coord lo, std::vector<double> values) {
  if (values.empty()) throw ArgumentError("UnivariateConvex::table: empty table");
  for (double v : values) {
    if (std::isnan(v) || v == -std::numeric_limits<double>::infinity()) {
      throw ArgumentError("UnivariateConvex::table: values must be finite or +inf");
    }
  }
  // Discrete convexity at interior points of the finite part, +inf convention:
  // g(t-1) + g(t+1) >= 2 g(t) must hold whenever g(t) is finite.
  for (std::size_t t = 1; t + 1 < values.size(); ++t) {
    if (!std::isfinite(values[t])) continue;
    const double lhs = values[t - 1] + values[t + 1];
    if (lhs < 2 * values[t]) {
      throw SpecError("univariate table is not discrete convex at t = " +
                      std::to_string(lo + static_cast<Coord>(t)));
    }
  }
  // A finite value separated from the finite part by +inf would also break
  // convexity (g(t-1) + g(t+1) = +inf >= 2 g(t) holds, but the effective
  // domain must be an interval).
  std::size_t first = values.size(), last = 0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (std::isfinite(values[t])) {
      first = std::min(first, t);
      last = std::max(last, t);
    }
  }
  for (std::size_t t = first; t <= last && first < values.size(); ++t) {
    if (!std::isfinite(values[t])) {
      throw SpecError("univariate table has a +inf hole inside its finite part at t = " +
                      std::to_string(lo + static_cast<Coord>(t)));
    }
  }
  UnivariateConvex g;
  g.kind_ = Kind::Table;
  g.table_lo_ = lo;
  g.table_values_ = std::move(values);
  return g;
}

UnivariateConvex UnivariateConvex::zero() { return UnivariateConvex(); }

ExtendedValue UnivariateConvex::operator()(Coord t) const {
  switch (kind_) {
    case Kind::Zero:
      return ExtendedValue(0.0);
    case Kind::Affine:
      return ExtendedValue(slope_ * static_cast<double>(t) + intercept_);
    case Kind::Abs:
      return ExtendedValue(weight_ * static_cast<double>(std::abs(t - center_)));
    case Kind::Square: {
      const Coord d = t - center_;
      return ExtendedValue(weight_ * static_cast<double>(d * d));
    }
    case Kind::Quadratic: {
      const double td = static_cast<double>(t);
      return ExtendedValue(quad_ * td * td + lin_ * td + const_);
    }
    case Kind::AffineMax: {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& [a, b] : affine_pieces_) {
        best = std::max(best, a * static_cast<double>(t) + b);
      }
      return ExtendedValue(best);
    }
    case Kind::Table: {
      const Coord idx = t - table_lo_;
      if (idx < 0 || idx >= static_cast<Coord>(table_values_.size())) {
        return ExtendedValue::infinity();
      }
      const double v = table_values_[static_cast<std::size_t>(idx)];
      return std::isfinite(v) ? ExtendedValue(v) : ExtendedValue::infinity();
    }
  }
  throw ArgumentError("UnivariateConvex: unknown kind");
}

std::optional<std::pair<Coord, Coord>> UnivariateConvex::finite_range() const {
  if (kind_ != Kind::Table) return std::nullopt;
  Coord first = -1, last = -1;
  for (std::size_t t = 0; t < table_values_.size(); ++t) {
    if (std::isfinite(table_values_[t])) {
      if (first < 0) first = static_cast<Coord>(t);
      last = static_cast<Coord>(t);
    }
  }
  if (first < 0) return std::nullopt;  // identically +inf
  return std::make_pair(table_lo_ + first, table_lo_ + last);
}

bool UnivariateConvex::is_zero() const { return kind_ == Kind::Zero; }

// ---------------------------------------------------------------------------
// QuadraticSpec

QuadraticSpec::QuadraticSpec(const std::vector<std::vector<double>>& q_full,
                             std::vector<double> c)
    : n_(static_cast<int>(q_full.size())), c_(std::move(c)) {
  if (n_ == 0) throw ArgumentError("QuadraticSpec: empty matrix");
  if (c_.empty()) c_.assign(static_cast<std::size_t>(n_), 0.0);
  if (static_cast<int>(c_.size()) != n_) {
    throw ArgumentError("QuadraticSpec: c has wrong dimension");
  }
  for (const auto& row : q_full) {
    if (static_cast<int>(row.size()) != n_) throw SpecError("QuadraticSpec: Q is not square");
    for (double v : row) {
      if (!std::isfinite(v)) throw SpecError("QuadraticSpec: Q entries must be finite");
    }
  }
  for (double v : c_) {
    if (!std::isfinite(v)) throw SpecError("QuadraticSpec: c entries must be finite");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (q_full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          q_full[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw SpecError("QuadraticSpec: Q is not symmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
    }
  }
  upper_.reserve(static_cast<std::size_t>(n_ * (n_ + 1) / 2));
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      upper_.push_back(q_full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
}

double QuadraticSpec::q(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Row-major upper triangle offset for row i: i*n - i(i-1)/2.
  const int offset = i * n_ - i * (i - 1) / 2 + (j - i);
  return upper_[static_cast<std::size_t>(offset)];
}

double QuadraticSpec::evaluate(const LatticePoint& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw ArgumentError("QuadraticSpec::evaluate: dimension mismatch");
  }
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    const double xi = static_cast<double>(x[static_cast<std::size_t>(i)]);
    total += q(i, i) * xi * xi + c_[static_cast<std::size_t>(i)] * xi;
    for (int j = i + 1; j < n_; ++j) {
      total += 2.0 * q(i, j) * xi * static_cast<double>(x[static_cast<std::size_t>(j)]);
    }
  }
  return total;
}

double QuadraticSpec::evaluate_real(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw ArgumentError("QuadraticSpec::evaluate_real: dimension mismatch");
  }
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    total += q(i, i) * xi * xi + c_[static_cast<std::size_t>(i)] * xi;
    for (int j = i + 1; j < n_; ++j) {
      total += 2.0 * q(i, j) * xi * x[static_cast<std::size_t>(j)];
    }
  }
  return total;
}

DiagDominanceReport quadratic_is_diag_dominant(const QuadraticSpec& q) {
  DiagDominanceReport report;
  for (int i = 0; i < q.dim(); ++i) {
    double off = 0.0;
    for (int j = 0; j < q.dim(); ++j) {
      if (j != i) off += std::abs(q.q(i, j));
    }
    const double slack = q.q(i, i) - off;
    report.rows.push_back({i, slack});
    if (slack < 0) report.dominant = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// TwoSeparableSpec

TwoSeparableSpec::TwoSeparableSpec(int n) : n_(n) {
  if (n < 1) throw ArgumentError("TwoSeparableSpec: dimension must be >= 1");
}

void TwoSeparableSpec::check_pair(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || i == j) {
    throw ArgumentError("TwoSeparableSpec: invalid index pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
  }
}

void TwoSeparableSpec::set_xi(int i, UnivariateConvex piece) {
  if (i < 0 || i >= n_) throw ArgumentError("TwoSeparableSpec: xi index out of range");
  xi_.insert_or_assign(i, std::move(piece));
}

void TwoSeparableSpec::set_phi(int i, int j, UnivariateConvex piece) {
  check_pair(i, j);
  phi_.insert_or_assign({i, j}, std::move(piece));
}

void TwoSeparableSpec::set_psi(int i, int j, UnivariateConvex piece) {
  check_pair(i, j);
  psi_.insert_or_assign({i, j}, std::move(piece));
}

ExtendedValue TwoSeparableSpec::evaluate(const LatticePoint& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw ArgumentError("TwoSeparableSpec::evaluate: dimension mismatch");
  }
  ExtendedValue total(0.0);
  for (const auto& [i, g] : xi_) {
    total = total + g(x[static_cast<std::size_t>(i)]);
    if (total.is_infinite()) return total;
  }
  for (const auto& [ij, g] : phi_) {
    total = total + g(x[static_cast<std::size_t>(ij.first)] -
                      x[static_cast<std::size_t>(ij.second)]);
    if (total.is_infinite()) return total;
  }
  for (const auto& [ij, g] : psi_) {
    total = total + g(x[static_cast<std::size_t>(ij.first)] +
                      x[static_cast<std::size_t>(ij.second)]);
    if (total.is_infinite()) return total;
  }
  return total;
}

TwoSeparableSpec quadratic_to_two_separable(const QuadraticSpec& q) {
  const auto report = quadratic_is_diag_dominant(q);
  for (const auto& row : report.rows) {
    if (row.slack < 0) {
      throw ArgumentError("quadratic_to_two_separable: row " + std::to_string(row.row) +
                          " violates diagonal dominance (slack " +
                          std::to_string(row.slack) + ")");
    }
  }
  const int n = q.dim();
  TwoSeparableSpec spec(n);
  for (int i = 0; i < n; ++i) {
    // xi_i(t) = (q_ii - sum_{j != i} |q_ij|) t^2 + c_i t
    const double coeff = report.rows[static_cast<std::size_t>(i)].slack;
    const double ci = q.c()[static_cast<std::size_t>(i)];
    if (coeff != 0.0 || ci != 0.0) {
      spec.set_xi(i, UnivariateConvex::quadratic(coeff, ci));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double qij = q.q(i, j);
      const double plus = std::max(qij, 0.0);
      const double minus = std::max(-qij, 0.0);
      if (plus != 0.0) spec.set_psi(i, j, UnivariateConvex::square(0, 0.5 * plus));
      if (minus != 0.0) spec.set_phi(i, j, UnivariateConvex::square(0, 0.5 * minus));
    }
  }
  return spec;
}

// ---------------------------------------------------------------------------
// LatticeFunction factories

LatticeFunction::LatticeFunction(Box universe, Evaluator evaluator, std::string family)
    : universe_(std::move(universe)), eval_(std::move(evaluator)), family_(std::move(family)) {
  if (!eval_) throw ArgumentError("LatticeFunction: null evaluator");
}

LatticeFunction make_table(const Box& box, std::vector<double> values, std::string family) {
  if (values.size() != box.size()) {
    throw ArgumentError("make_table: " + std::to_string(values.size()) + " values for a box of " +
                        std::to_string(box.size()) + " points");
  }
  for (double v : values) {
    if (std::isnan(v) || v == -std::numeric_limits<double>::infinity()) {
      throw ArgumentError("make_table: values must be finite or +inf");
    }
  }
  auto data = std::make_shared<const std::vector<double>>(std::move(values));
  const LatticePoint lo = box.lo();
  const LatticePoint hi = box.hi();
  return LatticeFunction(
      box,
      [data, lo, hi](const LatticePoint& x) {
        std::size_t offset = 0;
        for (std::size_t i = 0; i < lo.size(); ++i) {
          offset = offset * static_cast<std::size_t>(hi[i] - lo[i] + 1) +
                   static_cast<std::size_t>(x[i] - lo[i]);
        }
        const double v = (*data)[offset];
        return std::isfinite(v) ? ExtendedValue(v) : ExtendedValue::infinity();
      },
      std::move(family));
}

LatticeFunction make_indicator(const std::vector<LatticePoint>& points,
                               std::optional<Box> universe) {
  if (points.empty()) throw ArgumentError("make_indicator: empty point set");
  Box box = universe ? *universe : bounding_box(points);
  std::vector<double> values(box.size(), std::numeric_limits<double>::infinity());
  for (const auto& p : points) {
    if (!box.contains(p)) {
      throw ArgumentError("make_indicator: point outside the declared universe");
    }
    std::size_t offset = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      offset = offset * static_cast<std::size_t>(box.hi()[i] - box.lo()[i] + 1) +
               static_cast<std::size_t>(p[i] - box.lo()[i]);
    }
    values[offset] = 0.0;
  }
  return make_table(box, std::move(values), "indicator");
}

LatticeFunction make_quadratic(QuadraticSpec q, const Box& box) {
  if (q.dim() != box.dim()) throw ArgumentError("make_quadratic: dimension mismatch with box");
  auto spec = std::make_shared<const QuadraticSpec>(std::move(q));
  return LatticeFunction(
      box, [spec](const LatticePoint& x) { return ExtendedValue(spec->evaluate(x)); },
      "quadratic");
}

LatticeFunction make_two_separable(TwoSeparableSpec spec, const Box& box) {
  if (spec.dim() != box.dim()) {
    throw ArgumentError("make_two_separable: dimension mismatch with box");
  }
  auto shared = std::make_shared<const TwoSeparableSpec>(std::move(spec));
  return LatticeFunction(
      box, [shared](const LatticePoint& x) { return shared->evaluate(x); }, "two_separable");
}

LatticeFunction make_separable(std::vector<UnivariateConvex> pieces, const Box& box) {
  if (static_cast<int>(pieces.size()) != box.dim()) {
    throw ArgumentError("make_separable: need one piece per dimension");
  }
  auto shared = std::make_shared<const std::vector<UnivariateConvex>>(std::move(pieces));
  return LatticeFunction(
      box,
      [shared](const LatticePoint& x) {
        ExtendedValue total(0.0);
        for (std::size_t i = 0; i < x.size(); ++i) {
          total = total + (*shared)[i](x[i]);
          if (total.is_infinite()) break;
        }
        return total;
      },
      "separable");
}

std::vector<std::pair<LatticePoint, double>> enumerate_finite(const LatticeFunction& f,
                                                              const Box& box) {
  std::vector<std::pair<LatticePoint, double>> out;
  LatticePoint x = box.first();
  do {
    const ExtendedValue v = f(x);
    if (v.is_finite()) out.emplace_back(x, v.finite());
  } while (box.next(x));
  return out;
}

std::vector<LatticePoint> effective_domain(const LatticeFunction& f, const Box& box) {
  std::vector<LatticePoint> out;
  LatticePoint x = box.first();
  do {
    if (f(x).is_finite()) out.push_back(x);
  } while (box.next(x));
  return out;
}

}  // namespace ddmc
