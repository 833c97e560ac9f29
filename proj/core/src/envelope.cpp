#include "ddmc/envelope.hpp"

#include <algorithm>
#include <cmath>

namespace ddmc {

std::vector<LatticePoint> integer_neighborhood(const std::vector<Rational>& z) {
  if (z.empty()) throw ArgumentError("integer_neighborhood: empty point");
  int fractional = 0;
  for (const auto& zi : z) {
    if (!zi.is_integer()) ++fractional;
  }
  if (fractional > 24) {
    throw ResourceError("integer_neighborhood: 2^" + std::to_string(fractional) +
                        " neighbors exceed the enumeration cap");
  }
  std::vector<LatticePoint> neighborhood;
  neighborhood.reserve(std::size_t{1} << fractional);
  LatticePoint w(z.size());
  const auto emit = [&](auto&& self, std::size_t i) -> void {
    if (i == z.size()) {
      neighborhood.push_back(w);
      return;
    }
    if (z[i].is_integer()) {
      w[i] = z[i].num();
      self(self, i + 1);
    } else {
      w[i] = z[i].floor();
      self(self, i + 1);
      w[i] = z[i].ceil();
      self(self, i + 1);
    }
  };
  emit(emit, 0);
  return neighborhood;
}

namespace {

// Dense two-phase tableau simplex over exact rationals. The tableau rows are
// B^{-1}[A | b]; reduced costs are recomputed from the tableau each iteration
// (no accumulated objective row), with Bland's smallest-index rule for both
// the entering and the leaving choice.
class EnvelopeSimplex {
public:
  EnvelopeSimplex(std::vector<std::vector<Rational>> columns, std::vector<Rational> rhs,
                  std::vector<double> costs)
      : rows_(rhs.size()),
        structural_(columns.size()),
        costs_(std::move(costs)) {
    // Layout: columns 0..structural-1 hold the lambda variables, then one
    // artificial per row; the last column is the RHS.
    tableau_.assign(rows_, std::vector<Rational>(structural_ + rows_ + 1, Rational(0)));
    for (std::size_t r = 0; r < rows_; ++r) {
      const bool flip = rhs[r] < Rational(0);
      for (std::size_t j = 0; j < structural_; ++j) {
        tableau_[r][j] = flip ? -columns[j][r] : columns[j][r];
      }
      tableau_[r][structural_ + r] = Rational(1);
      tableau_[r].back() = flip ? -rhs[r] : rhs[r];
    }
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) basis_[r] = structural_ + r;
  }

  /// Returns the optimum of min costs . lambda, or +inf when infeasible.
  ExtendedValue solve() {
    run_phase_one();
    Rational infeasibility(0);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] >= structural_) infeasibility = infeasibility + tableau_[r].back();
    }
    if (infeasibility > Rational(0)) return ExtendedValue::infinity();
    drive_out_artificials();
    run_phase_two();
    double value = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_) {
        value += costs_[basis_[r]] * tableau_[r].back().to_double();
      }
    }
    return ExtendedValue(value);
  }

private:
  void pivot(std::size_t pivot_row, std::size_t pivot_col) {
    const Rational p = tableau_[pivot_row][pivot_col];
    for (auto& entry : tableau_[pivot_row]) entry = entry / p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row || tableau_[r][pivot_col].is_zero()) continue;
      const Rational factor = tableau_[r][pivot_col];
      for (std::size_t j = 0; j < tableau_[r].size(); ++j) {
        tableau_[r][j] = tableau_[r][j] - factor * tableau_[pivot_row][j];
      }
    }
    basis_[pivot_row] = pivot_col;
  }

  // Bland leaving rule: among the minimum-ratio rows take the smallest
  // basic-variable index.
  std::size_t choose_leaving(std::size_t col) {
    bool found = false;
    Rational best_ratio(0);
    std::size_t best_row = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (tableau_[r][col] > Rational(0)) {
        const Rational ratio = tableau_[r].back() / tableau_[r][col];
        if (!found || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[best_row])) {
          found = true;
          best_ratio = ratio;
          best_row = r;
        }
      }
    }
    if (!found) {
      throw DiagnosticError("envelope simplex: unbounded pivot in a bounded program");
    }
    return best_row;
  }

  void run_phase_one() {
    // Phase-1 cost: 1 on artificials. Reduced cost of column j is
    // -(sum over artificial-basic rows of T[r][j]), computed exactly.
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < structural_ && entering == kNone; ++j) {
        if (is_basic(j)) continue;
        Rational reduced(0);
        for (std::size_t r = 0; r < rows_; ++r) {
          if (basis_[r] >= structural_) reduced = reduced - tableau_[r][j];
        }
        if (reduced < Rational(0)) entering = j;
      }
      if (entering == kNone) return;
      pivot(choose_leaving(entering), entering);
    }
    throw DiagnosticError("envelope simplex: phase 1 exceeded the iteration cap");
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_) continue;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (!is_basic(j) && !tableau_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
      // A row with no structural pivot is redundant; its artificial stays
      // basic at value zero and is simply never entered again.
    }
  }

  void run_phase_two() {
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < structural_ && entering == kNone; ++j) {
        if (is_basic(j)) continue;
        double reduced = costs_[j];
        for (std::size_t r = 0; r < rows_; ++r) {
          if (basis_[r] < structural_ && !tableau_[r][j].is_zero()) {
            reduced -= costs_[basis_[r]] * tableau_[r][j].to_double();
          }
        }
        if (reduced < -kReducedCostTol) entering = j;
      }
      if (entering == kNone) return;
      pivot(choose_leaving(entering), entering);
    }
    throw DiagnosticError("envelope simplex: phase 2 exceeded the iteration cap");
  }

  bool is_basic(std::size_t col) const {
    return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
  }

  static constexpr int kMaxIterations = 10000;
  static constexpr double kReducedCostTol = 1e-12;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t rows_;
  std::size_t structural_;
  std::vector<double> costs_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<std::size_t> basis_;
};

}  // namespace

ExtendedValue local_convex_envelope(const LatticeFunction& f, const std::vector<Rational>& z) {
  if (static_cast<int>(z.size()) != f.dim()) {
    throw ArgumentError("local_convex_envelope: point dimension mismatch");
  }
  const auto neighborhood = integer_neighborhood(z);
  std::vector<std::vector<Rational>> columns;
  std::vector<double> costs;
  for (const auto& w : neighborhood) {
    const ExtendedValue v = f(w);
    if (v.is_infinite()) continue;
    std::vector<Rational> column;
    column.reserve(z.size() + 1);
    for (Coord c : w) column.emplace_back(c);
    column.emplace_back(1);  // convex-combination row
    columns.push_back(std::move(column));
    costs.push_back(v.finite());
  }
  if (columns.empty()) return ExtendedValue::infinity();
  std::vector<Rational> rhs(z.begin(), z.end());
  rhs.emplace_back(1);
  EnvelopeSimplex simplex(std::move(columns), std::move(rhs), std::move(costs));
  return simplex.solve();
}

ExtendedValue envelope_at_midpoint(const LatticeFunction& f, const LatticePoint& x,
                                   const LatticePoint& y) {
  require_same_dim(x, y);
  std::vector<Rational> z;
  z.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z.emplace_back(x[i] + y[i], 2);
  return local_convex_envelope(f, z);
}

}  // namespace ddmc
