#pragma once

#include <cmath>
#include <limits>

#include "ddmc/errors.hpp"

namespace ddmc {

/// A value of R u {+inf}, the codomain of every lattice function.
/// +inf absorbs addition and compares greater than every finite value.
/// NaN and -inf are rejected on construction.
class ExtendedValue {
public:
  ExtendedValue() : v_(0.0) {}
  ExtendedValue(double v) : v_(v) {  // NOLINT: implicit by design of the call sites
    if (std::isnan(v)) throw ArgumentError("ExtendedValue: NaN is not a lattice-function value");
    if (v == -std::numeric_limits<double>::infinity()) {
      throw ArgumentError("ExtendedValue: -inf is not a lattice-function value");
    }
  }

  static ExtendedValue infinity() {
    ExtendedValue e;
    e.v_ = std::numeric_limits<double>::infinity();
    return e;
  }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_infinite() const { return !std::isfinite(v_); }

  /// The raw double, +inf included.
  double raw() const { return v_; }

  /// The finite value; throws if infinite.
  double finite() const {
    if (!is_finite()) throw ArgumentError("ExtendedValue: +inf has no finite value");
    return v_;
  }

  friend ExtendedValue operator+(ExtendedValue a, ExtendedValue b) {
    ExtendedValue e;
    e.v_ = a.v_ + b.v_;  // inf absorbs; finite+finite stays finite
    return e;
  }
  friend bool operator==(ExtendedValue a, ExtendedValue b) { return a.v_ == b.v_; }
  friend bool operator<(ExtendedValue a, ExtendedValue b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtendedValue a, ExtendedValue b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtendedValue a, ExtendedValue b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtendedValue a, ExtendedValue b) { return a.v_ >= b.v_; }

private:
  double v_;
};

/// Scale by a nonnegative coefficient with the convention 0 * inf = 0,
/// so a zero coefficient drops its term from a nonnegative combination.
inline ExtendedValue scale_nonneg(double a, ExtendedValue v) {
  if (a == 0.0) return ExtendedValue(0.0);
  if (v.is_infinite()) return ExtendedValue::infinity();
  return ExtendedValue(a * v.finite());
}

}  // namespace ddmc
