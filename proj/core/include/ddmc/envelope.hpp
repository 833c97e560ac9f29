#pragma once

#include <vector>

#include "ddmc/function.hpp"
#include "ddmc/rational.hpp"

namespace ddmc {

/// The integer neighborhood N(z) = { w in Z^n : |w_i - z_i| < 1 }:
/// the singleton {z_i} in integral coordinates, {floor(z_i), ceil(z_i)}
/// in fractional ones.
std::vector<LatticePoint> integer_neighborhood(const std::vector<Rational>& z);

/// The local convex envelope of f at a rational point z:
///   min sum_{w in N(z)} lambda_w f(w)
///   s.t. sum lambda_w w = z, lambda >= 0, sum lambda_w = 1,
/// restricted to the finite-valued neighbors; +inf when infeasible over
/// dom f. Solved by a dense two-phase primal simplex with Bland's rule.
/// The constraint system is exact rational (feasibility and ratio tests
/// never suffer rounding); only the phase-2 objective is floating point.
/// Numerical failure raises DiagnosticError, never a silent wrong value.
ExtendedValue local_convex_envelope(const LatticeFunction& f, const std::vector<Rational>& z);

/// Envelope at (x+y)/2.
ExtendedValue envelope_at_midpoint(const LatticeFunction& f, const LatticePoint& x,
                                   const LatticePoint& y);

}  // namespace ddmc
