#pragma once

#include <stdexcept>
#include <string>

namespace ddmc {

/// Bad arguments: dimension mismatches, points outside the effective
/// domain, invalid scaling factors, and similar caller mistakes.
class ArgumentError : public std::invalid_argument {
public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed function specs: JSON schema violations, asymmetric Q,
/// non-convex univariate tables. The message names the offending path.
class SpecError : public std::runtime_error {
public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration size over the configured cap.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal computation could not produce a trustworthy result:
/// simplex overflow or non-convergence, descent iteration cap,
/// coordinate-descent stall. Never a silently wrong value.
class DiagnosticError : public std::runtime_error {
public:
  explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ddmc
