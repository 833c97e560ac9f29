#pragma once

#include <cstdint>
#include <string>

#include "ddmc/classify.hpp"

namespace ddmc {

struct FuzzOutcome {
  std::string report_json;  // byte-identical for identical seed/count/family
  bool all_consistent = true;
  int instances = 0;
};

/// Generates `count` random instances of the family ("table", "quadratic",
/// "2sep"), classifies each, and cross-checks the five DDM characterization
/// variants plus the class-hierarchy implications on every instance. The
/// generated spec JSON is embedded in the report, and the whole report is a
/// deterministic function of (seed, count, family).
FuzzOutcome run_fuzz(std::uint64_t seed, int count, const std::string& family,
                     const CheckOptions& opts = {});

}  // namespace ddmc
