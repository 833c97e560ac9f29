#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ddmc/box.hpp"

namespace ddmc {

struct Witness {
  LatticePoint x, y;
  bool operator==(const Witness&) const = default;
};

/// Outcome of a brute-force property check over a box. When holds is false
/// the witness is present and re-evaluating the defining inequality at it
/// reproduces the violation; detail carries that re-derivation (values,
/// offending midpoints or directions).
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::string detail;
  std::uint64_t pairs_checked = 0;
};

enum class ConvexityClass {
  Ddm,
  LNat,
  GlobalDmc,
  LocalDmc,
  IntegrallyConvex,
  Submodular,
  SeparableConvexDomainOnly,
};

/// Short token used by the CLI and the JSON report ("ddm", "lnat", "gdmc",
/// "ldmc", "ic", "submodular", "sepdom").
std::string class_token(ConvexityClass c);
std::optional<ConvexityClass> class_from_token(const std::string& token);

struct ClassificationReport {
  Box box;
  std::map<ConvexityClass, Verdict> verdicts;
};

}  // namespace ddmc
