#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ddmc/continuous.hpp"
#include "ddmc/gallery.hpp"
#include "ddmc/minimize.hpp"

namespace ddmc {

using ParsedFunction = std::variant<LatticeFunction, ContinuousFunction>;

/// Parses the JSON function-spec schema (documented in the README): a
/// "family" of table/quadratic/indicator/separable/two_separable with
/// family-specific payload, or a continuous spec flagged "continuous": true.
/// Construction-time invariant checks run eagerly (symmetry of Q, univariate
/// convexity of table pieces); violations raise SpecError naming the path.
ParsedFunction parse_function_spec(const std::string& text);

/// JSON renderers. Every renderer is deterministic: identical inputs give
/// byte-identical output.
std::string render_verdict(const std::string& label, const Verdict& verdict);
std::string render_classification(const ClassificationReport& report,
                                  const std::vector<std::pair<int, Verdict>>& variants = {});
std::string render_descent(const DescentTrace& trace);
std::string render_scaling(const ScalingTrace& trace);
std::string render_gallery(const GalleryReport& report);

}  // namespace ddmc
