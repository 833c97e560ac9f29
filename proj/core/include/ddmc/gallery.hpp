#pragma once

#include <string>
#include <vector>

#include "ddmc/classify.hpp"

namespace ddmc {

struct GalleryFixture {
  std::string name;
  std::string claim;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct GalleryReport {
  std::vector<GalleryFixture> fixtures;
  bool all_pass = true;
};

/// Runs the worked-example gallery: every counterexample set and function
/// with its published verdict and witness, re-checked from scratch. All
/// fixtures are integer-valued, so the verdicts are tolerance-independent.
GalleryReport run_gallery(const CheckOptions& opts = {});

}  // namespace ddmc
