// Command-line front end for the DDM-convexity toolkit: load a JSON function
// spec, classify it against the discrete-convexity hierarchy, minimize it,
// verify individual theorems, reproduce the counterexample gallery, or fuzz
// random instances. Every verdict printed here comes from the library; this
// file only parses arguments and formats output.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ddmc/fuzz.hpp"
#include "ddmc/gallery.hpp"
#include "ddmc/json_io.hpp"
#include "ddmc/operations.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ddmc::SpecError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ddmc::LatticePoint parse_point(const std::string& text) {
  ddmc::LatticePoint point;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    point.push_back(std::stoll(item));
  }
  if (point.empty()) throw ddmc::ArgumentError("empty point: " + text);
  return point;
}

// "a..b" (same bounds in every coordinate) or "l1,l2..h1,h2".
ddmc::Box parse_box(const std::string& text, int dim) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    throw ddmc::ArgumentError("box must look like lo..hi, got: " + text);
  }
  const std::string lo_text = text.substr(0, sep);
  const std::string hi_text = text.substr(sep + 2);
  ddmc::LatticePoint lo = parse_point(lo_text);
  ddmc::LatticePoint hi = parse_point(hi_text);
  if (lo.size() == 1 && dim > 1) lo.assign(static_cast<std::size_t>(dim), lo[0]);
  if (hi.size() == 1 && dim > 1) hi.assign(static_cast<std::size_t>(dim), hi[0]);
  return ddmc::Box(lo, hi);
}

ddmc::CheckOptions options_from_env(double tolerance) {
  ddmc::CheckOptions opts;
  opts.eps = tolerance;
  if (const char* cap = std::getenv("DDMC_MAX_PAIRS")) {
    opts.max_pairs = std::strtoull(cap, nullptr, 10);
    if (opts.max_pairs == 0) throw ddmc::ArgumentError("DDMC_MAX_PAIRS must be positive");
  }
  return opts;
}

std::string verdict_text(const std::string& label, const ddmc::Verdict& v) {
  std::ostringstream out;
  out << label << ": " << (v.holds ? "holds" : "VIOLATED");
  out << "  (pairs checked: " << v.pairs_checked << ")";
  if (!v.holds && v.witness) {
    out << "\n  witness x = (";
    for (std::size_t i = 0; i < v.witness->x.size(); ++i) {
      if (i) out << ",";
      out << v.witness->x[i];
    }
    out << "), y = (";
    for (std::size_t i = 0; i < v.witness->y.size(); ++i) {
      if (i) out << ",";
      out << v.witness->y[i];
    }
    out << ")";
  }
  if (!v.detail.empty()) out << "\n  " << v.detail;
  return out.str();
}

int run_classify(const std::string& spec_path, const std::string& box_text,
                 const std::string& classes_text, bool char_variants,
                 const std::string& format, double tolerance) {
  const auto opts = options_from_env(tolerance);
  const auto parsed = ddmc::parse_function_spec(read_file(spec_path));
  if (!std::holds_alternative<ddmc::LatticeFunction>(parsed)) {
    throw ddmc::ArgumentError("classify expects a lattice function spec");
  }
  const auto& f = std::get<ddmc::LatticeFunction>(parsed);
  const ddmc::Box box = box_text.empty() ? f.universe() : parse_box(box_text, f.dim());

  std::set<ddmc::ConvexityClass> classes = ddmc::default_classes();
  if (!classes_text.empty()) {
    classes.clear();
    std::stringstream in(classes_text);
    std::string token;
    while (std::getline(in, token, ',')) {
      const auto c = ddmc::class_from_token(token);
      if (!c) throw ddmc::ArgumentError("unknown class token: " + token);
      classes.insert(*c);
    }
  }

  const ddmc::ClassificationReport report = ddmc::classify_all(f, box, classes, opts);
  std::vector<std::pair<int, ddmc::Verdict>> variants;
  if (char_variants) {
    for (int variant = 1; variant <= 5; ++variant) {
      variants.emplace_back(variant, ddmc::check_ddm_characterization(f, box, variant, opts));
    }
  }

  bool all_hold = true;
  for (const auto& [c, v] : report.verdicts) all_hold = all_hold && v.holds;
  for (const auto& [variant, v] : variants) all_hold = all_hold && v.holds;

  if (format == "json") {
    std::cout << ddmc::render_classification(report, variants) << "\n";
  } else {
    for (const auto& [c, v] : report.verdicts) {
      std::cout << verdict_text(ddmc::class_token(c), v) << "\n";
    }
    for (const auto& [variant, v] : variants) {
      std::cout << verdict_text("ddm-characterization-" + std::to_string(variant), v) << "\n";
    }
  }
  return all_hold ? kExitHolds : kExitViolated;
}

int run_minimize(const std::string& spec_path, const std::string& from_text,
                 const std::string& algo, bool trace, const std::string& format,
                 double tolerance) {
  (void)tolerance;
  const auto parsed = ddmc::parse_function_spec(read_file(spec_path));
  if (!std::holds_alternative<ddmc::LatticeFunction>(parsed)) {
    throw ddmc::ArgumentError("minimize expects a lattice function spec");
  }
  const auto& f = std::get<ddmc::LatticeFunction>(parsed);
  const ddmc::LatticePoint x0 = parse_point(from_text);

  if (algo == "descent") {
    const ddmc::DescentTrace result = ddmc::steepest_descent(f, x0);
    if (format == "json") {
      std::cout << ddmc::render_descent(result) << "\n";
    } else {
      std::cout << "minimizer: ";
      for (std::size_t i = 0; i < result.minimizer.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << result.minimizer[i];
      }
      std::cout << "\nvalue: " << result.values[result.values.size() - 2]
                << "\noracle calls: " << result.oracle_calls;
      if (result.distance_to_argmin) {
        std::cout << "\ndistance to argmin (L): " << *result.distance_to_argmin;
      }
      std::cout << "\n";
      if (trace) {
        for (std::size_t k = 0; k < result.path.size(); ++k) {
          std::cout << "  step " << k << ": (";
          for (std::size_t i = 0; i < result.path[k].size(); ++i) {
            if (i) std::cout << ",";
            std::cout << result.path[k][i];
          }
          std::cout << ") value " << result.values[k] << "\n";
        }
      }
    }
    return kExitHolds;
  }
  if (algo == "scaling") {
    const ddmc::ScalingTrace result = ddmc::scaling_minimize(f, x0);
    if (format == "json") {
      std::cout << ddmc::render_scaling(result) << "\n";
    } else {
      std::cout << "minimizer: ";
      for (std::size_t i = 0; i < result.minimizer.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << result.minimizer[i];
      }
      std::cout << "\nK_inf: " << result.k_inf << "\nphases: " << result.phases.size()
                << "\ntotal oracle calls: " << result.total_oracle_calls << "\n";
      if (trace) {
        for (const auto& phase : result.phases) {
          std::cout << "  alpha " << phase.alpha << ": point (";
          for (std::size_t i = 0; i < phase.point.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << phase.point[i];
          }
          std::cout << "), oracle calls " << phase.oracle_calls << "\n";
        }
      }
    }
    return kExitHolds;
  }
  throw ddmc::ArgumentError("unknown algorithm: " + algo);
}

int run_verify(const std::string& spec_path, const std::string& property, int alpha,
               const std::string& format, double tolerance) {
  const auto opts = options_from_env(tolerance);
  const auto parsed = ddmc::parse_function_spec(read_file(spec_path));
  if (!std::holds_alternative<ddmc::LatticeFunction>(parsed)) {
    throw ddmc::ArgumentError("verify expects a lattice function spec");
  }
  const auto& f = std::get<ddmc::LatticeFunction>(parsed);
  const ddmc::Box& box = f.universe();

  std::vector<std::pair<std::string, ddmc::Verdict>> results;
  if (property == "proximity") {
    results.emplace_back("ddm (hypothesis)", ddmc::is_ddm_convex(f, box, opts));
    results.emplace_back("proximity alpha=" + std::to_string(alpha),
                         ddmc::verify_proximity(f, alpha, box, opts));
  } else if (property == "parallelogram") {
    results.emplace_back("ddm (hypothesis)", ddmc::is_ddm_convex(f, box, opts));
    results.emplace_back("parallelogram", ddmc::check_ddm_characterization(f, box, 3, opts));
  } else if (property.rfind("closure=", 0) == 0) {
    const std::string op = property.substr(8);
    const ddmc::Verdict before = ddmc::is_ddm_convex(f, box, opts);
    results.emplace_back("ddm (input)", before);
    // Canonical parameters per operation; documented in the README.
    ddmc::LatticeFunction g = [&]() -> ddmc::LatticeFunction {
      const int n = f.dim();
      if (op == "scale" || op == "scale:2") return ddmc::scale(f, 2);
      if (op == "scale:3") return ddmc::scale(f, 3);
      if (op == "sign_flip") {
        std::vector<int> tau(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) tau[static_cast<std::size_t>(i)] = (i % 2 == 0) ? -1 : 1;
        return ddmc::sign_flip(f, tau);
      }
      if (op == "permute") {
        std::vector<int> sigma(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = n - 1 - i;
        return ddmc::permute(f, sigma);
      }
      if (op == "translate") {
        return ddmc::translate(f, ddmc::LatticePoint(static_cast<std::size_t>(n), 1));
      }
      if (op == "direct_sum") return ddmc::direct_sum(f, f);
      if (op == "restrict") {
        if (n < 2) throw ddmc::ArgumentError("closure=restrict needs dimension >= 2");
        const ddmc::Coord mid = ddmc::floor_half(f.universe().lo()[static_cast<std::size_t>(n - 1)] +
                                                 f.universe().hi()[static_cast<std::size_t>(n - 1)]);
        return ddmc::restrict_fn(f, {{n - 1, mid}});
      }
      if (op == "project") {
        if (n < 2) throw ddmc::ArgumentError("closure=project needs dimension >= 2");
        std::vector<int> keep;
        for (int i = 0; i + 1 < n; ++i) keep.push_back(i);
        return ddmc::project_fn(f, keep);
      }
      if (op == "infconv") {
        std::vector<ddmc::UnivariateConvex> pieces;
        for (int i = 0; i < n; ++i) {
          pieces.push_back(ddmc::UnivariateConvex::table(-2, {2, 1, 0, 1, 2}));
        }
        return ddmc::infconv_separable(f, pieces);
      }
      throw ddmc::ArgumentError("unknown closure operation: " + op);
    }();
    results.emplace_back("ddm (after " + op + ")",
                         ddmc::is_ddm_convex(g, g.universe(), opts));
  } else {
    throw ddmc::ArgumentError("unknown property: " + property);
  }

  bool all_hold = true;
  for (const auto& [label, v] : results) all_hold = all_hold && v.holds;
  if (format == "json") {
    std::string out = "[";
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i) out += ",\n";
      out += ddmc::render_verdict(results[i].first, results[i].second);
    }
    out += "]";
    std::cout << out << "\n";
  } else {
    for (const auto& [label, v] : results) std::cout << verdict_text(label, v) << "\n";
  }
  return all_hold ? kExitHolds : kExitViolated;
}

int run_gallery_cmd(const std::string& format, double tolerance) {
  const auto opts = options_from_env(tolerance);
  const ddmc::GalleryReport report = ddmc::run_gallery(opts);
  if (format == "json") {
    std::cout << ddmc::render_gallery(report) << "\n";
  } else {
    for (const auto& fixture : report.fixtures) {
      std::cout << (fixture.pass ? "PASS " : "FAIL ") << fixture.name << ": " << fixture.claim
                << "\n";
      if (!fixture.pass) {
        std::cout << "  expected: " << fixture.expected << "\n  observed: " << fixture.observed
                  << "\n";
      }
    }
    std::cout << (report.all_pass ? "all fixtures pass" : "FIXTURE MISMATCH") << "\n";
  }
  return report.all_pass ? kExitHolds : kExitViolated;
}

int run_fuzz_cmd(std::uint64_t seed, int count, const std::string& family,
                 const std::string& format, double tolerance) {
  const auto opts = options_from_env(tolerance);
  const ddmc::FuzzOutcome outcome = ddmc::run_fuzz(seed, count, family, opts);
  if (format == "json") {
    std::cout << outcome.report_json << "\n";
  } else {
    std::cout << outcome.instances << " instances of family " << family << ", seed " << seed
              << ": " << (outcome.all_consistent ? "all consistent" : "INCONSISTENT") << "\n";
  }
  return outcome.all_consistent ? kExitHolds : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed discrete midpoint convexity toolkit"};
  app.require_subcommand(1);

  std::string format = "human";
  double tolerance = 1e-9;
  app.add_option("--format", format, "output format: human or json")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--tolerance", tolerance, "inequality slack (default 1e-9)");

  auto* classify = app.add_subcommand("classify", "classify a function spec");
  std::string classify_spec, classify_box, classify_classes;
  bool classify_variants = false;
  classify->add_option("spec", classify_spec, "JSON function spec")->required();
  classify->add_option("--box", classify_box, "enumeration box lo..hi");
  classify->add_option("--classes", classify_classes,
                       "comma list of ddm,lnat,gdmc,ldmc,ic,submodular,sepdom");
  classify->add_flag("--char-variants", classify_variants,
                     "also run the five DDM characterization variants");

  auto* minimize = app.add_subcommand("minimize", "minimize a function spec");
  std::string minimize_spec, minimize_from, minimize_algo = "descent";
  bool minimize_trace = false;
  minimize->add_option("spec", minimize_spec, "JSON function spec")->required();
  minimize->add_option("--from", minimize_from, "start point x0, comma separated")->required();
  minimize->add_option("--algo", minimize_algo, "descent or scaling")
      ->check(CLI::IsMember({"descent", "scaling"}));
  minimize->add_flag("--trace", minimize_trace, "print the full path");

  auto* verify = app.add_subcommand("verify", "verify a theorem on a spec");
  std::string verify_spec, verify_property;
  int verify_alpha = 2;
  verify->add_option("spec", verify_spec, "JSON function spec")->required();
  verify->add_option("--property", verify_property,
                     "proximity | parallelogram | closure=<op>")
      ->required();
  verify->add_option("--alpha", verify_alpha, "scaling factor for proximity");

  auto* gallery = app.add_subcommand("gallery", "run the paper-fixture gallery");

  auto* fuzz = app.add_subcommand("fuzz", "classify random instances");
  std::uint64_t fuzz_seed = 0;
  int fuzz_count = 10;
  std::string fuzz_family = "table";
  fuzz->add_option("--seed", fuzz_seed, "RNG seed")->required();
  fuzz->add_option("--count", fuzz_count, "number of instances");
  fuzz->add_option("--family", fuzz_family, "table | quadratic | 2sep")
      ->check(CLI::IsMember({"table", "quadratic", "2sep"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      return run_classify(classify_spec, classify_box, classify_classes, classify_variants,
                          format, tolerance);
    }
    if (minimize->parsed()) {
      return run_minimize(minimize_spec, minimize_from, minimize_algo, minimize_trace, format,
                          tolerance);
    }
    if (verify->parsed()) {
      return run_verify(verify_spec, verify_property, verify_alpha, format, tolerance);
    }
    if (gallery->parsed()) return run_gallery_cmd(format, tolerance);
    if (fuzz->parsed()) return run_fuzz_cmd(fuzz_seed, fuzz_count, fuzz_family, format, tolerance);
  } catch (const ddmc::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
