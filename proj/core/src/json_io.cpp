#include "ddmc/json_io.hpp"

#include <json.hpp>

namespace ddmc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw SpecError(path + ": " + message);
}

const json& member(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) fail(path, "missing \"" + key + "\"");
  return j.at(key);
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (std::isnan(v)) fail(path, "NaN is not allowed");
  return v;
}

double finite_at(const json& j, const std::string& path) {
  const double v = number_at(j, path);
  if (!std::isfinite(v)) fail(path, "value must be finite");
  return v;
}

Coord integer_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<Coord>();
}

LatticePoint point_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty integer array");
  LatticePoint p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    p.push_back(integer_at(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return p;
}

std::vector<double> real_point_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty number array");
  std::vector<double> p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    p.push_back(finite_at(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return p;
}

Box box_at(const json& j, const std::string& path, int dim) {
  const LatticePoint lo = point_at(member(j, path, "lo"), path + ".lo");
  const LatticePoint hi = point_at(member(j, path, "hi"), path + ".hi");
  if (static_cast<int>(lo.size()) != dim || static_cast<int>(hi.size()) != dim) {
    fail(path, "box dimension does not match \"dim\"");
  }
  try {
    return Box(lo, hi);
  } catch (const ArgumentError& e) {
    fail(path, e.what());
  }
}

UnivariateConvex piece_at(const json& j, const std::string& path) {
  const std::string kind = member(j, path, "kind").get<std::string>();
  try {
    if (kind == "abs") {
      return UnivariateConvex::abs(integer_at(member(j, path, "center"), path + ".center"),
                                   j.contains("weight")
                                       ? finite_at(j.at("weight"), path + ".weight")
                                       : 1.0);
    }
    if (kind == "square") {
      return UnivariateConvex::square(integer_at(member(j, path, "center"), path + ".center"),
                                      j.contains("weight")
                                          ? finite_at(j.at("weight"), path + ".weight")
                                          : 1.0);
    }
    if (kind == "affine") {
      return UnivariateConvex::affine(finite_at(member(j, path, "slope"), path + ".slope"),
                                      j.contains("intercept")
                                          ? finite_at(j.at("intercept"), path + ".intercept")
                                          : 0.0);
    }
    if (kind == "quadratic") {
      return UnivariateConvex::quadratic(
          finite_at(member(j, path, "quad"), path + ".quad"),
          j.contains("lin") ? finite_at(j.at("lin"), path + ".lin") : 0.0,
          j.contains("constant") ? finite_at(j.at("constant"), path + ".constant") : 0.0);
    }
    if (kind == "affine_max") {
      const json& list = member(j, path, "pieces");
      if (!list.is_array() || list.empty()) fail(path + ".pieces", "expected a nonempty array");
      std::vector<std::pair<double, double>> pieces;
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string p = path + ".pieces[" + std::to_string(k) + "]";
        if (!list[k].is_array() || list[k].size() != 2) fail(p, "expected [slope, intercept]");
        pieces.emplace_back(finite_at(list[k][0], p + "[0]"), finite_at(list[k][1], p + "[1]"));
      }
      return UnivariateConvex::affine_max(std::move(pieces));
    }
    if (kind == "table") {
      const Coord lo = integer_at(member(j, path, "lo"), path + ".lo");
      const json& list = member(j, path, "values");
      if (!list.is_array() || list.empty()) fail(path + ".values", "expected a nonempty array");
      std::vector<double> values;
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string p = path + ".values[" + std::to_string(k) + "]";
        if (list[k].is_null()) {
          values.push_back(std::numeric_limits<double>::infinity());
        } else {
          values.push_back(finite_at(list[k], p));
        }
      }
      return UnivariateConvex::table(lo, std::move(values));
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown univariate kind \"" + kind + "\"");
}

ContinuousUnivariate continuous_piece_at(const json& j, const std::string& path) {
  const std::string kind = member(j, path, "kind").get<std::string>();
  try {
    if (kind == "abs") {
      return ContinuousUnivariate::abs(
          finite_at(member(j, path, "center"), path + ".center"),
          j.contains("weight") ? finite_at(j.at("weight"), path + ".weight") : 1.0);
    }
    if (kind == "square") {
      return ContinuousUnivariate::square(
          finite_at(member(j, path, "center"), path + ".center"),
          j.contains("weight") ? finite_at(j.at("weight"), path + ".weight") : 1.0);
    }
    if (kind == "affine") {
      return ContinuousUnivariate::affine(
          finite_at(member(j, path, "slope"), path + ".slope"),
          j.contains("intercept") ? finite_at(j.at("intercept"), path + ".intercept") : 0.0);
    }
    if (kind == "affine_max") {
      const json& list = member(j, path, "pieces");
      std::vector<std::pair<double, double>> pieces;
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string p = path + ".pieces[" + std::to_string(k) + "]";
        pieces.emplace_back(finite_at(list[k][0], p + "[0]"), finite_at(list[k][1], p + "[1]"));
      }
      return ContinuousUnivariate::affine_max(std::move(pieces));
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown continuous univariate kind \"" + kind + "\"");
}

QuadraticSpec quadratic_at(const json& j, const std::string& path, int dim) {
  const json& qj = member(j, path, "Q");
  if (!qj.is_array() || static_cast<int>(qj.size()) != dim) {
    fail(path + ".Q", "expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                          " matrix");
  }
  std::vector<std::vector<double>> q;
  for (std::size_t r = 0; r < qj.size(); ++r) {
    const std::string rp = path + ".Q[" + std::to_string(r) + "]";
    if (!qj[r].is_array() || static_cast<int>(qj[r].size()) != dim) {
      fail(rp, "expected a row of length " + std::to_string(dim));
    }
    std::vector<double> row;
    for (std::size_t c = 0; c < qj[r].size(); ++c) {
      row.push_back(finite_at(qj[r][c], rp + "[" + std::to_string(c) + "]"));
    }
    q.push_back(std::move(row));
  }
  std::vector<double> c;
  if (j.contains("c")) {
    c = real_point_at(j.at("c"), path + ".c");
    if (static_cast<int>(c.size()) != dim) fail(path + ".c", "wrong dimension");
  }
  try {
    return QuadraticSpec(q, std::move(c));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

LatticeFunction parse_lattice(const json& j) {
  const int dim = static_cast<int>(integer_at(member(j, "spec", "dim"), "spec.dim"));
  if (dim < 1) fail("spec.dim", "dimension must be >= 1");
  const std::string family = member(j, "spec", "family").get<std::string>();

  if (family == "table") {
    const Box box = box_at(member(j, "spec", "box"), "spec.box", dim);
    const bool sparse = j.value("sparse", false);
    const json& entries = member(j, "spec", "values");
    if (!entries.is_array()) fail("spec.values", "expected an array");
    std::vector<double> values(box.size(), std::numeric_limits<double>::infinity());
    std::vector<bool> listed(box.size(), false);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string p = "spec.values[" + std::to_string(k) + "]";
      const LatticePoint x = point_at(member(entries[k], p, "x"), p + ".x");
      if (static_cast<int>(x.size()) != dim) fail(p + ".x", "wrong dimension");
      if (!box.contains(x)) fail(p + ".x", "point outside the box");
      std::size_t offset = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        offset = offset * static_cast<std::size_t>(box.hi()[i] - box.lo()[i] + 1) +
                 static_cast<std::size_t>(x[i] - box.lo()[i]);
      }
      if (listed[offset]) fail(p + ".x", "point listed twice");
      listed[offset] = true;
      values[offset] = finite_at(member(entries[k], p, "v"), p + ".v");
    }
    if (!sparse) {
      for (std::size_t offset = 0; offset < listed.size(); ++offset) {
        if (!listed[offset]) {
          fail("spec.values", "non-sparse table leaves box points unlisted (set "
                              "\"sparse\": true for +inf holes)");
        }
      }
    }
    return make_table(box, std::move(values));
  }
  if (family == "quadratic") {
    const Box box = box_at(member(j, "spec", "box"), "spec.box", dim);
    return make_quadratic(quadratic_at(j, "spec", dim), box);
  }
  if (family == "indicator") {
    const json& pts = member(j, "spec", "points");
    if (!pts.is_array() || pts.empty()) fail("spec.points", "expected a nonempty array");
    std::vector<LatticePoint> points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::string p = "spec.points[" + std::to_string(k) + "]";
      LatticePoint x = point_at(pts[k], p);
      if (static_cast<int>(x.size()) != dim) fail(p, "wrong dimension");
      points.push_back(std::move(x));
    }
    std::optional<Box> universe;
    if (j.contains("box")) universe = box_at(j.at("box"), "spec.box", dim);
    return make_indicator(points, universe);
  }
  if (family == "separable") {
    const Box box = box_at(member(j, "spec", "box"), "spec.box", dim);
    const json& list = member(j, "spec", "pieces");
    if (!list.is_array() || static_cast<int>(list.size()) != dim) {
      fail("spec.pieces", "expected one piece per dimension");
    }
    std::vector<UnivariateConvex> pieces;
    for (std::size_t k = 0; k < list.size(); ++k) {
      pieces.push_back(piece_at(list[k], "spec.pieces[" + std::to_string(k) + "]"));
    }
    return make_separable(std::move(pieces), box);
  }
  if (family == "two_separable") {
    const Box box = box_at(member(j, "spec", "box"), "spec.box", dim);
    TwoSeparableSpec spec(dim);
    if (j.contains("xi")) {
      const json& list = j.at("xi");
      if (!list.is_array() || static_cast<int>(list.size()) != dim) {
        fail("spec.xi", "expected one entry (or null) per dimension");
      }
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (list[k].is_null()) continue;
        spec.set_xi(static_cast<int>(k), piece_at(list[k], "spec.xi[" + std::to_string(k) + "]"));
      }
    }
    const auto pair_list = [&](const char* key, auto&& setter) {
      if (!j.contains(key)) return;
      const json& list = j.at(key);
      if (!list.is_array()) fail(std::string("spec.") + key, "expected an array");
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string p = std::string("spec.") + key + "[" + std::to_string(k) + "]";
        const int i = static_cast<int>(integer_at(member(list[k], p, "i"), p + ".i"));
        const int jj = static_cast<int>(integer_at(member(list[k], p, "j"), p + ".j"));
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || i == jj) {
          fail(p, "invalid index pair (indices are 0-based and distinct)");
        }
        setter(i, jj, piece_at(member(list[k], p, "piece"), p + ".piece"));
      }
    };
    pair_list("phi", [&](int i, int jj, UnivariateConvex g) { spec.set_phi(i, jj, std::move(g)); });
    pair_list("psi", [&](int i, int jj, UnivariateConvex g) { spec.set_psi(i, jj, std::move(g)); });
    return make_two_separable(std::move(spec), box);
  }
  fail("spec.family", "unknown family \"" + family + "\"");
}

ContinuousFunction parse_continuous(const json& j) {
  const int dim = static_cast<int>(integer_at(member(j, "spec", "dim"), "spec.dim"));
  if (dim < 1) fail("spec.dim", "dimension must be >= 1");
  const std::string family = member(j, "spec", "family").get<std::string>();
  if (family == "simplex_hull") return ContinuousFunction::simplex_hull_indicator(dim);

  const json& uj = member(j, "spec", "universe");
  RealBox universe{real_point_at(member(uj, "spec.universe", "lo"), "spec.universe.lo"),
                   real_point_at(member(uj, "spec.universe", "hi"), "spec.universe.hi")};
  if (universe.dim() != dim || static_cast<int>(universe.hi.size()) != dim) {
    fail("spec.universe", "dimension mismatch");
  }
  for (int i = 0; i < dim; ++i) {
    if (universe.lo[static_cast<std::size_t>(i)] > universe.hi[static_cast<std::size_t>(i)]) {
      fail("spec.universe", "lo > hi in coordinate " + std::to_string(i));
    }
  }

  if (family == "quadratic") {
    return ContinuousFunction::quadratic(quadratic_at(j, "spec", dim), std::move(universe));
  }
  if (family == "two_separable") {
    ContinuousTwoSeparable spec;
    spec.n = dim;
    if (j.contains("xi")) {
      const json& list = j.at("xi");
      if (!list.is_array() || static_cast<int>(list.size()) != dim) {
        fail("spec.xi", "expected one entry (or null) per dimension");
      }
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (list[k].is_null()) continue;
        spec.xi.emplace(static_cast<int>(k),
                        continuous_piece_at(list[k], "spec.xi[" + std::to_string(k) + "]"));
      }
    }
    const auto pair_list = [&](const char* key,
                               std::map<std::pair<int, int>, ContinuousUnivariate>& target) {
      if (!j.contains(key)) return;
      const json& list = j.at(key);
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string p = std::string("spec.") + key + "[" + std::to_string(k) + "]";
        const int i = static_cast<int>(integer_at(member(list[k], p, "i"), p + ".i"));
        const int jj = static_cast<int>(integer_at(member(list[k], p, "j"), p + ".j"));
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || i == jj) fail(p, "invalid index pair");
        target.emplace(std::make_pair(i, jj),
                       continuous_piece_at(member(list[k], p, "piece"), p + ".piece"));
      }
    };
    pair_list("phi", spec.phi);
    pair_list("psi", spec.psi);
    return ContinuousFunction::two_separable(std::move(spec), std::move(universe));
  }
  fail("spec.family", "unknown continuous family \"" + family + "\"");
}

json point_json(const LatticePoint& x) {
  json a = json::array();
  for (Coord c : x) a.push_back(c);
  return a;
}

json verdict_json(const std::string& label, const Verdict& v) {
  json j;
  j["class"] = label;
  j["holds"] = v.holds;
  if (v.witness) {
    j["witness"] = {{"x", point_json(v.witness->x)}, {"y", point_json(v.witness->y)}};
  } else {
    j["witness"] = nullptr;
  }
  j["pairs_checked"] = v.pairs_checked;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

}  // namespace

ParsedFunction parse_function_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("spec: expected a JSON object");
  if (j.value("continuous", false)) return parse_continuous(j);
  return parse_lattice(j);
}

std::string render_verdict(const std::string& label, const Verdict& verdict) {
  return verdict_json(label, verdict).dump(2);
}

std::string render_classification(const ClassificationReport& report,
                                  const std::vector<std::pair<int, Verdict>>& variants) {
  json j;
  j["box"] = {{"lo", point_json(report.box.lo())}, {"hi", point_json(report.box.hi())}};
  json classes = json::array();
  for (const auto& [c, v] : report.verdicts) {
    classes.push_back(verdict_json(class_token(c), v));
  }
  j["classes"] = std::move(classes);
  if (!variants.empty()) {
    json list = json::array();
    for (const auto& [variant, v] : variants) {
      list.push_back(verdict_json("ddm-characterization-" + std::to_string(variant), v));
    }
    j["char_variants"] = std::move(list);
  }
  return j.dump(2);
}

std::string render_descent(const DescentTrace& trace) {
  json j;
  j["algo"] = "descent";
  json path = json::array();
  for (const auto& x : trace.path) path.push_back(point_json(x));
  j["path"] = std::move(path);
  j["values"] = trace.values;
  j["oracle_calls"] = trace.oracle_calls;
  j["function_evals"] = trace.function_evals;
  j["minimizer"] = point_json(trace.minimizer);
  if (trace.distance_to_argmin) {
    j["distance_to_argmin"] = *trace.distance_to_argmin;
  } else {
    j["distance_to_argmin"] = nullptr;
  }
  return j.dump(2);
}

std::string render_scaling(const ScalingTrace& trace) {
  json j;
  j["algo"] = "scaling";
  j["k_inf"] = trace.k_inf;
  json phases = json::array();
  for (const auto& phase : trace.phases) {
    phases.push_back({{"alpha", phase.alpha},
                      {"point", point_json(phase.point)},
                      {"oracle_calls", phase.oracle_calls}});
  }
  j["phases"] = std::move(phases);
  j["total_oracle_calls"] = trace.total_oracle_calls;
  j["function_evals"] = trace.function_evals;
  j["minimizer"] = point_json(trace.minimizer);
  return j.dump(2);
}

std::string render_gallery(const GalleryReport& report) {
  json j;
  json fixtures = json::array();
  for (const auto& fixture : report.fixtures) {
    fixtures.push_back({{"name", fixture.name},
                        {"claim", fixture.claim},
                        {"expected", fixture.expected},
                        {"observed", fixture.observed},
                        {"pass", fixture.pass}});
  }
  j["fixtures"] = std::move(fixtures);
  j["all_pass"] = report.all_pass;
  return j.dump(2);
}

}  // namespace ddmc
