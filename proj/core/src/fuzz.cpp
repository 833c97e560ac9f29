#include "ddmc/fuzz.hpp"

#include <json.hpp>

#include "ddmc/generators.hpp"
#include "ddmc/json_io.hpp"

namespace ddmc {

using nlohmann::json;

namespace {

json random_piece_json(Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return {{"kind", "abs"},
              {"center", rng.range(-2, 2)},
              {"weight", static_cast<double>(rng.range(1, 8)) / 4.0}};
    case 1:
      return {{"kind", "square"},
              {"center", rng.range(-2, 2)},
              {"weight", static_cast<double>(rng.range(1, 8)) / 4.0}};
    case 2: {
      json pieces = json::array();
      const int count = static_cast<int>(rng.range(2, 3));
      for (int k = 0; k < count; ++k) {
        pieces.push_back({rng.range(-3, 3), rng.range(-3, 3)});
      }
      return {{"kind", "affine_max"}, {"pieces", std::move(pieces)}};
    }
    default: {
      const Coord lo = rng.range(-3, 0);
      const int len = static_cast<int>(rng.range(4, 7));
      double value = static_cast<double>(rng.range(0, 5));
      double slope = static_cast<double>(rng.range(-3, 1));
      json values = json::array();
      values.push_back(value);
      for (int k = 1; k < len; ++k) {
        value += slope;
        values.push_back(value);
        slope += static_cast<double>(rng.range(0, 2));
      }
      return {{"kind", "table"}, {"lo", lo}, {"values", std::move(values)}};
    }
  }
}

json random_table_spec(Rng& rng) {
  const int dim = static_cast<int>(rng.range(1, 3));
  json lo = json::array(), hi = json::array();
  std::vector<Coord> lo_v, hi_v;
  std::uint64_t cells = 1;
  for (int i = 0; i < dim; ++i) {
    lo.push_back(0);
    lo_v.push_back(0);
    const Coord side = rng.range(1, 3);
    hi.push_back(side);
    hi_v.push_back(side);
    cells *= static_cast<std::uint64_t>(side + 1);
  }
  json values = json::array();
  LatticePoint x(lo_v.begin(), lo_v.end());
  const Box box(LatticePoint(lo_v.begin(), lo_v.end()), LatticePoint(hi_v.begin(), hi_v.end()));
  do {
    if (rng.chance(0.2)) continue;  // +inf hole
    json coords = json::array();
    for (Coord c : x) coords.push_back(c);
    values.push_back(
        {{"x", std::move(coords)}, {"v", static_cast<double>(rng.range(0, 9))}});
  } while (box.next(x));
  return {{"dim", dim},
          {"family", "table"},
          {"box", {{"lo", std::move(lo)}, {"hi", std::move(hi)}}},
          {"sparse", true},
          {"values", std::move(values)}};
}

json random_quadratic_spec(Rng& rng) {
  const int dim = static_cast<int>(rng.range(2, 3));
  const QuadraticSpec spec = random_symmetric_quadratic(rng, dim);
  json q = json::array();
  for (int i = 0; i < dim; ++i) {
    json row = json::array();
    for (int jj = 0; jj < dim; ++jj) row.push_back(spec.q(i, jj));
    q.push_back(std::move(row));
  }
  json lo = json::array(), hi = json::array();
  for (int i = 0; i < dim; ++i) {
    lo.push_back(-3);
    hi.push_back(3);
  }
  return {{"dim", dim},
          {"family", "quadratic"},
          {"Q", std::move(q)},
          {"box", {{"lo", std::move(lo)}, {"hi", std::move(hi)}}}};
}

json random_two_separable_spec(Rng& rng) {
  const int dim = static_cast<int>(rng.range(2, 3));
  json xi = json::array();
  for (int i = 0; i < dim; ++i) {
    if (rng.chance(0.85)) {
      xi.push_back(random_piece_json(rng));
    } else {
      xi.push_back(nullptr);
    }
  }
  json phi = json::array(), psi = json::array();
  for (int i = 0; i < dim; ++i) {
    for (int jj = 0; jj < dim; ++jj) {
      if (i == jj) continue;
      if (rng.chance(0.35)) {
        phi.push_back({{"i", i}, {"j", jj}, {"piece", random_piece_json(rng)}});
      }
      if (rng.chance(0.35)) {
        psi.push_back({{"i", i}, {"j", jj}, {"piece", random_piece_json(rng)}});
      }
    }
  }
  json lo = json::array(), hi = json::array();
  for (int i = 0; i < dim; ++i) {
    lo.push_back(-2);
    hi.push_back(2);
  }
  return {{"dim", dim},
          {"family", "two_separable"},
          {"box", {{"lo", std::move(lo)}, {"hi", std::move(hi)}}},
          {"xi", std::move(xi)},
          {"phi", std::move(phi)},
          {"psi", std::move(psi)}};
}

bool implies(const std::map<ConvexityClass, Verdict>& v, ConvexityClass a, ConvexityClass b) {
  return !v.at(a).holds || v.at(b).holds;
}

}  // namespace

FuzzOutcome run_fuzz(std::uint64_t seed, int count, const std::string& family,
                     const CheckOptions& opts) {
  if (count < 1) throw ArgumentError("fuzz: count must be >= 1");
  if (family != "table" && family != "quadratic" && family != "2sep") {
    throw ArgumentError("fuzz: family must be one of table, quadratic, 2sep");
  }
  Rng rng(seed);
  FuzzOutcome outcome;
  outcome.instances = count;

  json report;
  report["seed"] = seed;
  report["count"] = count;
  report["family"] = family;
  json instances = json::array();

  for (int index = 0; index < count; ++index) {
    json spec = family == "table"       ? random_table_spec(rng)
                : family == "quadratic" ? random_quadratic_spec(rng)
                                        : random_two_separable_spec(rng);
    const ParsedFunction parsed = parse_function_spec(spec.dump());
    const LatticeFunction& f = std::get<LatticeFunction>(parsed);
    const Box& box = f.universe();

    const ClassificationReport classes = classify_all(f, box, default_classes(), opts);

    bool variants_agree = true;
    json variants = json::array();
    const bool first = check_ddm_characterization(f, box, 1, opts).holds;
    for (int variant = 1; variant <= 5; ++variant) {
      const Verdict v = check_ddm_characterization(f, box, variant, opts);
      if (v.holds != first) variants_agree = false;
      json vj;
      vj["variant"] = variant;
      vj["holds"] = v.holds;
      variants.push_back(std::move(vj));
    }

    const auto& verdicts = classes.verdicts;
    const bool lnat = verdicts.at(ConvexityClass::LNat).holds;
    const bool ic = verdicts.at(ConvexityClass::IntegrallyConvex).holds;
    const bool submodular = verdicts.at(ConvexityClass::Submodular).holds;
    const bool hierarchy_ok =
        implies(verdicts, ConvexityClass::LNat, ConvexityClass::GlobalDmc) &&
        implies(verdicts, ConvexityClass::GlobalDmc, ConvexityClass::LocalDmc) &&
        implies(verdicts, ConvexityClass::LocalDmc, ConvexityClass::IntegrallyConvex) &&
        implies(verdicts, ConvexityClass::LNat, ConvexityClass::Ddm) &&
        implies(verdicts, ConvexityClass::Ddm, ConvexityClass::IntegrallyConvex) &&
        ((ic && submodular) == lnat);

    const bool consistent = variants_agree && hierarchy_ok;
    if (!consistent) outcome.all_consistent = false;

    json instance;
    instance["index"] = index;
    instance["spec"] = std::move(spec);
    instance["report"] = json::parse(render_classification(classes));
    instance["variants"] = std::move(variants);
    instance["variants_agree"] = variants_agree;
    instance["hierarchy_ok"] = hierarchy_ok;
    instance["consistent"] = consistent;
    instances.push_back(std::move(instance));
  }
  report["instances"] = std::move(instances);
  report["all_consistent"] = outcome.all_consistent;
  outcome.report_json = report.dump(2);
  return outcome;
}

}  // namespace ddmc
