#include "adiaslope/problem.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "adiaslope/errors.hpp"

namespace adiaslope {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

const json& require_field(const json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    schema_error(path + "." + key, "missing required field");
  }
  return *it;
}

void reject_unknown_fields(const json& obj, const std::string& path,
                           const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      schema_error(path + "." + key, "unknown field");
    }
  }
}

const json& expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    schema_error(path, "expected an object");
  }
  return j;
}

const json& expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) {
    schema_error(path, "expected an array");
  }
  return j;
}

Rational parse_rational_field(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(path, e.what());
    }
  }
  schema_error(path, "expected an integer or a \"p/q\" string");
}

int parse_int_field(const json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    schema_error(path, "expected an integer");
  }
  return j.get<int>();
}

DivisorCombination parse_combination(const json& j, const std::string& path) {
  expect_object(j, path);
  DivisorCombination out;
  for (const auto& [key, value] : j.items()) {
    out[key] = parse_rational_field(value, path + "." + key);
  }
  return out;
}

void validate_combination_names(const DivisorCombination& combo,
                                const std::vector<std::string>& divisors,
                                const std::string& path) {
  for (const auto& [name, coeff] : combo) {
    if (std::find(divisors.begin(), divisors.end(), name) == divisors.end()) {
      throw SemanticError(path + ": undeclared divisor name: '" + name + "'");
    }
  }
}

struct BundleFields {
  int rank;
  DivisorCombination c1;
  Rational c2;
};

BundleFields parse_bundle(const json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown_fields(j, path, {"rank", "c1", "c2"});
  BundleFields out;
  out.rank = parse_int_field(require_field(j, path, "rank"), path + ".rank");
  out.c1 = parse_combination(require_field(j, path, "c1"), path + ".c1");
  out.c2 = j.contains("c2") ? parse_rational_field(j.at("c2"), path + ".c2") : Rational(0);
  if (out.rank < 1) {
    throw SemanticError(path + ".rank: rank must be positive");
  }
  if (out.rank == 1 && out.c2 != 0) {
    throw SemanticError(path + ".c2: a line bundle has no second Chern class");
  }
  return out;
}

json combination_to_json(const DivisorCombination& combo) {
  json out = json::object();
  for (const auto& [name, coeff] : combo) {
    out[name] = format_rational(coeff);
  }
  return out;
}

json rational_matrix_to_json(const std::vector<std::vector<Rational>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) {
      r.push_back(format_rational(x));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

json kpolynomial_to_json(const KPolynomial& poly) {
  json out = json::object();
  for (const auto& [power, coeff] : poly.coefficients()) {
    out[std::to_string(power)] = format_rational(coeff);
  }
  return out;
}

json rational_list_to_json(const std::vector<Rational>& values, std::optional<int> max_order) {
  json out = json::array();
  const size_t cap = max_order ? std::min<size_t>(values.size(), *max_order + 1) : values.size();
  for (size_t i = 0; i < cap; ++i) {
    out.push_back(format_rational(values[i]));
  }
  return out;
}

json crosscheck_to_json(const CrosscheckReport& report) {
  json entries = json::array();
  for (const auto& entry : report.entries) {
    json e = json::object();
    e["name"] = entry.name;
    if (entry.engine) {
      e["engine"] = format_rational(*entry.engine);
    }
    if (entry.closed_form) {
      e["closed_form"] = format_rational(*entry.closed_form);
      e["equal"] = entry.equal;
    }
    if (!entry.note.empty()) {
      e["note"] = entry.note;
    }
    entries.push_back(std::move(e));
  }
  json out;
  out["entries"] = std::move(entries);
  if (report.cancellation) {
    out["cancellation"] = {{"value", format_rational(*report.cancellation)},
                           {"ok", report.cancellation_ok}};
  }
  out["all_match"] = report.all_match();
  return out;
}

json slopes_to_json(const SlopeSet& slopes) {
  return {{"L", {{"sub", format_rational(slopes.sub_L)}, {"total", format_rational(slopes.total_L)}}},
          {"c1B",
           {{"sub", format_rational(slopes.sub_c1B)}, {"total", format_rational(slopes.total_c1B)}}}};
}

/// chi (and h1 under the vanishing assertion) of Hom(quot, sub), the bundle
/// whose first cohomology parametrizes the extensions being tested. Only the
/// rank-1 quotient case is supported.
json extensions_to_json(const ProblemSpec& spec, const TestConfigInput& input) {
  json out = json::object();
  if (input.q() != 1) {
    out["note"] = "quotient rank > 1: extension bundle not computed";
    return out;
  }
  const BundleData hom = tensor_by_line(input.sub(), -input.quot().c1());
  const Rational chi = euler_characteristic_surface(hom, input.base_c1(), spec.c1sq_plus_c2);
  out["chi"] = format_rational(chi);
  if (spec.options.assume_vanishing_h0_h2) {
    out["h1"] = format_rational(-chi);
    out["assumes_vanishing"] = true;
  }
  return out;
}

}  // namespace

IntersectionRing::Ptr ProblemSpec::make_ring() const {
  return IntersectionRing::surface(divisors, intersection);
}

TestConfigInput ProblemSpec::make_input(const SubbundlePair& pair) const {
  return make_input(make_ring(), pair);
}

TestConfigInput ProblemSpec::make_input(const IntersectionRing::Ptr& ring,
                                        const SubbundlePair& pair) const {
  const GradedClass L = ring->divisor(polarization);
  const GradedClass c1B = ring->divisor(c1);
  auto bundle = [&](int rank, const DivisorCombination& bc1, const Rational& bc2) {
    GradedClass total = ring->one() + ring->divisor(bc1);
    if (rank >= 2) {
      total += bc2 * ring->point();
    }
    return BundleData(rank, total);
  };
  return TestConfigInput(L, c1B, bundle(pair.sub_rank, pair.sub_c1, pair.sub_c2),
                         bundle(pair.quot_rank, pair.quot_c1, pair.quot_c2));
}

ProblemSpec parse_problem(const nlohmann::json& document) {
  expect_object(document, "$");
  reject_unknown_fields(document, "$", {"base", "polarization", "subbundles", "options"});

  ProblemSpec spec;

  const json& base = expect_object(require_field(document, "$", "base"), "$.base");
  reject_unknown_fields(base, "$.base", {"dim", "divisors", "intersection", "c1", "c1sq_plus_c2"});
  spec.dim = parse_int_field(require_field(base, "$.base", "dim"), "$.base.dim");
  if (spec.dim != 2) {
    throw SemanticError("$.base.dim: only dimension-2 bases are supported");
  }
  const json& divisors = expect_array(require_field(base, "$.base", "divisors"), "$.base.divisors");
  for (size_t i = 0; i < divisors.size(); ++i) {
    if (!divisors[i].is_string()) {
      schema_error("$.base.divisors[" + std::to_string(i) + "]", "expected a string");
    }
    spec.divisors.push_back(divisors[i].get<std::string>());
  }
  const json& matrix =
      expect_array(require_field(base, "$.base", "intersection"), "$.base.intersection");
  for (size_t i = 0; i < matrix.size(); ++i) {
    const std::string row_path = "$.base.intersection[" + std::to_string(i) + "]";
    const json& row = expect_array(matrix[i], row_path);
    std::vector<Rational> parsed;
    for (size_t j = 0; j < row.size(); ++j) {
      parsed.push_back(parse_rational_field(row[j], row_path + "[" + std::to_string(j) + "]"));
    }
    spec.intersection.push_back(std::move(parsed));
  }
  if (spec.intersection.size() != spec.divisors.size()) {
    throw SemanticError("$.base.intersection: matrix size does not match divisor count");
  }
  for (size_t i = 0; i < spec.intersection.size(); ++i) {
    if (spec.intersection[i].size() != spec.divisors.size()) {
      throw SemanticError("$.base.intersection: matrix is not square");
    }
    for (size_t j = 0; j < i; ++j) {
      if (spec.intersection[i][j] != spec.intersection[j][i]) {
        throw SemanticError("$.base.intersection: matrix is not symmetric");
      }
    }
  }
  spec.c1 = parse_combination(require_field(base, "$.base", "c1"), "$.base.c1");
  spec.c1sq_plus_c2 =
      parse_rational_field(require_field(base, "$.base", "c1sq_plus_c2"), "$.base.c1sq_plus_c2");

  spec.polarization =
      parse_combination(require_field(document, "$", "polarization"), "$.polarization");

  const json& subs =
      expect_array(require_field(document, "$", "subbundles"), "$.subbundles");
  std::set<std::string> names;
  for (size_t i = 0; i < subs.size(); ++i) {
    const std::string path = "$.subbundles[" + std::to_string(i) + "]";
    const json& entry = expect_object(subs[i], path);
    reject_unknown_fields(entry, path, {"name", "sub", "quot"});
    SubbundlePair pair;
    const json& name = require_field(entry, path, "name");
    if (!name.is_string()) {
      schema_error(path + ".name", "expected a string");
    }
    pair.name = name.get<std::string>();
    if (!names.insert(pair.name).second) {
      throw SemanticError(path + ".name: duplicate subbundle name '" + pair.name + "'");
    }
    const BundleFields sub = parse_bundle(require_field(entry, path, "sub"), path + ".sub");
    const BundleFields quot = parse_bundle(require_field(entry, path, "quot"), path + ".quot");
    pair.sub_rank = sub.rank;
    pair.sub_c1 = sub.c1;
    pair.sub_c2 = sub.c2;
    pair.quot_rank = quot.rank;
    pair.quot_c1 = quot.c1;
    pair.quot_c2 = quot.c2;
    spec.subbundles.push_back(std::move(pair));
  }

  if (document.contains("options")) {
    const json& options = expect_object(document.at("options"), "$.options");
    reject_unknown_fields(options, "$.options",
                          {"max_order", "crosscheck", "assume_vanishing_h0_h2"});
    if (options.contains("max_order")) {
      const json& mo = options.at("max_order");
      if (mo.is_string() && mo.get<std::string>() == "all") {
        spec.options.max_order.reset();
      } else if (mo.is_number_integer() && mo.get<int>() >= 0) {
        spec.options.max_order = mo.get<int>();
      } else {
        schema_error("$.options.max_order", "expected a non-negative integer or \"all\"");
      }
    }
    for (const char* flag : {"crosscheck", "assume_vanishing_h0_h2"}) {
      if (options.contains(flag)) {
        if (!options.at(flag).is_boolean()) {
          schema_error(std::string("$.options.") + flag, "expected a boolean");
        }
        (std::string(flag) == "crosscheck" ? spec.options.crosscheck
                                           : spec.options.assume_vanishing_h0_h2) =
            options.at(flag).get<bool>();
      }
    }
  }

  // Semantic validation that does not need the full engine.
  validate_combination_names(spec.c1, spec.divisors, "$.base.c1");
  validate_combination_names(spec.polarization, spec.divisors, "$.polarization");
  for (size_t i = 0; i < spec.subbundles.size(); ++i) {
    const std::string path = "$.subbundles[" + std::to_string(i) + "]";
    validate_combination_names(spec.subbundles[i].sub_c1, spec.divisors, path + ".sub.c1");
    validate_combination_names(spec.subbundles[i].quot_c1, spec.divisors, path + ".quot.c1");
  }
  const auto ring = spec.make_ring();
  const GradedClass L = ring->divisor(spec.polarization);
  if (integrate(L * L) <= 0) {
    throw SemanticError("$.polarization: not ample on the lattice (L^2 <= 0)");
  }
  return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("document is not valid JSON: ") + e.what());
  }
  return parse_problem(document);
}

nlohmann::json serialize_problem(const ProblemSpec& spec) {
  json document;
  document["base"] = {{"dim", spec.dim},
                      {"divisors", spec.divisors},
                      {"intersection", rational_matrix_to_json(spec.intersection)},
                      {"c1", combination_to_json(spec.c1)},
                      {"c1sq_plus_c2", format_rational(spec.c1sq_plus_c2)}};
  document["polarization"] = combination_to_json(spec.polarization);
  json subs = json::array();
  for (const auto& pair : spec.subbundles) {
    subs.push_back({{"name", pair.name},
                    {"sub",
                     {{"rank", pair.sub_rank},
                      {"c1", combination_to_json(pair.sub_c1)},
                      {"c2", format_rational(pair.sub_c2)}}},
                    {"quot",
                     {{"rank", pair.quot_rank},
                      {"c1", combination_to_json(pair.quot_c1)},
                      {"c2", format_rational(pair.quot_c2)}}}});
  }
  document["subbundles"] = std::move(subs);
  json options;
  options["max_order"] = spec.options.max_order ? json(*spec.options.max_order) : json("all");
  options["crosscheck"] = spec.options.crosscheck;
  options["assume_vanishing_h0_h2"] = spec.options.assume_vanishing_h0_h2;
  document["options"] = std::move(options);
  return document;
}

nlohmann::json run_df(const ProblemSpec& spec) {
  const auto ring = spec.make_ring();
  json out;
  out["command"] = "df";
  out["volume"] = format_rational(integrate(ring->divisor(spec.polarization).pow(2)));
  json subs = json::array();
  bool all_stable = true;
  for (const auto& pair : spec.subbundles) {
    const TestConfigInput input = spec.make_input(ring, pair);
    const DFReport report = df_report(input);
    json entry;
    entry["name"] = pair.name;
    entry["ranks"] = {{"sub", input.sub().rank()},
                      {"quot", input.quot().rank()},
                      {"total", input.total().rank()}};
    entry["slopes"] = slopes_to_json(report.slopes);
    entry["fut_poly"] = kpolynomial_to_json(report.fut_poly);
    entry["a"] = rational_list_to_json(report.a, spec.options.max_order);
    entry["a_normalized"] = rational_list_to_json(report.normalized, spec.options.max_order);
    entry["a_scaled"] = rational_list_to_json(report.scaled, spec.options.max_order);
    entry["leading_index"] =
        report.leading_index ? json(*report.leading_index) : json(nullptr);
    entry["verdict"] = to_string(report.verdict);
    entry["extensions"] = extensions_to_json(spec, input);
    if (spec.options.crosscheck) {
      entry["crosscheck"] = crosscheck_to_json(crosscheck(input));
    }
    all_stable = all_stable && report.verdict == Verdict::stable_wrt_subbundle;
    subs.push_back(std::move(entry));
  }
  out["subbundles"] = std::move(subs);
  out["stable_wrt_supplied_list"] = all_stable;
  return out;
}

nlohmann::json run_chi(const ProblemSpec& spec) {
  const auto ring = spec.make_ring();
  json out;
  out["command"] = "chi";
  out["chi_structure_sheaf"] = format_rational(spec.c1sq_plus_c2 / 12);
  json subs = json::array();
  for (const auto& pair : spec.subbundles) {
    const TestConfigInput input = spec.make_input(ring, pair);
    json entry;
    entry["name"] = pair.name;
    entry["extensions"] = extensions_to_json(spec, input);
    subs.push_back(std::move(entry));
  }
  out["subbundles"] = std::move(subs);
  return out;
}

nlohmann::json run_slope(const ProblemSpec& spec) {
  const auto ring = spec.make_ring();
  json out;
  out["command"] = "slope";
  json subs = json::array();
  for (const auto& pair : spec.subbundles) {
    const TestConfigInput input = spec.make_input(ring, pair);
    json entry;
    entry["name"] = pair.name;
    entry["slopes"] = {
        {"L",
         {{"sub", format_rational(slope(input.sub(), input.polarization()))},
          {"quot", format_rational(slope(input.quot(), input.polarization()))},
          {"total", format_rational(slope(input.total(), input.polarization()))}}},
        {"c1B",
         {{"sub", format_rational(slope(input.sub(), input.base_c1()))},
          {"quot", format_rational(slope(input.quot(), input.base_c1()))},
          {"total", format_rational(slope(input.total(), input.base_c1()))}}}};
    subs.push_back(std::move(entry));
  }
  out["subbundles"] = std::move(subs);
  return out;
}

nlohmann::json run_crosscheck(const ProblemSpec& spec) {
  const auto ring = spec.make_ring();
  json out;
  out["command"] = "crosscheck";
  json subs = json::array();
  bool all_match = true;
  for (const auto& pair : spec.subbundles) {
    const TestConfigInput input = spec.make_input(ring, pair);
    const CrosscheckReport report = crosscheck(input);
    all_match = all_match && report.all_match();
    subs.push_back({{"name", pair.name}, {"crosscheck", crosscheck_to_json(report)}});
  }
  out["subbundles"] = std::move(subs);
  out["all_match"] = all_match;
  return out;
}

bool report_has_crosscheck_mismatch(const nlohmann::json& report) {
  if (report.contains("all_match")) {
    return !report.at("all_match").get<bool>();
  }
  if (report.contains("subbundles")) {
    for (const auto& entry : report.at("subbundles")) {
      if (entry.contains("crosscheck") && !entry.at("crosscheck").at("all_match").get<bool>()) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace adiaslope
