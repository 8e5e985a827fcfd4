#ifndef ADIASLOPE_PROBLEM_HPP
#define ADIASLOPE_PROBLEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "adiaslope/df.hpp"

namespace adiaslope {

using DivisorCombination = std::map<std::string, Rational>;

struct SubbundlePair {
  std::string name;
  int sub_rank = 0;
  DivisorCombination sub_c1;
  Rational sub_c2;
  int quot_rank = 0;
  DivisorCombination quot_c1;
  Rational quot_c2;
};

struct ProblemOptions {
  std::optional<int> max_order;  // empty means "all"
  bool crosscheck = false;
  bool assume_vanishing_h0_h2 = false;
};

/// Declarative problem description: a surface lattice, an anticanonical class,
/// the characteristic number int(c1^2 + c2), a polarization and a list of
/// subbundle/quotient pairs to test.
struct ProblemSpec {
  int dim = 2;
  std::vector<std::string> divisors;
  std::vector<std::vector<Rational>> intersection;
  DivisorCombination c1;
  Rational c1sq_plus_c2;
  DivisorCombination polarization;
  std::vector<SubbundlePair> subbundles;
  ProblemOptions options;

  IntersectionRing::Ptr make_ring() const;
  TestConfigInput make_input(const SubbundlePair& pair) const;
  TestConfigInput make_input(const IntersectionRing::Ptr& ring, const SubbundlePair& pair) const;
};

/// Validates and extracts a ProblemSpec. Throws SchemaError (unknown field,
/// wrong type, with the offending field path) or SemanticError (undeclared
/// divisor, asymmetric matrix, non-ample polarization, bad ranks).
ProblemSpec parse_problem(const nlohmann::json& document);
ProblemSpec parse_problem_text(const std::string& text);

nlohmann::json serialize_problem(const ProblemSpec& spec);

/// Batch runs. Each returns the machine-readable report document; rationals
/// are rendered exactly as "p/q" strings.
nlohmann::json run_df(const ProblemSpec& spec);
nlohmann::json run_chi(const ProblemSpec& spec);
nlohmann::json run_slope(const ProblemSpec& spec);
nlohmann::json run_crosscheck(const ProblemSpec& spec);

/// True when the given report (from run_df with crosscheck enabled or
/// run_crosscheck) contains a crosscheck mismatch.
bool report_has_crosscheck_mismatch(const nlohmann::json& report);

}  // namespace adiaslope

#endif
