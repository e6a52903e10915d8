#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parkfn/exact.hpp"
#include "parkfn/oracle.hpp"

// Named verification grids. Each manifest (suites/*.json, compiled in) lists
// a family, a parameter grid and the formulas to check at every grid point,
// either against the oracle or against another formula.

namespace parkfn::suites {

using Params = std::vector<std::pair<std::string, Natural>>;

enum class Variant { PF, IPF, PPF, IPPF };

Variant parse_variant(const std::string& name);
std::string to_string(Variant v);
Variant variant_of(bool prime, bool increasing);

/// Families: classical(n), vector(s,b,n), pq(p,q), affine(a,b,c,d,s,t,p,q).
oracle::FamilySpec build_family(const std::string& family, const Params& params, Variant v);

/// Formula names are listed by formula_names().
BigInt evaluate_formula(const std::string& name, const Params& params);
std::vector<std::string> formula_names();

/// The closed form matching a family and variant, e.g. ("pq", PPF) -> "pq_ppf".
std::string default_formula(const std::string& family, Variant v);

struct Row {
  Params params;
  std::string variant;
  std::string formula;
  std::string reference;  // "oracle" or a formula name
  std::optional<BigInt> expected;
  std::optional<BigInt> actual;
  std::string error;
  bool pass = false;
};

struct Result {
  std::string suite;
  int version = 0;
  std::vector<Row> rows;

  bool all_pass() const;
};

std::vector<std::string> suite_names();
const nlohmann::json& manifest(const std::string& name);

/// SearchSpaceTooLarge propagates; other per-row failures are recorded in
/// the row. on_row, if set, sees each row as it completes.
Result run_suite(const std::string& name, const oracle::Options& options = {},
                 const std::function<void(const Row&)>& on_row = {});

/// Runs an inline manifest with the same schema as the shipped ones.
Result run_manifest(const nlohmann::json& manifest, const oracle::Options& options = {},
                    const std::function<void(const Row&)>& on_row = {});

std::string format_params(const Params& params);

}  // namespace parkfn::suites
