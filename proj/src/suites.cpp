#include "parkfn/suites.hpp"

#include <algorithm>
#include <map>
#include <string_view>

#include "parkfn/error.hpp"
#include "parkfn/pq.hpp"
#include "parkfn/twodim.hpp"
#include "parkfn/vector.hpp"

namespace parkfn::suites {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_manifests();
}

namespace {

using Json = nlohmann::json;

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::InvalidArgument, why); }

Natural param(const Params& params, const char* key) {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  bad(std::string("missing parameter \"") + key + "\"");
}

AffineWeightSpec affine_spec(const Params& params) {
  AffineWeightSpec s;
  s.a = param(params, "a");
  s.b = param(params, "b");
  s.c = param(params, "c");
  s.d = param(params, "d");
  s.s = param(params, "s");
  s.t = param(params, "t");
  s.p = param(params, "p");
  s.q = param(params, "q");
  return s;
}

using Formula = BigInt (*)(const Params&);

const std::map<std::string, Formula>& formulas() {
  static const std::map<std::string, Formula> table = {
      {"classical_pf", [](const Params& x) { return count_pf_arith(1, 1, param(x, "n")); }},
      {"classical_ipf", [](const Params& x) { return count_ipf_arith(1, 1, param(x, "n")); }},
      {"classical_ppf", [](const Params& x) { return count_ppf_arith(1, 1, param(x, "n")); }},
      {"classical_ippf", [](const Params& x) { return count_ippf_arith(1, 1, param(x, "n")); }},
      {"arith_pf",
       [](const Params& x) { return count_pf_arith(param(x, "s"), param(x, "b"), param(x, "n")); }},
      {"arith_ipf",
       [](const Params& x) { return count_ipf_arith(param(x, "s"), param(x, "b"), param(x, "n")); }},
      {"arith_ppf",
       [](const Params& x) { return count_ppf_arith(param(x, "s"), param(x, "b"), param(x, "n")); }},
      {"arith_ippf",
       [](const Params& x) { return count_ippf_arith(param(x, "s"), param(x, "b"), param(x, "n")); }},
      {"pq_pf", [](const Params& x) { return count_pq_pf(param(x, "p"), param(x, "q")); }},
      {"pq_ipf", [](const Params& x) { return count_pq_ipf(param(x, "p"), param(x, "q")); }},
      {"pq_ppf", [](const Params& x) { return count_pq_ppf(param(x, "p"), param(x, "q")); }},
      {"pq_ippf", [](const Params& x) { return count_pq_ippf(param(x, "p"), param(x, "q")); }},
      {"pq_ppf_sum", [](const Params& x) { return count_pq_ppf_sum(param(x, "p"), param(x, "q")); }},
      {"affine_pf", [](const Params& x) { return count_affine_pf(affine_spec(x)); }},
      {"affine_ipf", [](const Params& x) { return count_affine_ipf(affine_spec(x)); }},
      {"affine_ppf", [](const Params& x) { return count_affine_ppf(affine_spec(x)); }},
      {"affine_ippf", [](const Params& x) { return count_affine_ippf(affine_spec(x)); }},
  };
  return table;
}

}  // namespace

Variant parse_variant(const std::string& name) {
  if (name == "pf") return Variant::PF;
  if (name == "ipf") return Variant::IPF;
  if (name == "ppf") return Variant::PPF;
  if (name == "ippf") return Variant::IPPF;
  bad("unknown variant \"" + name + "\" (expected pf, ipf, ppf or ippf)");
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::PF: return "pf";
    case Variant::IPF: return "ipf";
    case Variant::PPF: return "ppf";
    case Variant::IPPF: return "ippf";
  }
  return "pf";
}

Variant variant_of(bool prime, bool increasing) {
  if (prime) return increasing ? Variant::IPPF : Variant::PPF;
  return increasing ? Variant::IPF : Variant::PF;
}

oracle::FamilySpec build_family(const std::string& family, const Params& params, Variant v) {
  oracle::FamilySpec spec;
  spec.prime = v == Variant::PPF || v == Variant::IPPF;
  spec.increasing = v == Variant::IPF || v == Variant::IPPF;
  if (family == "classical") {
    spec.family = oracle::Classical{param(params, "n")};
  } else if (family == "vector") {
    spec.family = oracle::Vector{
        CapacityVector::arithmetic(param(params, "s"), param(params, "b"), param(params, "n"))};
  } else if (family == "pq") {
    spec.family = oracle::PQ{param(params, "p"), param(params, "q")};
  } else if (family == "affine") {
    spec.family = oracle::TwoDim{affine_weight_matrix(affine_spec(params))};
  } else {
    bad("unknown family \"" + family + "\"");
  }
  return spec;
}

BigInt evaluate_formula(const std::string& name, const Params& params) {
  auto it = formulas().find(name);
  if (it == formulas().end()) bad("unknown formula \"" + name + "\"");
  return it->second(params);
}

std::vector<std::string> formula_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : formulas()) out.push_back(name);
  return out;
}

std::string default_formula(const std::string& family, Variant v) {
  const std::string prefix = family == "vector" ? "arith" : family;
  return prefix + "_" + to_string(v);
}

bool Result::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, body] : detail::embedded_manifests()) out.emplace_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

const Json& manifest(const std::string& name) {
  static const std::map<std::string, Json> parsed = [] {
    std::map<std::string, Json> m;
    for (const auto& [n, body] : detail::embedded_manifests()) {
      m.emplace(std::string(n), Json::parse(body));
    }
    return m;
  }();
  auto it = parsed.find(name);
  if (it == parsed.end()) bad("unknown suite \"" + name + "\"");
  return it->second;
}

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

namespace {

std::optional<BigInt> try_formula(const std::string& name, const Params& params, std::string& error) {
  try {
    return evaluate_formula(name, params);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument && formulas().count(name) == 0) throw;
    if (!error.empty()) error += "; ";
    error += e.what();
    return std::nullopt;
  }
}

void run_grid(Result& result, const std::string& family,
              const std::vector<std::pair<std::string, std::vector<Natural>>>& grid,
              const nlohmann::json& checks, const oracle::Options& options,
              const std::function<void(const Row&)>& on_row) {
  // Odometer over the grid, first axis outermost.
  std::vector<std::size_t> at(grid.size(), 0);
  for (const auto& axis : grid) {
    if (axis.second.empty()) return;
  }
  while (true) {
    Params params;
    for (std::size_t i = 0; i < grid.size(); ++i) params.emplace_back(grid[i].first, grid[i].second[at[i]]);

    for (const auto& check : checks) {
      Row row;
      row.params = params;
      row.variant = check.at("variant").get<std::string>();
      row.formula = check.at("formula").get<std::string>();
      row.reference = check.value("reference", std::string("oracle"));
      row.expected = try_formula(row.formula, params, row.error);
      if (row.reference == "oracle") {
        try {
          row.actual = oracle::count(build_family(family, params, parse_variant(row.variant)), options).count;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::SearchSpaceTooLarge) throw;
          if (!row.error.empty()) row.error += "; ";
          row.error += e.what();
        }
      } else {
        row.actual = try_formula(row.reference, params, row.error);
      }
      row.pass = row.expected && row.actual && *row.expected == *row.actual;
      if (on_row) on_row(row);
      result.rows.push_back(std::move(row));
    }

    std::size_t i = grid.size();
    while (i > 0 && at[i - 1] + 1 == grid[i - 1].second.size()) {
      at[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++at[i - 1];
  }
}

}  // namespace

Result run_manifest(const Json& m, const oracle::Options& options,
                    const std::function<void(const Row&)>& on_row) {
  Result result;
  try {
    result.suite = m.at("suite").get<std::string>();
    result.version = m.at("version").get<int>();
  } catch (const Json::exception& e) {
    bad(std::string("malformed suite manifest: ") + e.what());
  }
  const std::string family = m.at("family").get<std::string>();

  const Json& checks = m.at("checks");
  // "grids" is a list of grids run in order; "grid" is shorthand for one.
  const Json grids = m.contains("grids") ? m.at("grids") : Json::array({m.at("grid")});
  for (const auto& g : grids) {
    std::vector<std::pair<std::string, std::vector<Natural>>> grid;
    for (const auto& axis : g) {
      grid.emplace_back(axis.at(0).get<std::string>(), axis.at(1).get<std::vector<Natural>>());
    }
    run_grid(result, family, grid, checks, options, on_row);
  }
  return result;
}

Result run_suite(const std::string& name, const oracle::Options& options,
                 const std::function<void(const Row&)>& on_row) {
  return run_manifest(manifest(name), options, on_row);
}

}  // namespace parkfn::suites
