#include "parkfn/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "parkfn/error.hpp"
#include "parkfn/json_io.hpp"
#include "parkfn/oracle.hpp"
#include "parkfn/pq.hpp"
#include "parkfn/suites.hpp"
#include "parkfn/twodim.hpp"
#include "parkfn/vector.hpp"

namespace parkfn::cli {

namespace {

using json_io::Json;

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::InvalidArgument, why); }

struct Settings {
  std::string family;
  std::string file;
  std::string method;
  std::string prime_method = "direct";
  std::string format = "json";
  std::string suite;
  std::size_t shards = 1;
  bool prime = false;
  bool increasing = false;
  bool report = false;
  bool list_suites = false;
  std::optional<Natural> n, s, a, b, c, d, t, p, q;
};

Json read_document(const Settings& st, std::istream& in) {
  std::stringstream buffer;
  if (!st.file.empty()) {
    std::ifstream f(st.file);
    if (!f) bad("cannot open " + st.file);
    buffer << f.rdbuf();
  } else {
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    bad(std::string("input is not valid JSON: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) bad(std::string("input needs field \"") + name + "\"");
  return doc.at(name);
}

void expect_size(const std::optional<Natural>& flag, std::size_t actual, const char* name) {
  if (flag && *flag != actual) {
    bad(std::string("--") + name + " " + std::to_string(*flag) + " does not match input length " +
        std::to_string(actual));
  }
}

PrimeMethod parse_prime_method(const std::string& m) {
  if (m == "direct") return PrimeMethod::Direct;
  if (m == "transform") return PrimeMethod::Transform;
  bad("--prime-method must be direct or transform");
}

PQPair read_pair(const Json& doc, const Settings& st) {
  PQPair x{json_io::seq_from_json(field(doc, "a"), "a"), json_io::seq_from_json(field(doc, "b"), "b")};
  expect_size(st.p, x.p(), "p");
  expect_size(st.q, x.q(), "q");
  if (doc.contains("p") && json_io::natural_field(doc, "p") != x.p()) bad("\"p\" does not match |a|");
  if (doc.contains("q") && json_io::natural_field(doc, "q") != x.q()) bad("\"q\" does not match |b|");
  return x;
}

WeightMatrix read_weights(const Json& doc, const PQPair& x) {
  if (doc.contains("U")) return json_io::weight_matrix_from_json(doc.at("U"));
  if (doc.contains("affine")) {
    Json spec = doc.at("affine");
    if (!spec.is_object()) bad("\"affine\" must be an object");
    if (!spec.contains("p")) spec["p"] = x.p();
    if (!spec.contains("q")) spec["q"] = x.q();
    return affine_weight_matrix(json_io::affine_spec_from_json(spec));
  }
  bad("twodim input needs \"U\" or \"affine\"");
}

// Vector-type instances: classical reads only "a".
std::pair<Seq, CapacityVector> read_vector_instance(const Json& doc, const Settings& st) {
  Seq a = json_io::seq_from_json(field(doc, "a"), "a");
  if (st.family == "classical") {
    if (a.empty()) bad("classical instances need n >= 1");
    expect_size(st.n, a.size(), "n");
    return {a, CapacityVector::classical(a.size())};
  }
  if (st.family != "vector") bad("family must be classical or vector here, got \"" + st.family + "\"");
  CapacityVector u(json_io::seq_from_json(field(doc, "u"), "u"));
  if (u.size() != a.size()) {
    throw Error(ErrorKind::LengthMismatch, "|a| and |u| differ");
  }
  expect_size(st.n, a.size(), "n");
  return {a, u};
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int do_check(const Settings& st, std::istream& in, std::ostream& out) {
  const Json doc = read_document(st, in);
  Json result;
  if (st.family == "classical" || st.family == "vector") {
    auto [a, u] = read_vector_instance(doc, st);
    result["member"] = is_vector_pf(a, u);
    result["prime"] = is_prime_vector_pf(a, u);
  } else if (st.family == "pq") {
    const PQPair x = read_pair(doc, st);
    result["member"] = is_pq_pf(x);
    result["prime"] = is_pq_prime(x);
  } else if (st.family == "twodim") {
    const PQPair x = read_pair(doc, st);
    const WeightMatrix U = read_weights(doc, x);
    const BoundednessResult r = is_u_pf(x, U);
    result["member"] = r.bounded;
    if (x.p() >= 1 && x.q() >= 1) {
      result["prime"] = is_u_prime(x, U, parse_prime_method(st.prime_method));
    } else {
      result["prime"] = nullptr;
    }
    if (r.witness) result["witness"] = r.witness->path.word();
  } else {
    bad("check supports classical, vector, pq and twodim");
  }
  emit(out, result);
  return kOk;
}

int do_simulate(const Settings& st, std::istream& in, std::ostream& out) {
  const Json doc = read_document(st, in);
  auto [a, u] = read_vector_instance(doc, st);
  emit(out, json_io::to_json(simulate_capacity_parking(a, u)));
  return kOk;
}

int do_decompose(const Settings& st, std::istream& in, std::ostream& out) {
  const Json doc = read_document(st, in);
  if (st.family == "pq") {
    emit(out, json_io::to_json(decompose_pq(read_pair(doc, st))));
  } else {
    auto [a, u] = read_vector_instance(doc, st);
    emit(out, json_io::to_json(decompose(a, u)));
  }
  return kOk;
}

suites::Params collect_params(const Settings& st) {
  std::vector<std::pair<const char*, const std::optional<Natural>*>> wanted;
  if (st.family == "classical") {
    wanted = {{"n", &st.n}};
  } else if (st.family == "vector") {
    wanted = {{"s", &st.s}, {"b", &st.b}, {"n", &st.n}};
  } else if (st.family == "pq") {
    wanted = {{"p", &st.p}, {"q", &st.q}};
  } else if (st.family == "affine") {
    wanted = {{"a", &st.a}, {"b", &st.b}, {"c", &st.c}, {"d", &st.d},
              {"s", &st.s}, {"t", &st.t}, {"p", &st.p}, {"q", &st.q}};
  } else {
    bad("unknown family \"" + st.family + "\"");
  }
  suites::Params params;
  for (const auto& [name, value] : wanted) {
    if (!*value) bad(std::string("family ") + st.family + " needs --" + name);
    params.emplace_back(name, **value);
  }
  return params;
}

oracle::FamilySpec oracle_spec(const Settings& st, std::istream& in) {
  const suites::Variant v = suites::variant_of(st.prime, st.increasing);
  if (st.family == "twodim") {
    const Json doc = read_document(st, in);
    oracle::FamilySpec spec;
    spec.family = oracle::TwoDim{json_io::weight_matrix_from_json(doc)};
    spec.prime = st.prime;
    spec.increasing = st.increasing;
    return spec;
  }
  return suites::build_family(st.family, collect_params(st), v);
}

oracle::Options oracle_options(const Settings& st) {
  oracle::Options o;
  o.shards = st.shards;
  return o;
}

int do_count(const Settings& st, std::istream& in, std::ostream& out) {
  const suites::Variant v = suites::variant_of(st.prime, st.increasing);
  if (st.method == "formula") {
    if (st.family == "twodim") bad("general weight matrices have no closed form; use --family affine or --method oracle");
    const std::string name = suites::default_formula(st.family, v);
    const BigInt value = suites::evaluate_formula(name, collect_params(st));
    if (st.report) {
      emit(out, Json{{"count", exact::to_decimal(value)}, {"formula", name}});
    } else {
      out << exact::to_decimal(value) << '\n';
    }
    return kOk;
  }
  if (st.method != "oracle") bad("--method must be formula or oracle");
  const auto report = oracle::count(oracle_spec(st, in), oracle_options(st));
  if (st.report) {
    emit(out, json_io::to_json(report));
  } else {
    out << exact::to_decimal(report.count) << '\n';
  }
  return kOk;
}

int do_list(const Settings& st, std::istream& in, std::ostream& out) {
  const oracle::FamilySpec spec = oracle_spec(st, in);
  const bool single = st.family == "classical" || st.family == "vector";
  oracle::for_each(
      spec,
      [&](const PQPair& x) {
        Json line{{"a", json_io::to_json(x.a)}};
        if (!single) line["b"] = json_io::to_json(x.b);
        emit(out, line);
      },
      oracle_options(st));
  return kOk;
}

std::string show(const std::optional<BigInt>& v) { return v ? exact::to_decimal(*v) : ""; }

int do_verify(const Settings& st, std::istream& in, std::ostream& out, std::ostream& err) {
  if (st.list_suites) {
    for (const auto& name : suites::suite_names()) out << name << '\n';
    return kOk;
  }
  if (st.suite.empty() == st.file.empty()) bad("verify needs exactly one of --suite and --manifest");
  if (st.format != "json" && st.format != "csv") bad("--format must be json or csv");

  err << std::left << std::setw(40) << "params" << std::setw(6) << "kind" << std::setw(22)
      << "formula" << std::setw(22) << "reference" << "result\n";
  const auto on_row = [&](const suites::Row& r) {
    err << std::left << std::setw(40) << suites::format_params(r.params) << std::setw(6) << r.variant
        << std::setw(22) << show(r.expected) << std::setw(22) << show(r.actual)
        << (r.pass ? "PASS" : "FAIL") << (r.error.empty() ? "" : "  " + r.error) << '\n';
  };
  const auto result = st.file.empty()
                          ? suites::run_suite(st.suite, oracle_options(st), on_row)
                          : suites::run_manifest(read_document(st, in), oracle_options(st), on_row);

  if (st.format == "csv") {
    out << "params,variant,formula,reference,expected,actual,pass\n";
    for (const auto& r : result.rows) {
      out << suites::format_params(r.params) << ',' << r.variant << ',' << r.formula << ','
          << r.reference << ',' << show(r.expected) << ',' << show(r.actual) << ','
          << (r.pass ? "true" : "false") << '\n';
    }
  } else {
    Json rows = Json::array();
    for (const auto& r : result.rows) {
      Json params = Json::object();
      for (const auto& [k, v] : r.params) params[k] = v;
      Json row{{"params", params},       {"variant", r.variant},
               {"formula", r.formula},   {"reference", r.reference},
               {"expected", show(r.expected)}, {"actual", show(r.actual)},
               {"pass", r.pass}};
      if (!r.error.empty()) row["error"] = r.error;
      rows.push_back(std::move(row));
    }
    emit(out, Json{{"suite", result.suite},
                   {"version", result.version},
                   {"rows", std::move(rows)},
                   {"all_pass", result.all_pass()}});
  }
  const auto failed = std::count_if(result.rows.begin(), result.rows.end(),
                                    [](const suites::Row& r) { return !r.pass; });
  err << result.rows.size() - failed << "/" << result.rows.size() << " rows agree\n";
  return result.all_pass() ? kOk : kDisagreement;
}

void add_family_params(CLI::App* cmd, Settings& st) {
  for (auto [name, slot] : std::initializer_list<std::pair<const char*, std::optional<Natural>*>>{
           {"--n", &st.n}, {"--s", &st.s}, {"--a", &st.a}, {"--b", &st.b}, {"--c", &st.c},
           {"--d", &st.d}, {"--t", &st.t}, {"--p", &st.p}, {"--q", &st.q}}) {
    cmd->add_option(name, *slot, std::string("family parameter ") + (name + 2));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings st;
  CLI::App app{"Recognize, decompose, enumerate and count parking functions.", "parkfn"};
  app.require_subcommand(1);

  const std::vector<std::string> families{"classical", "vector", "pq", "twodim", "affine"};

  auto* check = app.add_subcommand("check", "Test membership and primeness of one instance");
  check->add_option("--family", st.family)->required()->check(CLI::IsMember({"classical", "vector", "pq", "twodim"}));
  check->add_option("--file", st.file, "Read the instance from a file instead of stdin");
  check->add_option("--prime-method", st.prime_method, "direct or transform (twodim)");
  add_family_params(check, st);

  auto* simulate = app.add_subcommand("simulate", "Run the capacity parking process");
  simulate->add_option("--family", st.family)->default_val("vector")->check(CLI::IsMember({"classical", "vector"}));
  simulate->add_option("--file", st.file);
  add_family_params(simulate, st);

  auto* decomp = app.add_subcommand("decompose", "Print the prime decomposition");
  decomp->add_option("--family", st.family)->required()->check(CLI::IsMember({"classical", "vector", "pq"}));
  decomp->add_option("--file", st.file);
  add_family_params(decomp, st);

  auto* count = app.add_subcommand("count", "Count a family by closed form or by exhaustive search");
  count->add_option("--family", st.family)->required()->check(CLI::IsMember(families));
  count->add_option("--method", st.method)->default_val("formula")->check(CLI::IsMember({"formula", "oracle"}));
  count->add_flag("--prime", st.prime);
  count->add_flag("--increasing", st.increasing);
  count->add_flag("--report", st.report, "Print a JSON report instead of the bare count");
  count->add_option("--shards", st.shards)->check(CLI::Range(1, 256));
  count->add_option("--file", st.file, "Weight matrix JSON for --family twodim");
  add_family_params(count, st);

  auto* list = app.add_subcommand("list", "Stream every member as JSON lines");
  list->add_option("--family", st.family)->required()->check(CLI::IsMember(families));
  list->add_flag("--prime", st.prime);
  list->add_flag("--increasing", st.increasing);
  list->add_option("--file", st.file, "Weight matrix JSON for --family twodim");
  add_family_params(list, st);

  auto* verify = app.add_subcommand("verify", "Compare formulas with the oracle over a named suite");
  verify->add_option("--suite", st.suite);
  verify->add_option("--manifest", st.file, "Run a manifest file with the same schema as the shipped suites");
  verify->add_option("--format", st.format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--shards", st.shards)->check(CLI::Range(1, 256));
  verify->add_flag("--list", st.list_suites, "Print the available suite names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (*check) return do_check(st, in, out);
    if (*simulate) return do_simulate(st, in, out);
    if (*decomp) return do_decompose(st, in, out);
    if (*count) return do_count(st, in, out);
    if (*list) return do_list(st, in, out);
    if (*verify) return do_verify(st, in, out, err);
  } catch (const Error& e) {
    err << "parkfn: " << e.what() << '\n';
    return e.kind() == ErrorKind::SearchSpaceTooLarge ? kSearchCapExceeded : kMalformedInput;
  } catch (const Json::exception& e) {
    err << "parkfn: malformed input: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace parkfn::cli
