#include "parkfn/json_io.hpp"

#include <string>

#include "parkfn/error.hpp"

namespace parkfn::json_io {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::InvalidArgument, why); }

Natural as_natural(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where + " must be a non-negative integer");
  if (v.is_number_unsigned()) return v.get<Natural>();
  const auto x = v.get<long long>();
  if (x < 0) bad(where + " must be non-negative");
  return static_cast<Natural>(x);
}

}  // namespace

Natural natural_field(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) bad(std::string("missing field \"") + field + "\"");
  return as_natural(j.at(field), std::string("\"") + field + "\"");
}

Seq seq_from_json(const Json& j, const char* field) {
  if (!j.is_array()) bad(std::string("\"") + field + "\" must be an array");
  Seq out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_natural(v, std::string("entries of \"") + field + "\""));
  return out;
}

Json to_json(const Seq& s) {
  Json j = Json::array();
  for (Natural v : s) j.push_back(v);
  return j;
}

Json to_json(const Point& pt) { return Json::array({pt.x, pt.y}); }

WeightMatrix weight_matrix_from_json(const Json& j) {
  const Natural p = natural_field(j, "p");
  const Natural q = natural_field(j, "q");
  if (!j.contains("nodes") || !j.at("nodes").is_array()) bad("weight matrix needs \"nodes\"");
  const Json& rows = j.at("nodes");
  if (rows.size() != q + 1) bad("\"nodes\" must have q+1 rows");
  std::vector<NodeWeight> nodes;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != p + 1) bad("each row of \"nodes\" must have p+1 entries");
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2) bad("each node must be a pair [u, v]");
      nodes.push_back({as_natural(z[0], "node weight"), as_natural(z[1], "node weight")});
    }
  }
  return WeightMatrix(p, q, std::move(nodes));
}

Json to_json(const WeightMatrix& U) {
  Json rows = Json::array();
  for (std::size_t l = 0; l <= U.q(); ++l) {
    Json row = Json::array();
    for (std::size_t k = 0; k <= U.p(); ++k) row.push_back(Json::array({U.at(k, l).u, U.at(k, l).v}));
    rows.push_back(std::move(row));
  }
  return Json{{"p", U.p()}, {"q", U.q()}, {"nodes", std::move(rows)}};
}

AffineWeightSpec affine_spec_from_json(const Json& j) {
  AffineWeightSpec s;
  s.a = natural_field(j, "a");
  s.b = natural_field(j, "b");
  s.c = natural_field(j, "c");
  s.d = natural_field(j, "d");
  s.s = natural_field(j, "s");
  s.t = natural_field(j, "t");
  s.p = natural_field(j, "p");
  s.q = natural_field(j, "q");
  return s;
}

Json to_json(const AffineWeightSpec& s) {
  return Json{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d},
              {"s", s.s}, {"t", s.t}, {"p", s.p}, {"q", s.q}};
}

Json to_json(const ParkingOutcome& outcome) {
  Json j{{"parked", outcome.success}, {"spots", to_json(outcome.spots)}};
  j["failed_car"] = outcome.failed_car ? Json(*outcome.failed_car) : Json(nullptr);
  return j;
}

Json to_json(const VectorPrimeDecomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Json B = Json::array();
    for (auto i : c.B) B.push_back(i);
    comps.push_back(Json{{"a", to_json(c.a)}, {"u", to_json(c.u.values())}, {"B", B}, {"offset", c.offset}});
  }
  return Json{{"components", std::move(comps)}};
}

Json to_json(const PQPrimeDecomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Json A = Json::array();
    Json B = Json::array();
    for (auto i : c.A) A.push_back(i);
    for (auto i : c.B) B.push_back(i);
    comps.push_back(Json{{"a", to_json(c.pair.a)}, {"b", to_json(c.pair.b)}, {"A", A}, {"B", B}});
  }
  Json cuts = Json::array();
  for (const auto& pt : d.cut_points) cuts.push_back(to_json(pt));
  return Json{{"components", std::move(comps)}, {"cut_points", std::move(cuts)}};
}

Json to_json(const BoundednessWitness& w) {
  return Json{{"path", w.path.word()},
              {"east_weights", to_json(w.east_weights)},
              {"north_weights", to_json(w.north_weights)}};
}

Json to_json(const oracle::EnumerationReport& r) {
  return Json{{"family", oracle::describe(r.spec)},
              {"count", exact::to_decimal(r.count)},
              {"search_space", exact::to_decimal(r.search_space)},
              {"shards", r.shards},
              {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
}

}  // namespace parkfn::json_io
