#pragma once

#include <json.hpp>

#include "parkfn/core.hpp"
#include "parkfn/oracle.hpp"
#include "parkfn/pq.hpp"
#include "parkfn/twodim.hpp"
#include "parkfn/vector.hpp"

// JSON encodings shared by the CLI and the verify suites. Parsing failures
// throw Error(InvalidArgument).

namespace parkfn::json_io {

using Json = nlohmann::json;

Seq seq_from_json(const Json& j, const char* field);
Json to_json(const Seq& s);
Json to_json(const Point& pt);

/// {"p":p,"q":q,"nodes":[[[u,v],...],...]} with nodes[l][k].
WeightMatrix weight_matrix_from_json(const Json& j);
Json to_json(const WeightMatrix& U);

/// {"a":..,"b":..,"c":..,"d":..,"s":..,"t":..,"p":..,"q":..}
AffineWeightSpec affine_spec_from_json(const Json& j);
Json to_json(const AffineWeightSpec& spec);

Json to_json(const ParkingOutcome& outcome);
Json to_json(const VectorPrimeDecomposition& d);
Json to_json(const PQPrimeDecomposition& d);
Json to_json(const BoundednessWitness& w);
Json to_json(const oracle::EnumerationReport& report);

Natural natural_field(const Json& j, const char* field);

}  // namespace parkfn::json_io
