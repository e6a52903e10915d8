#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "parkfn/core.hpp"
#include "parkfn/exact.hpp"
#include "parkfn/twodim.hpp"
#include "parkfn/vector.hpp"

namespace parkfn::oracle {

struct Classical {
  std::size_t n = 0;
};

struct Vector {
  CapacityVector u;
};

struct PQ {
  std::size_t p = 0;
  std::size_t q = 0;
};

struct TwoDim {
  WeightMatrix U;
};

using Family = std::variant<Classical, Vector, PQ, TwoDim>;

struct FamilySpec {
  Family family;
  bool prime = false;
  bool increasing = false;
};

struct EnumerationReport {
  FamilySpec spec;
  BigInt count;
  BigInt search_space;
  std::chrono::nanoseconds elapsed{0};
  std::size_t shards = 1;
};

struct Options {
  std::size_t shards = 1;
  /// Widen every entry bound by one; counts must not change.
  bool slack = false;
  /// 0 means: PARKFN_SEARCH_CAP if set, else default_cap.
  Natural cap = 0;
};

inline constexpr Natural default_cap = 100'000'000;

/// PARKFN_SEARCH_CAP if set to a positive integer, else default_cap.
Natural configured_cap();

/// Candidate count for the spec; independent of the cap.
BigInt search_space(const FamilySpec& spec, const Options& options = {});

/// Membership test the oracle applies to each candidate. For vector-type
/// families b is empty.
bool is_member(const FamilySpec& spec, const PQPair& x);

/// Calls fn on each member in lexicographic order of the flattened tuple
/// (a then b). Throws SearchSpaceTooLarge above the cap.
void for_each(const FamilySpec& spec, const std::function<void(const PQPair&)>& fn,
              const Options& options = {});

std::vector<PQPair> enumerate(const FamilySpec& spec, const Options& options = {});

EnumerationReport count(const FamilySpec& spec, const Options& options = {});

std::string describe(const FamilySpec& spec);

}  // namespace parkfn::oracle
