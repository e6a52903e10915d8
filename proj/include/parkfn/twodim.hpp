#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parkfn/core.hpp"
#include "parkfn/exact.hpp"

namespace parkfn {

struct NodeWeight {
  Natural u = 0;  // weight of the east step leaving the node
  Natural v = 0;  // weight of the north step leaving the node

  bool operator==(const NodeWeight&) const = default;
};

// Node weights z_{k,l} over the grid (0,0)..(p,q), monotone in both indices.
class WeightMatrix {
 public:
  WeightMatrix() = default;

  /// nodes[l * (p + 1) + k] = z_{k,l}. Throws DimensionMismatch on a size
  /// error and NonMonotoneWeights if some weight decreases along k or l.
  WeightMatrix(std::size_t p, std::size_t q, std::vector<NodeWeight> nodes);

  static WeightMatrix constant(std::size_t p, std::size_t q, NodeWeight w);

  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  const NodeWeight& at(std::size_t k, std::size_t l) const { return nodes_.at(l * (p_ + 1) + k); }
  const std::vector<NodeWeight>& nodes() const noexcept { return nodes_; }

  Natural max_u() const;
  Natural max_v() const;

  bool operator==(const WeightMatrix&) const = default;

 private:
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::vector<NodeWeight> nodes_{NodeWeight{}};
};

// z_{k,l} = (a k + b l + s, c k + d l + t).
struct AffineWeightSpec {
  Natural a = 0, b = 0, c = 0, d = 0, s = 0, t = 0;
  std::size_t p = 0, q = 0;

  bool operator==(const AffineWeightSpec&) const = default;
};

struct BoundednessWitness {
  LatticePath path;
  Seq east_weights;
  Seq north_weights;
};

struct BoundednessResult {
  bool bounded = false;
  std::optional<BoundednessWitness> witness;
};

enum class PrimeMethod { Direct, Transform };

WeightMatrix affine_weight_matrix(const AffineWeightSpec& spec);

/// Witness is the lexicographically least bounding path with E < N.
BoundednessResult is_u_pf(const PQPair& x, const WeightMatrix& U);

WeightMatrix prime_weight_transform(const WeightMatrix& U);

bool is_u_prime(const PQPair& x, const WeightMatrix& U, PrimeMethod method);

BigInt count_affine_pf(const AffineWeightSpec& spec);
BigInt count_affine_ipf(const AffineWeightSpec& spec);
BigInt count_affine_ppf(const AffineWeightSpec& spec);
BigInt count_affine_ippf(const AffineWeightSpec& spec);

}  // namespace parkfn
