#pragma once

#include <cstddef>
#include <vector>

#include "parkfn/core.hpp"
#include "parkfn/exact.hpp"
#include "parkfn/twodim.hpp"

namespace parkfn {

struct PQComponent {
  PQPair pair;
  std::vector<std::size_t> A;  // positions in the original a, ascending
  std::vector<std::size_t> B;  // positions in the original b, ascending

  bool operator==(const PQComponent&) const = default;
};

struct PQPrimeDecomposition {
  std::vector<PQComponent> components;
  std::vector<Point> cut_points;

  bool operator==(const PQPrimeDecomposition&) const = default;
};

/// L_b in L(p, q).
LatticePath pq_vertical_path(const PQPair& x);
/// L^perp_a in L(p, q), the transpose of L_a drawn in L(q, p).
LatticePath pq_horizontal_path(const PQPair& x);

/// Inequality test; agrees with pq_path_test.
bool is_pq_pf(const PQPair& x);

/// L_b weakly above L^perp_a (false when an entry does not fit the grid).
bool pq_path_test(const PQPair& x);

bool is_pq_prime(const PQPair& x);

/// Drops the first 0 of a and the first 0 of b.
PQPair remove_zero_reduction(const PQPair& x);

PQPrimeDecomposition decompose_pq(const PQPair& x);

PQPair compose_pq(const PQPrimeDecomposition& d);

/// z_{k,l} = (l + 1, k + 1).
WeightMatrix u0_matrix(std::size_t p, std::size_t q);
/// z_{k,l} = (l, k) for kl > 0 and (1, 1) on the axes.
WeightMatrix u0_prime_matrix(std::size_t p, std::size_t q);

BigInt count_pq_pf(Natural p, Natural q);
BigInt count_pq_ipf(Natural p, Natural q);
BigInt count_pq_ippf(Natural p, Natural q);
BigInt count_pq_ppf(Natural p, Natural q);
/// Double-sum form of count_pq_ppf; needs p, q >= 1.
BigInt count_pq_ppf_sum(Natural p, Natural q);

}  // namespace parkfn
