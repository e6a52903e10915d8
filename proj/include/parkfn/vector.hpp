#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "parkfn/core.hpp"
#include "parkfn/exact.hpp"

namespace parkfn {

// Weakly increasing vector 1 <= u_0 <= ... <= u_{n-1}; spot j has capacity
// equal to the multiplicity of j+1 in u.
class CapacityVector {
 public:
  /// Throws InvalidArgument if empty, u_0 = 0, or not weakly increasing.
  explicit CapacityVector(Seq u);

  static CapacityVector classical(std::size_t n);
  /// u_i = s + b*i.
  static CapacityVector arithmetic(Natural s, Natural b, std::size_t n);

  const Seq& values() const noexcept { return u_; }
  std::size_t size() const noexcept { return u_.size(); }
  Natural operator[](std::size_t i) const { return u_.at(i); }
  Natural back() const noexcept { return u_.back(); }

  bool operator==(const CapacityVector&) const = default;

 private:
  Seq u_;
};

struct ParkingOutcome {
  bool success = false;
  /// Spot taken by each car that parked, in car order.
  std::vector<Natural> spots;
  std::optional<std::size_t> failed_car;
};

struct VectorComponent {
  Seq a;
  CapacityVector u;
  std::vector<std::size_t> B;  // positions in the original sequence, ascending
  Natural offset = 0;

  bool operator==(const VectorComponent&) const = default;
};

struct VectorPrimeDecomposition {
  std::vector<VectorComponent> components;

  bool operator==(const VectorPrimeDecomposition&) const = default;
};

bool is_vector_pf(const Seq& a, const CapacityVector& u);

ParkingOutcome simulate_capacity_parking(const Seq& a, const CapacityVector& u);

bool is_prime_vector_pf(const Seq& a, const CapacityVector& u);

/// (u_0, u_0, u_1, ..., u_{n-2}).
CapacityVector prime_reduction(const CapacityVector& u);

/// (u_0, u_1 - u_0, ..., u_{n-1} - u_{n-2}).
Seq difference_vector(const CapacityVector& u);

/// Vertices of L_a lying on {(0,0), (u_0,1), ..., (u_{n-1},n)}.
std::vector<Point> split_points(const Seq& a, const CapacityVector& u);

VectorPrimeDecomposition decompose(const Seq& a, const CapacityVector& u);

std::pair<Seq, CapacityVector> compose(const VectorPrimeDecomposition& d);

// Counts for u_i = s + b*i.
BigInt count_pf_arith(Natural s, Natural b, Natural n);
BigInt count_ipf_arith(Natural s, Natural b, Natural n);
BigInt count_ippf_arith(Natural s, Natural b, Natural n);
BigInt count_ppf_arith(Natural s, Natural b, Natural n);

}  // namespace parkfn
