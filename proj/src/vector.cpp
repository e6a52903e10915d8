#include "parkfn/vector.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "parkfn/error.hpp"

namespace parkfn {

CapacityVector::CapacityVector(Seq u) : u_(std::move(u)) {
  if (u_.empty()) throw Error(ErrorKind::InvalidArgument, "capacity vector must be non-empty");
  if (u_.front() == 0) throw Error(ErrorKind::InvalidArgument, "capacity vector needs u_0 >= 1");
  if (!is_weakly_increasing(u_)) {
    throw Error(ErrorKind::InvalidArgument, "capacity vector must be weakly increasing");
  }
}

CapacityVector CapacityVector::classical(std::size_t n) {
  return arithmetic(1, 1, n);
}

CapacityVector CapacityVector::arithmetic(Natural s, Natural b, std::size_t n) {
  Seq u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = checked_add(s, checked_mul(b, i));
  return CapacityVector(std::move(u));
}

namespace {

void require_length(const Seq& a, const CapacityVector& u) {
  if (a.size() != u.size()) {
    throw Error(ErrorKind::LengthMismatch, "|a| = " + std::to_string(a.size()) +
                                               " but |u| = " + std::to_string(u.size()));
  }
}

}  // namespace

bool is_vector_pf(const Seq& a, const CapacityVector& u) {
  require_length(a, u);
  Seq s = order_statistics(a);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= u[i]) return false;
  }
  return true;
}

ParkingOutcome simulate_capacity_parking(const Seq& a, const CapacityVector& u) {
  require_length(a, u);
  const Natural spots = u.back();
  std::vector<Natural> capacity(spots, 0);
  for (Natural v : u.values()) ++capacity[v - 1];

  ParkingOutcome out;
  for (std::size_t car = 0; car < a.size(); ++car) {
    Natural spot = a[car];
    while (spot < spots && capacity[spot] == 0) ++spot;
    if (spot >= spots) {
      out.failed_car = car;
      return out;
    }
    --capacity[spot];
    out.spots.push_back(spot);
  }
  out.success = true;
  return out;
}

bool is_prime_vector_pf(const Seq& a, const CapacityVector& u) {
  if (!is_vector_pf(a, u)) return false;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t below = std::count_if(a.begin(), a.end(), [&](Natural x) { return x < u[i]; });
    if (below <= i + 1) return false;
  }
  return true;
}

CapacityVector prime_reduction(const CapacityVector& u) {
  Seq r(u.size());
  r[0] = u[0];
  for (std::size_t i = 1; i < u.size(); ++i) r[i] = u[i - 1];
  return CapacityVector(std::move(r));
}

Seq difference_vector(const CapacityVector& u) {
  Seq d(u.size());
  d[0] = u[0];
  for (std::size_t i = 1; i < u.size(); ++i) d[i] = u[i] - u[i - 1];
  return d;
}

namespace {

// Heights y with (u_{y-1}, y) on L_a, plus 0. L_a crosses height y between
// columns a_(y-1) and a_(y), and a_(y-1) < u_{y-1} already holds for a PF.
std::vector<std::size_t> split_heights(const Seq& sorted, const CapacityVector& u) {
  const std::size_t n = sorted.size();
  std::vector<std::size_t> ys{0};
  for (std::size_t y = 1; y < n; ++y) {
    if (u[y - 1] <= sorted[y]) ys.push_back(y);
  }
  ys.push_back(n);
  return ys;
}

void require_pf(const Seq& a, const CapacityVector& u) {
  if (!is_vector_pf(a, u)) {
    throw Error(ErrorKind::NotParkingFunction, "a is not a u-parking function");
  }
}

}  // namespace

std::vector<Point> split_points(const Seq& a, const CapacityVector& u) {
  require_pf(a, u);
  std::vector<Point> out;
  for (std::size_t y : split_heights(order_statistics(a), u)) {
    out.push_back(y == 0 ? Point{0, 0} : Point{u[y - 1], y});
  }
  return out;
}

VectorPrimeDecomposition decompose(const Seq& a, const CapacityVector& u) {
  require_pf(a, u);
  const Seq sorted = order_statistics(a);
  const auto labels = sorted_indices(a);
  const auto ys = split_heights(sorted, u);

  VectorPrimeDecomposition d;
  for (std::size_t j = 1; j < ys.size(); ++j) {
    const std::size_t lo = ys[j - 1];
    const std::size_t hi = ys[j];
    const Natural offset = lo == 0 ? 0 : u[lo - 1];

    std::vector<std::size_t> B(labels.begin() + lo, labels.begin() + hi);
    std::sort(B.begin(), B.end());

    Seq ca;
    Seq cu;
    for (std::size_t pos : B) ca.push_back(a[pos] - offset);
    for (std::size_t i = lo; i < hi; ++i) cu.push_back(u[i] - offset);
    d.components.push_back({std::move(ca), CapacityVector(std::move(cu)), std::move(B), offset});
  }
  return d;
}

std::pair<Seq, CapacityVector> compose(const VectorPrimeDecomposition& d) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::InconsistentDecomposition, why);
  };
  if (d.components.empty()) fail("no components");

  std::size_t n = 0;
  for (const auto& c : d.components) {
    if (c.a.size() != c.u.size() || c.B.size() != c.a.size()) fail("component sizes differ");
    n += c.a.size();
  }

  Seq a(n);
  Seq u;
  std::vector<bool> seen(n, false);
  Natural expected_offset = 0;
  for (const auto& c : d.components) {
    if (c.offset != expected_offset) fail("offset " + std::to_string(c.offset) + " out of place");
    if (!std::is_sorted(c.B.begin(), c.B.end())) fail("label set not ascending");
    if (!is_prime_vector_pf(c.a, c.u)) fail("component is not prime");
    for (std::size_t i = 0; i < c.B.size(); ++i) {
      const std::size_t pos = c.B[i];
      if (pos >= n || seen[pos]) fail("label sets do not partition the positions");
      seen[pos] = true;
      a[pos] = c.a[i] + c.offset;
    }
    for (Natural v : c.u.values()) u.push_back(v + c.offset);
    expected_offset = u.back();
  }

  std::optional<CapacityVector> cu;
  try {
    cu.emplace(std::move(u));
  } catch (const Error& e) {
    fail(std::string("reconstructed capacity vector invalid: ") + e.what());
  }
  // Shuffles that decompose differently are not in canonical form.
  if (!is_vector_pf(a, *cu) || decompose(a, *cu) != d) fail("components do not recompose canonically");
  return {std::move(a), std::move(*cu)};
}

namespace {

void require_positive_s(Natural s) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "arithmetic progression needs s >= 1");
}

void require_positive_n(Natural n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "prime counts need n >= 1");
}

BigInt big(Natural x) { return exact::from_natural(x); }

long as_long(Natural x) {
  if (x > static_cast<Natural>(std::numeric_limits<long>::max())) {
    throw Error(ErrorKind::Overflow, "exponent too large");
  }
  return static_cast<long>(x);
}

}  // namespace

BigInt count_pf_arith(Natural s, Natural b, Natural n) {
  require_positive_s(s);
  const BigInt S = big(s), B = big(b), N = big(n);
  return exact::require_integer(S * exact::power(S + B * N, as_long(n) - 1), "s(s+bn)^(n-1)");
}

BigInt count_ipf_arith(Natural s, Natural b, Natural n) {
  require_positive_s(s);
  const BigInt S = big(s), B = big(b), N = big(n);
  const BigInt top = S + N * (B + 1);
  BigRational r(S, top);
  r.canonicalize();
  return exact::require_integer(r * exact::binomial(top, as_long(n)), "s/(s+n(b+1)) C(s+n(b+1),n)");
}

BigInt count_ippf_arith(Natural s, Natural b, Natural n) {
  require_positive_s(s);
  require_positive_n(n);
  const BigInt S = big(s), B = big(b), N = big(n);
  const long m = as_long(n) - 1;
  BigRational first(S - B, N);
  first.canonicalize();
  BigRational second(B, N);
  second.canonicalize();
  const BigRational total = first * exact::binomial(S + (B + 1) * m, m) +
                            second * exact::binomial((B + 1) * m, m);
  return exact::require_integer(total, "increasing prime arithmetic count");
}

BigInt count_ppf_arith(Natural s, Natural b, Natural n) {
  require_positive_s(s);
  require_positive_n(n);
  const BigInt S = big(s), B = big(b);
  const long m = as_long(n) - 1;
  const BigRational total = BigRational(S - B) * exact::power(S + B * m, m) +
                            exact::power(B, m + 1) * exact::power(BigInt(m), m);
  return exact::require_integer(total, "prime arithmetic count");
}

}  // namespace parkfn
