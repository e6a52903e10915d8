#include "parkfn/pq.hpp"

#include <algorithm>
#include <string>

#include "parkfn/error.hpp"

namespace parkfn {

namespace {

std::size_t count_below(const Seq& s, Natural bound) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [bound](Natural x) { return x < bound; }));
}

bool fits_grid(const PQPair& x) {
  return std::all_of(x.a.begin(), x.a.end(), [&](Natural v) { return v <= x.q(); }) &&
         std::all_of(x.b.begin(), x.b.end(), [&](Natural v) { return v <= x.p(); });
}

bool contains_zero(const Seq& s) { return std::find(s.begin(), s.end(), 0) != s.end(); }

}  // namespace

LatticePath pq_vertical_path(const PQPair& x) {
  return path_of_increasing(order_statistics(x.b), x.p());
}

LatticePath pq_horizontal_path(const PQPair& x) {
  return transpose(path_of_increasing(order_statistics(x.a), x.q()));
}

bool is_pq_pf(const PQPair& x) {
  const Seq sa = order_statistics(x.a);
  const Seq sb = order_statistics(x.b);
  for (std::size_t i = 0; i < sb.size(); ++i) {
    if (count_below(x.a, i + 1) < sb[i]) return false;
  }
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (count_below(x.b, i + 1) < sa[i]) return false;
  }
  return true;
}

bool pq_path_test(const PQPair& x) {
  if (!fits_grid(x)) return false;
  return weakly_above(pq_vertical_path(x), pq_horizontal_path(x));
}

bool is_pq_prime(const PQPair& x) {
  const std::size_t p = x.p();
  const std::size_t q = x.q();
  if (p == 0) return q == 1 && x.b[0] == 0;
  if (q == 0) return p == 1 && x.a[0] == 0;
  // Both zero checks matter when p or q is 1, where one inequality family
  // below is empty.
  if (!is_pq_pf(x) || !contains_zero(x.a) || !contains_zero(x.b)) return false;
  const Seq sa = order_statistics(x.a);
  const Seq sb = order_statistics(x.b);
  for (std::size_t i = 1; i < q; ++i) {
    if (count_below(x.a, i) <= sb[i]) return false;
  }
  for (std::size_t i = 1; i < p; ++i) {
    if (count_below(x.b, i) <= sa[i]) return false;
  }
  return true;
}

PQPair remove_zero_reduction(const PQPair& x) {
  if (!is_pq_prime(x)) throw Error(ErrorKind::NotPrime, "pair is not a prime (p,q)-parking function");
  auto za = std::find(x.a.begin(), x.a.end(), 0);
  auto zb = std::find(x.b.begin(), x.b.end(), 0);
  if (za == x.a.end() || zb == x.b.end()) {
    throw Error(ErrorKind::NoZeroEntry, "both sequences need a 0 entry to remove");
  }
  PQPair out = x;
  out.a.erase(out.a.begin() + (za - x.a.begin()));
  out.b.erase(out.b.begin() + (zb - x.b.begin()));
  return out;
}

PQPrimeDecomposition decompose_pq(const PQPair& x) {
  if (!is_pq_pf(x)) {
    throw Error(ErrorKind::NotParkingFunction, "pair is not a (p,q)-parking function");
  }
  PQPrimeDecomposition d;
  d.cut_points = common_points(pq_horizontal_path(x), pq_vertical_path(x));
  const auto a_labels = sorted_indices(x.a);  // east steps of L^perp_a, left to right
  const auto b_labels = sorted_indices(x.b);  // north steps of L_b, bottom to top

  for (std::size_t l = 1; l < d.cut_points.size(); ++l) {
    const Point from = d.cut_points[l - 1];
    const Point to = d.cut_points[l];
    PQComponent c;
    c.A.assign(a_labels.begin() + from.x, a_labels.begin() + to.x);
    c.B.assign(b_labels.begin() + from.y, b_labels.begin() + to.y);
    std::sort(c.A.begin(), c.A.end());
    std::sort(c.B.begin(), c.B.end());
    for (std::size_t j : c.A) c.pair.a.push_back(x.a[j] - from.y);
    for (std::size_t j : c.B) c.pair.b.push_back(x.b[j] - from.x);
    d.components.push_back(std::move(c));
  }
  return d;
}

PQPair compose_pq(const PQPrimeDecomposition& d) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::InconsistentDecomposition, why);
  };
  if (d.cut_points.size() != d.components.size() + 1) fail("need one more cut point than components");
  if (d.cut_points.front() != Point{0, 0}) fail("first cut point must be (0,0)");

  const Point end = d.cut_points.back();
  PQPair x;
  x.a.assign(end.x, 0);
  x.b.assign(end.y, 0);
  std::vector<bool> seen_a(end.x, false);
  std::vector<bool> seen_b(end.y, false);

  for (std::size_t l = 0; l < d.components.size(); ++l) {
    const PQComponent& c = d.components[l];
    const Point from = d.cut_points[l];
    const Point to = d.cut_points[l + 1];
    if (to.x != from.x + c.pair.p() || to.y != from.y + c.pair.q()) {
      fail("cut points disagree with component " + std::to_string(l) + " shape");
    }
    if (c.A.size() != c.pair.p() || c.B.size() != c.pair.q()) fail("label set sizes differ");
    if (!std::is_sorted(c.A.begin(), c.A.end()) || !std::is_sorted(c.B.begin(), c.B.end())) {
      fail("label sets not ascending");
    }
    if (!is_pq_prime(c.pair)) fail("component " + std::to_string(l) + " is not prime");
    for (std::size_t i = 0; i < c.A.size(); ++i) {
      if (c.A[i] >= end.x || seen_a[c.A[i]]) fail("A sets do not partition the positions of a");
      seen_a[c.A[i]] = true;
      x.a[c.A[i]] = c.pair.a[i] + from.y;
    }
    for (std::size_t i = 0; i < c.B.size(); ++i) {
      if (c.B[i] >= end.y || seen_b[c.B[i]]) fail("B sets do not partition the positions of b");
      seen_b[c.B[i]] = true;
      x.b[c.B[i]] = c.pair.b[i] + from.x;
    }
  }
  if (!is_pq_pf(x) || decompose_pq(x) != d) fail("components do not recompose canonically");
  return x;
}

WeightMatrix u0_matrix(std::size_t p, std::size_t q) {
  AffineWeightSpec spec;
  spec.b = 1;
  spec.c = 1;
  spec.s = 1;
  spec.t = 1;
  spec.p = p;
  spec.q = q;
  return affine_weight_matrix(spec);
}

WeightMatrix u0_prime_matrix(std::size_t p, std::size_t q) {
  std::vector<NodeWeight> nodes;
  nodes.reserve((p + 1) * (q + 1));
  for (std::size_t l = 0; l <= q; ++l) {
    for (std::size_t k = 0; k <= p; ++k) {
      nodes.push_back(k * l == 0 ? NodeWeight{1, 1} : NodeWeight{l, k});
    }
  }
  return WeightMatrix(p, q, std::move(nodes));
}

namespace {

long as_exponent(Natural x) { return static_cast<long>(x); }

}  // namespace

BigInt count_pq_pf(Natural p, Natural q) {
  const BigInt P = exact::from_natural(p);
  const BigInt Q = exact::from_natural(q);
  const BigRational value = BigRational(P + Q + 1) * exact::power(P + 1, as_exponent(q) - 1) *
                            exact::power(Q + 1, as_exponent(p) - 1);
  return exact::require_integer(value, "(p,q) parking count");
}

BigInt count_pq_ipf(Natural p, Natural q) {
  const BigInt n1 = exact::from_natural(p) + exact::from_natural(q) + 1;
  BigRational value(exact::binomial(n1, as_exponent(p)) * exact::binomial(n1, as_exponent(q)), n1);
  value.canonicalize();
  return exact::require_integer(value, "Narayana count");
}

BigInt count_pq_ippf(Natural p, Natural q) {
  // The closed form is 0/0 when pq = 0; use the direct convention instead.
  if (p == 0 || q == 0) return count_pq_ppf(p, q);
  const BigInt m = exact::from_natural(p) + exact::from_natural(q) - 1;
  BigRational value(
      exact::binomial(m, as_exponent(p) - 1) * exact::binomial(m, as_exponent(q) - 1), m);
  value.canonicalize();
  return exact::require_integer(value, "increasing prime (p,q) count");
}

BigInt count_pq_ppf(Natural p, Natural q) {
  if (p == 0 || q == 0) return (p + q == 1) ? 1 : 0;
  const BigInt P = exact::from_natural(p);
  const BigInt Q = exact::from_natural(q);
  const long lp = as_exponent(p);
  const long lq = as_exponent(q);
  const BigRational value = exact::power(P, lq) * exact::power(Q - 1, lp - 1) +
                            exact::power(Q, lp) * exact::power(P - 1, lq - 1) -
                            BigRational(P + Q - 1) * exact::power(P - 1, lq - 1) *
                                exact::power(Q - 1, lp - 1);
  return exact::require_integer(value, "prime (p,q) count");
}

BigInt count_pq_ppf_sum(Natural p, Natural q) {
  if (p == 0 || q == 0) {
    throw Error(ErrorKind::InvalidArgument, "double-sum prime count needs p, q >= 1");
  }
  // Each summand C(p,i) C(q,j) (1+qi+pj-p-q-ij) (q-1)^(p-i-1) (p-1)^(q-j-1)
  // is rewritten with 1+qi+pj-p-q-ij = (p-1)(q-1) - (p-i)(q-j) as
  //   C(p,i) C(q,j) [ (q-1)^(p-i) (p-1)^(q-j) - D(p-i, q-1) D(q-j, p-1) ]
  // where D(k, x) = k x^(k-1) and D(0, x) = 0. Every power then has a
  // non-negative exponent, so the i = p and j = q terms stay defined when
  // p or q is 1.
  const BigInt P = exact::from_natural(p);
  const BigInt Q = exact::from_natural(q);
  const long lp = as_exponent(p);
  const long lq = as_exponent(q);
  auto D = [](long k, const BigInt& x) -> BigRational {
    if (k == 0) return 0;
    return BigRational(BigInt(k)) * exact::power(x, k - 1);
  };
  BigRational total = 0;
  for (long i = 1; i <= lp; ++i) {
    for (long j = 1; j <= lq; ++j) {
      const BigRational bracket = exact::power(Q - 1, lp - i) * exact::power(P - 1, lq - j) -
                                  D(lp - i, Q - 1) * D(lq - j, P - 1);
      total += BigRational(exact::binomial(P, i) * exact::binomial(Q, j)) * bracket;
    }
  }
  return exact::require_integer(total, "double-sum prime (p,q) count");
}

}  // namespace parkfn
