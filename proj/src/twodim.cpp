#include "parkfn/twodim.hpp"

#include <algorithm>
#include <string>

#include "parkfn/error.hpp"

namespace parkfn {

WeightMatrix::WeightMatrix(std::size_t p, std::size_t q, std::vector<NodeWeight> nodes)
    : p_(p), q_(q), nodes_(std::move(nodes)) {
  if (nodes_.size() != (p + 1) * (q + 1)) {
    throw Error(ErrorKind::DimensionMismatch,
                "weight matrix for (" + std::to_string(p) + "," + std::to_string(q) + ") needs " +
                    std::to_string((p + 1) * (q + 1)) + " nodes, got " +
                    std::to_string(nodes_.size()));
  }
  for (std::size_t l = 0; l <= q; ++l) {
    for (std::size_t k = 0; k <= p; ++k) {
      const NodeWeight& z = at(k, l);
      auto check = [&](const NodeWeight& next, std::size_t k2, std::size_t l2) {
        if (next.u < z.u || next.v < z.v) {
          throw Error(ErrorKind::NonMonotoneWeights,
                      "weight decreases from (" + std::to_string(k) + "," + std::to_string(l) +
                          ") to (" + std::to_string(k2) + "," + std::to_string(l2) + ")");
        }
      };
      if (k < p) check(at(k + 1, l), k + 1, l);
      if (l < q) check(at(k, l + 1), k, l + 1);
    }
  }
}

WeightMatrix WeightMatrix::constant(std::size_t p, std::size_t q, NodeWeight w) {
  return WeightMatrix(p, q, std::vector<NodeWeight>((p + 1) * (q + 1), w));
}

Natural WeightMatrix::max_u() const {
  Natural m = 0;
  for (const auto& z : nodes_) m = std::max(m, z.u);
  return m;
}

Natural WeightMatrix::max_v() const {
  Natural m = 0;
  for (const auto& z : nodes_) m = std::max(m, z.v);
  return m;
}

WeightMatrix affine_weight_matrix(const AffineWeightSpec& spec) {
  std::vector<NodeWeight> nodes;
  nodes.reserve((spec.p + 1) * (spec.q + 1));
  for (std::size_t l = 0; l <= spec.q; ++l) {
    for (std::size_t k = 0; k <= spec.p; ++k) {
      nodes.push_back({checked_add(checked_add(checked_mul(spec.a, k), checked_mul(spec.b, l)), spec.s),
                       checked_add(checked_add(checked_mul(spec.c, k), checked_mul(spec.d, l)), spec.t)});
    }
  }
  return WeightMatrix(spec.p, spec.q, std::move(nodes));
}

namespace {

void require_shape(const PQPair& x, const WeightMatrix& U) {
  if (x.p() != U.p() || x.q() != U.q()) {
    throw Error(ErrorKind::DimensionMismatch,
                "pair has shape (" + std::to_string(x.p()) + "," + std::to_string(x.q()) +
                    ") but weights are for (" + std::to_string(U.p()) + "," +
                    std::to_string(U.q()) + ")");
  }
}

// Edge predicates on sorted data.
struct Edges {
  const Seq& sa;
  const Seq& sb;
  const WeightMatrix& U;

  bool east(std::size_t k, std::size_t l) const { return k < U.p() && sa[k] < U.at(k, l).u; }
  bool north(std::size_t k, std::size_t l) const { return l < U.q() && sb[l] < U.at(k, l).v; }
};

}  // namespace

BoundednessResult is_u_pf(const PQPair& x, const WeightMatrix& U) {
  require_shape(x, U);
  const std::size_t p = U.p();
  const std::size_t q = U.q();
  const Seq sa = order_statistics(x.a);
  const Seq sb = order_statistics(x.b);
  const Edges edges{sa, sb, U};

  // reach[l][k]: (p,q) is reachable from (k,l) along allowed edges.
  std::vector<std::vector<char>> reach(q + 1, std::vector<char>(p + 1, 0));
  for (std::size_t l = q + 1; l-- > 0;) {
    for (std::size_t k = p + 1; k-- > 0;) {
      if (k == p && l == q) {
        reach[l][k] = 1;
        continue;
      }
      reach[l][k] = (edges.east(k, l) && reach[l][k + 1]) || (edges.north(k, l) && reach[l + 1][k]);
    }
  }

  BoundednessResult result;
  if (!reach[0][0]) return result;
  result.bounded = true;

  BoundednessWitness w;
  std::string word;
  std::size_t k = 0;
  std::size_t l = 0;
  while (k < p || l < q) {
    if (edges.east(k, l) && reach[l][k + 1]) {
      word.push_back('E');
      w.east_weights.push_back(U.at(k, l).u);
      ++k;
    } else {
      word.push_back('N');
      w.north_weights.push_back(U.at(k, l).v);
      ++l;
    }
  }
  w.path = LatticePath(std::move(word));
  result.witness = std::move(w);
  return result;
}

WeightMatrix prime_weight_transform(const WeightMatrix& U) {
  const std::size_t p = U.p();
  const std::size_t q = U.q();
  if (p == 0 || q == 0) {
    throw Error(ErrorKind::DegenerateGrid, "prime transform needs p, q >= 1");
  }
  std::vector<NodeWeight> nodes;
  nodes.reserve((p + 1) * (q + 1));
  for (std::size_t l = 0; l <= q; ++l) {
    for (std::size_t k = 0; k <= p; ++k) {
      if (k >= 1 && l >= 1) {
        nodes.push_back({U.at(k, l - 1).u, U.at(k - 1, l).v});
      } else if (l == 0) {
        nodes.push_back({U.at(k, 0).u, U.at(0, 0).v});
      } else {
        nodes.push_back({U.at(0, 0).u, U.at(0, l).v});
      }
    }
  }
  return WeightMatrix(p, q, std::move(nodes));
}

namespace {

// Two bounding paths P1, P2 advanced in lockstep along anti-diagonals. State
// is (x1, x2) with P1 strictly right of P2 on every interior diagonal.
bool two_disjoint_paths(const Seq& sa, const Seq& sb, const WeightMatrix& U) {
  const std::size_t p = U.p();
  const std::size_t q = U.q();
  const std::size_t n = p + q;
  const Edges edges{sa, sb, U};

  std::vector<char> cur((p + 1) * (p + 1), 0);
  std::vector<char> next(cur.size(), 0);
  auto idx = [p](std::size_t x1, std::size_t x2) { return x1 * (p + 1) + x2; };
  cur[idx(0, 0)] = 1;

  for (std::size_t d = 0; d < n; ++d) {
    std::fill(next.begin(), next.end(), 0);
    const bool last = d + 1 == n;
    const std::size_t lo = d > q ? d - q : 0;
    const std::size_t hi = std::min(d, p);
    bool any = false;
    for (std::size_t x1 = lo; x1 <= hi; ++x1) {
      for (std::size_t x2 = lo; x2 <= x1; ++x2) {
        if (!cur[idx(x1, x2)]) continue;
        const std::size_t y1 = d - x1;
        const std::size_t y2 = d - x2;
        std::size_t m1[2];
        std::size_t m2[2];
        std::size_t c1 = 0;
        std::size_t c2 = 0;
        if (edges.east(x1, y1)) m1[c1++] = x1 + 1;
        if (edges.north(x1, y1)) m1[c1++] = x1;
        if (edges.east(x2, y2)) m2[c2++] = x2 + 1;
        if (edges.north(x2, y2)) m2[c2++] = x2;
        for (std::size_t i = 0; i < c1; ++i) {
          for (std::size_t j = 0; j < c2; ++j) {
            if (last || m1[i] > m2[j]) {
              next[idx(m1[i], m2[j])] = 1;
              any = true;
            }
          }
        }
      }
    }
    if (!any) return false;
    std::swap(cur, next);
  }
  return cur[idx(p, p)] != 0;
}

}  // namespace

bool is_u_prime(const PQPair& x, const WeightMatrix& U, PrimeMethod method) {
  require_shape(x, U);
  if (U.p() == 0 || U.q() == 0) {
    throw Error(ErrorKind::DegenerateGrid, "primeness is only defined for p, q >= 1");
  }
  if (method == PrimeMethod::Transform) {
    return is_u_pf(x, prime_weight_transform(U)).bounded;
  }
  return two_disjoint_paths(order_statistics(x.a), order_statistics(x.b), U);
}

namespace {

struct AffineTerms {
  BigInt a, b, c, d, s, t, p, q;
  long lp, lq;

  explicit AffineTerms(const AffineWeightSpec& w)
      : a(exact::from_natural(w.a)),
        b(exact::from_natural(w.b)),
        c(exact::from_natural(w.c)),
        d(exact::from_natural(w.d)),
        s(exact::from_natural(w.s)),
        t(exact::from_natural(w.t)),
        p(exact::from_natural(w.p)),
        q(exact::from_natural(w.q)),
        lp(static_cast<long>(w.p)),
        lq(static_cast<long>(w.q)) {}

  BigInt lead() const { return s * t + t * b * q + s * c * p; }
  BigInt X() const { return a * p + b * (q - 1); }
  BigInt Y() const { return c * (p - 1) + d * q; }
  BigRational fact_pq() const {
    return BigRational(exact::factorial(static_cast<unsigned long>(lp)) *
                       exact::factorial(static_cast<unsigned long>(lq)));
  }
};

void require_positive_grid(const AffineWeightSpec& spec) {
  if (spec.p == 0 || spec.q == 0) {
    throw Error(ErrorKind::DegenerateGrid, "prime affine counts need p, q >= 1");
  }
}

}  // namespace

BigInt count_affine_pf(const AffineWeightSpec& spec) {
  if (spec.p == 0 && spec.q == 0) return 1;
  const AffineTerms w(spec);
  const BigRational value = BigRational(w.lead()) *
                            exact::power(w.s + w.a * w.p + w.b * w.q, w.lp - 1) *
                            exact::power(w.t + w.c * w.p + w.d * w.q, w.lq - 1);
  return exact::require_integer(value, "affine parking count");
}

BigInt count_affine_ipf(const AffineWeightSpec& spec) {
  if (spec.p == 0 && spec.q == 0) return 1;
  const AffineTerms w(spec);
  const BigRational value =
      BigRational(w.lead()) *
      exact::rising_factorial(w.s + w.a * w.p + w.b * w.q + 1, w.lp - 1) *
      exact::rising_factorial(w.t + w.c * w.p + w.d * w.q + 1, w.lq - 1) / w.fact_pq();
  return exact::require_integer(value, "affine increasing parking count");
}

BigInt count_affine_ppf(const AffineWeightSpec& spec) {
  require_positive_grid(spec);
  const AffineTerms w(spec);
  const BigInt X = w.X();
  const BigInt Y = w.Y();
  const BigInt pq1 = w.p + w.q - 1;
  const BigInt k1 = (w.s + w.b * w.q - w.b) * (w.t + w.c * w.p - w.c) - w.b * w.c * w.p * w.q;
  const BigInt k2 = w.b * (w.c * pq1 + w.t - w.t * w.q);
  const BigInt k3 = w.c * (w.b * pq1 + w.s - w.s * w.p);
  const BigInt k4 = w.b * w.c * pq1;
  const long ep = w.lp - 1;
  const long eq = w.lq - 1;
  const BigRational value = BigRational(k1) * exact::power(w.s + X, ep) * exact::power(w.t + Y, eq) +
                            BigRational(k2) * exact::power(X, ep) * exact::power(w.t + Y, eq) +
                            BigRational(k3) * exact::power(w.s + X, ep) * exact::power(Y, eq) -
                            BigRational(k4) * exact::power(X, ep) * exact::power(Y, eq);
  return exact::require_integer(value, "affine prime count");
}

BigInt count_affine_ippf(const AffineWeightSpec& spec) {
  require_positive_grid(spec);
  const AffineTerms w(spec);
  const BigInt X = w.X();
  const BigInt Y = w.Y();
  const BigInt pq1 = w.p + w.q - 1;
  const BigInt k1 = (w.s + w.b * w.q - w.b) * (w.t + w.c * w.p - w.c) - w.b * w.c * w.p * w.q;
  const BigInt k2 = w.b * (w.c * pq1 + w.t - w.t * w.q);
  const BigInt k3 = w.c * (w.b * pq1 + w.s - w.s * w.p);
  const BigInt k4 = w.b * w.c * pq1;
  const long ep = w.lp - 1;
  const long eq = w.lq - 1;
  auto rf = exact::rising_factorial;
  const BigRational sum = BigRational(k1) * rf(w.s + X + 1, ep) * rf(w.t + Y + 1, eq) +
                          BigRational(k2) * rf(X + 1, ep) * rf(w.t + Y + 1, eq) +
                          BigRational(k3) * rf(w.s + X + 1, ep) * rf(Y + 1, eq) -
                          BigRational(k4) * rf(X + 1, ep) * rf(Y + 1, eq);
  return exact::require_integer(sum / w.fact_pq(), "affine increasing prime count");
}

}  // namespace parkfn
