#include <doctest.h>

#include "parkfn/pq.hpp"
#include "parkfn/twodim.hpp"
#include "parkfn/vector.hpp"
#include "support.hpp"

using namespace parkfn;
using testing::kind_of;

namespace {

AffineWeightSpec affine(Natural a, Natural b, Natural c, Natural d, Natural s, Natural t,
                        std::size_t p, std::size_t q) {
  return AffineWeightSpec{a, b, c, d, s, t, p, q};
}

// Replays a witness edge by edge against the sorted sequences.
bool witness_bounds(const PQPair& x, const WeightMatrix& U, const BoundednessWitness& w) {
  const Seq sa = testing::sorted(x.a);
  const Seq sb = testing::sorted(x.b);
  std::size_t k = 0, l = 0;
  Seq east, north;
  for (char c : w.path.word()) {
    if (c == 'E') {
      if (k >= U.p() || sa[k] >= U.at(k, l).u) return false;
      east.push_back(U.at(k, l).u);
      ++k;
    } else {
      if (l >= U.q() || sb[l] >= U.at(k, l).v) return false;
      north.push_back(U.at(k, l).v);
      ++l;
    }
  }
  return k == U.p() && l == U.q() && east == w.east_weights && north == w.north_weights;
}

// Every lattice path in L(p,q) checked for boundedness, by brute force.
bool bounded_by_some_path(const PQPair& x, const WeightMatrix& U) {
  const Seq sa = testing::sorted(x.a);
  const Seq sb = testing::sorted(x.b);
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t k, std::size_t l) {
    if (k == U.p() && l == U.q()) return true;
    if (k < U.p() && sa[k] < U.at(k, l).u && go(k + 1, l)) return true;
    return l < U.q() && sb[l] < U.at(k, l).v && go(k, l + 1);
  };
  return go(0, 0);
}

// Monotone matrices with entries in [1, max], built from row/column maxima.
void some_monotone_matrices(std::size_t p, std::size_t q, Natural max,
                            const std::function<void(const WeightMatrix&)>& fn) {
  // u_{k,l} = min(max, base_u + step_u[k] + rise_u * l), similarly for v,
  // varied over small parameter sets; covers flat, steep and saturated grids.
  for (Natural su = 1; su <= max; su += 1) {
    for (Natural sv = 1; sv <= max; sv += 1) {
      for (Natural du = 0; du <= 2; ++du) {
        for (Natural dv = 0; dv <= 2; ++dv) {
          for (Natural mix = 0; mix <= 1; ++mix) {
            std::vector<NodeWeight> nodes;
            for (std::size_t l = 0; l <= q; ++l) {
              for (std::size_t k = 0; k <= p; ++k) {
                const Natural u = std::min<Natural>(max, su + du * l + mix * k);
                const Natural v = std::min<Natural>(max, sv + dv * k + mix * l);
                nodes.push_back({u, v});
              }
            }
            fn(WeightMatrix(p, q, std::move(nodes)));
          }
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("weight matrix validation") {
  CHECK(kind_of([] { WeightMatrix(1, 1, {{1, 1}, {1, 1}}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { WeightMatrix(1, 0, {{2, 1}, {1, 1}}); }) == ErrorKind::NonMonotoneWeights);
  CHECK(kind_of([] { WeightMatrix(0, 1, {{1, 2}, {1, 1}}); }) == ErrorKind::NonMonotoneWeights);
  const auto c = WeightMatrix::constant(2, 1, {3, 4});
  CHECK(c.max_u() == 3);
  CHECK(c.max_v() == 4);
}

TEST_CASE("affine weight matrices") {
  CHECK(affine_weight_matrix(affine(0, 1, 1, 0, 1, 1, 3, 4)) == u0_matrix(3, 4));
  CHECK(affine_weight_matrix(affine(0, 0, 0, 0, 0, 0, 2, 2)) == WeightMatrix::constant(2, 2, {0, 0}));
  CHECK(affine_weight_matrix(affine(0, 1, 1, 0, 1, 1, 3, 4)).at(2, 3) == NodeWeight{4, 3});
  CHECK(affine_weight_matrix(affine(1, 2, 3, 4, 5, 6, 2, 2)).at(1, 2) == NodeWeight{10, 17});
}

TEST_CASE("boundedness of the worked example") {
  const auto U = u0_matrix(3, 4);
  const PQPair yes{{2, 3, 2}, {3, 0, 1, 0}};
  const auto r = is_u_pf(yes, U);
  CHECK(r.bounded);
  REQUIRE(r.witness);
  CHECK(r.witness->path.word() == "NNEENEN");
  CHECK(r.witness->east_weights == Seq{3, 3, 4});
  CHECK(r.witness->north_weights == Seq{1, 1, 3, 4});

  const auto no = is_u_pf({{4, 3, 3}, {2, 0, 2, 1}}, U);
  CHECK_FALSE(no.bounded);
  CHECK_FALSE(no.witness);

  const auto empty = is_u_pf({{}, {}}, WeightMatrix::constant(0, 0, {0, 0}));
  CHECK(empty.bounded);
  CHECK(empty.witness->path.word().empty());

  CHECK(kind_of([&] { is_u_pf({{0}, {0}}, U); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("boundedness matches path search and witnesses replay") {
  for (std::size_t p = 0; p <= 2; ++p) {
    for (std::size_t q = 0; q <= 2; ++q) {
      some_monotone_matrices(p, q, 3, [&](const WeightMatrix& U) {
        testing::all_tuples(p, 3, [&](const Seq& a) {
          testing::all_tuples(q, 3, [&](const Seq& b) {
            const PQPair x{a, b};
            const auto r = is_u_pf(x, U);
            CHECK(r.bounded == bounded_by_some_path(x, U));
            if (r.bounded) CHECK(witness_bounds(x, U, *r.witness));
          });
        });
      });
    }
  }
}

TEST_CASE("prime weight transform") {
  CHECK(prime_weight_transform(u0_matrix(3, 4)) == u0_prime_matrix(3, 4));
  CHECK(prime_weight_transform(WeightMatrix::constant(2, 3, {5, 2})) == WeightMatrix::constant(2, 3, {5, 2}));
  CHECK(prime_weight_transform(affine_weight_matrix(affine(0, 1, 1, 0, 1, 1, 2, 2))).at(1, 1) == NodeWeight{1, 1});
  CHECK(kind_of([] { prime_weight_transform(WeightMatrix::constant(0, 2, {1, 1})); }) ==
        ErrorKind::DegenerateGrid);
}

TEST_CASE("prime examples") {
  const auto U = u0_matrix(3, 4);
  for (auto m : {PrimeMethod::Direct, PrimeMethod::Transform}) {
    CHECK(is_u_prime({{0, 0, 3}, {0, 0, 1, 1}}, U, m));
    CHECK_FALSE(is_u_prime({{3, 0, 3}, {1, 0, 1, 0}}, U, m));
    CHECK(is_u_prime({{0}, {0}}, u0_matrix(1, 1), m));
  }
  CHECK(kind_of([] { is_u_prime({{}, {0}}, u0_matrix(0, 1), PrimeMethod::Direct); }) ==
        ErrorKind::DegenerateGrid);
  CHECK(kind_of([&] { is_u_prime({{0}, {0}}, U, PrimeMethod::Direct); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("direct and transform prime tests agree") {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      if (p * q > 6) continue;  // the full range runs in the acceptance suite
      some_monotone_matrices(p, q, 3, [&](const WeightMatrix& U) {
        testing::all_tuples(p, 3, [&](const Seq& a) {
          testing::all_tuples(q, 3, [&](const Seq& b) {
            const PQPair x{a, b};
            CHECK(is_u_prime(x, U, PrimeMethod::Direct) == is_u_prime(x, U, PrimeMethod::Transform));
          });
        });
      });
    }
  }
}

TEST_CASE("affine counts: values and conventions") {
  CHECK(count_affine_pf(affine(0, 1, 1, 0, 1, 1, 3, 4)) == 12800);
  CHECK(count_affine_pf(affine(0, 1, 1, 0, 1, 1, 3, 4)) == count_pq_pf(3, 4));
  CHECK(count_affine_pf(affine(2, 2, 2, 2, 2, 2, 0, 0)) == 1);
  CHECK(count_affine_ipf(affine(2, 2, 2, 2, 2, 2, 0, 0)) == 1);

  // p = 0 leaves a vector parking function for v_l = t + d l.
  for (Natural t = 1; t <= 3; ++t) {
    for (Natural d = 0; d <= 2; ++d) {
      for (std::size_t q = 1; q <= 4; ++q) {
        CHECK(count_affine_pf(affine(1, 1, 1, d, 1, t, 0, q)) == count_pf_arith(t, d, q));
        CHECK(count_affine_ipf(affine(1, 1, 1, d, 1, t, 0, q)) == count_ipf_arith(t, d, q));
      }
    }
  }
  // x^(-1) at x = 1: s + bq = 0.
  CHECK(kind_of([] { count_affine_ipf(affine(0, 0, 0, 1, 0, 1, 0, 2)); }) == ErrorKind::ConventionUndefined);

  CHECK(count_affine_ppf(affine(0, 1, 1, 0, 1, 1, 1, 1)) == 1);
  CHECK(count_affine_ppf(affine(0, 1, 1, 0, 1, 1, 2, 2)) == 5);
  for (std::size_t p = 1; p <= 5; ++p) {
    for (std::size_t q = 1; q <= 5; ++q) {
      CHECK(count_affine_ppf(affine(0, 1, 1, 0, 1, 1, p, q)) == count_pq_ppf(p, q));
      CHECK(count_affine_ippf(affine(0, 1, 1, 0, 1, 1, p, q)) == count_pq_ippf(p, q));
      CHECK(count_affine_pf(affine(0, 1, 1, 0, 1, 1, p, q)) == count_pq_pf(p, q));
      CHECK(count_affine_ipf(affine(0, 1, 1, 0, 1, 1, p, q)) == count_pq_ipf(p, q));
    }
  }
  CHECK(kind_of([] { count_affine_ppf(affine(1, 1, 1, 1, 1, 1, 0, 2)); }) == ErrorKind::DegenerateGrid);
}

TEST_CASE("affine counts match brute force on a small grid") {
  for (Natural a = 0; a <= 1; ++a)
    for (Natural b = 0; b <= 1; ++b)
      for (Natural c = 0; c <= 1; ++c)
        for (Natural d = 0; d <= 1; ++d)
          for (std::size_t p = 1; p <= 2; ++p)
            for (std::size_t q = 1; q <= 2; ++q) {
              const auto spec = affine(a, b, c, d, 1, 2, p, q);
              const auto U = affine_weight_matrix(spec);
              long pf = 0, ipf = 0, ppf = 0, ippf = 0;
              testing::all_tuples(p, U.max_u(), [&](const Seq& x) {
                testing::all_tuples(q, U.max_v(), [&](const Seq& y) {
                  const PQPair pair{x, y};
                  const bool inc = std::is_sorted(x.begin(), x.end()) && std::is_sorted(y.begin(), y.end());
                  if (bounded_by_some_path(pair, U)) {
                    ++pf;
                    ipf += inc;
                  }
                  if (is_u_prime(pair, U, PrimeMethod::Direct)) {
                    ++ppf;
                    ippf += inc;
                  }
                });
              });
              INFO("spec a=" << a << " b=" << b << " c=" << c << " d=" << d << " p=" << p << " q=" << q);
              CHECK(count_affine_pf(spec) == pf);
              CHECK(count_affine_ipf(spec) == ipf);
              CHECK(count_affine_ppf(spec) == ppf);
              CHECK(count_affine_ippf(spec) == ippf);
            }
}
