#include <doctest.h>

#include <cstdlib>
#include <set>

#include "parkfn/oracle.hpp"
#include "parkfn/pq.hpp"
#include "support.hpp"

using namespace parkfn;
using namespace parkfn::oracle;
using testing::kind_of;

namespace {

FamilySpec spec(Family f, bool prime = false, bool increasing = false) {
  return FamilySpec{std::move(f), prime, increasing};
}

std::vector<FamilySpec> sample_specs() {
  std::vector<FamilySpec> out;
  for (bool prime : {false, true}) {
    for (bool inc : {false, true}) {
      out.push_back(spec(Classical{4}, prime, inc));
      out.push_back(spec(Vector{CapacityVector({1, 2, 4, 4})}, prime, inc));
      out.push_back(spec(PQ{2, 3}, prime, inc));
      out.push_back(spec(PQ{0, 2}, prime, inc));
      out.push_back(spec(TwoDim{affine_weight_matrix({1, 0, 1, 1, 1, 2, 2, 2})}, prime, inc));
    }
  }
  return out;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("PARKFN_SEARCH_CAP", value, 1); }
  ~EnvGuard() { unsetenv("PARKFN_SEARCH_CAP"); }
};

}  // namespace

TEST_CASE("classical enumeration") {
  const auto all = enumerate(spec(Classical{2}));
  CHECK(all == std::vector<PQPair>{{{0, 0}, {}}, {{0, 1}, {}}, {{1, 0}, {}}});
  CHECK(count(spec(Classical{4})).count == 125);
  CHECK(count(spec(Classical{4}, true)).count == 27);
  CHECK(count(spec(Classical{1}, true)).count == 1);
  CHECK(kind_of([] { count(spec(Classical{0})); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("small family examples") {
  CHECK(enumerate(spec(PQ{1, 1}, true)) == std::vector<PQPair>{{{0}, {0}}});
  CHECK(count(spec(Vector{CapacityVector({1, 2, 3})}, true)).count == 4);
  const auto r = count(spec(PQ{3, 4}));
  CHECK(r.count == 12800);
  CHECK(r.search_space == 32000);
  CHECK(count(spec(PQ{0, 0})).count == 1);
  CHECK(count(spec(PQ{0, 0}, true)).count == 0);
}

TEST_CASE("enumeration is lexicographic and matches the module predicates") {
  for (const auto& s : sample_specs()) {
    INFO(describe(s));
    const auto all = enumerate(s);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const PQPair& x, const PQPair& y) {
      Seq fx = x.a, fy = y.a;
      fx.insert(fx.end(), x.b.begin(), x.b.end());
      fy.insert(fy.end(), y.b.begin(), y.b.end());
      return fx < fy;
    }));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& x : all) {
      CHECK(is_member(s, x));
      if (s.increasing) {
        CHECK(std::is_sorted(x.a.begin(), x.a.end()));
        CHECK(std::is_sorted(x.b.begin(), x.b.end()));
      }
    }
    CHECK(BigInt(static_cast<long>(all.size())) == count(s).count);
  }
}

TEST_CASE("enumeration finds every member in a wider box") {
  // Independent scan of a box one larger than the oracle's bounds.
  const FamilySpec s = spec(PQ{2, 2});
  std::set<std::pair<Seq, Seq>> expected;
  testing::all_tuples(2, 4, [&](const Seq& a) {
    testing::all_tuples(2, 4, [&](const Seq& b) {
      if (is_pq_pf({a, b})) expected.emplace(a, b);
    });
  });
  std::set<std::pair<Seq, Seq>> got;
  for (const auto& x : enumerate(s)) got.emplace(x.a, x.b);
  CHECK(got == expected);
}

TEST_CASE("counts are independent of the shard count") {
  for (const auto& s : sample_specs()) {
    INFO(describe(s));
    const BigInt one = count(s).count;
    for (std::size_t shards : {2, 3, 8}) {
      Options o;
      o.shards = shards;
      const auto r = count(s, o);
      CHECK(r.count == one);
      CHECK(r.shards == shards);
    }
  }
}

TEST_CASE("increasing counts equal the number of distinct sorted members") {
  for (const auto& s : sample_specs()) {
    if (s.increasing) continue;
    INFO(describe(s));
    std::set<std::pair<Seq, Seq>> classes;
    for (const auto& x : enumerate(s)) classes.emplace(testing::sorted(x.a), testing::sorted(x.b));
    FamilySpec inc = s;
    inc.increasing = true;
    CHECK(count(inc).count == static_cast<long>(classes.size()));
  }
}

TEST_CASE("widening the entry bounds does not change counts") {
  for (const auto& s : sample_specs()) {
    INFO(describe(s));
    Options slack;
    slack.slack = true;
    const auto wide = count(s, slack);
    CHECK(wide.count == count(s).count);
    CHECK(wide.search_space > search_space(s));
  }
}

TEST_CASE("search space and cap") {
  CHECK(search_space(spec(Classical{3})) == 27);
  CHECK(search_space(spec(Classical{3}, false, true)) == 10);
  CHECK(search_space(spec(PQ{2, 1}, false, true)) == 3 * 3);

  Options tight;
  tight.cap = 26;
  CHECK(kind_of([&] { count(spec(Classical{3}), tight); }) == ErrorKind::SearchSpaceTooLarge);
  tight.cap = 27;
  CHECK(count(spec(Classical{3}), tight).count == 16);

  CHECK(configured_cap() == default_cap);
  {
    EnvGuard env("100");
    CHECK(configured_cap() == 100);
    CHECK(kind_of([] { count(spec(Classical{4})); }) == ErrorKind::SearchSpaceTooLarge);
    CHECK(kind_of([] { enumerate(spec(Classical{4})); }) == ErrorKind::SearchSpaceTooLarge);
  }
  {
    EnvGuard env("lots");
    CHECK(kind_of([] { configured_cap(); }) == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("describe") {
  CHECK(describe(spec(PQ{3, 4}, true, true)) == "pq(3,4) prime increasing");
  CHECK(describe(spec(Vector{CapacityVector({1, 3})})) == "vector(u=1,3)");
}
