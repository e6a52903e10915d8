#include <doctest.h>

#include <random>
#include <set>

#include "parkfn/core.hpp"
#include "support.hpp"

using namespace parkfn;
using testing::kind_of;

namespace {

LatticePath P(const char* w) { return LatticePath(w); }

// Highest y the path reaches in each column x < width.
std::vector<Natural> column_tops(const LatticePath& p) {
  std::vector<Natural> top(p.width(), 0);
  for (const Point& v : p.vertices()) {
    if (v.x < p.width()) top[v.x] = std::max(top[v.x], v.y);
  }
  return top;
}

// Every word with w E's and h N's.
std::vector<LatticePath> all_paths(Natural w, Natural h) {
  std::vector<LatticePath> out;
  std::string word;
  std::function<void(Natural, Natural)> rec = [&](Natural e, Natural n) {
    if (e == w && n == h) {
      out.emplace_back(word);
      return;
    }
    if (e < w) {
      word.push_back('E');
      rec(e + 1, n);
      word.pop_back();
    }
    if (n < h) {
      word.push_back('N');
      rec(e, n + 1);
      word.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("lattice path basics") {
  const LatticePath p = P("NNENNEE");
  CHECK(p.width() == 3);
  CHECK(p.height() == 4);
  CHECK(p.size() == 7);
  const auto v = p.vertices();
  CHECK(v.front() == Point{0, 0});
  CHECK(v.back() == Point{3, 4});
  CHECK(v[3] == Point{1, 2});
  CHECK(LatticePath().vertices() == std::vector<Point>{{0, 0}});
  CHECK(kind_of([] { LatticePath("NXE"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("order statistics") {
  CHECK(order_statistics({2, 0, 3, 0}) == Seq{0, 0, 2, 3});
  CHECK(order_statistics({}).empty());
  CHECK(order_statistics({6, 0, 1, 0, 0}) == Seq{0, 0, 0, 1, 6});
  CHECK(sorted_indices({2, 0, 3, 0}) == std::vector<std::size_t>{1, 3, 0, 2});
}

TEST_CASE("order statistics is an idempotent permutation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Natural> val(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Seq s(trial % 9);
    for (auto& x : s) x = val(rng);
    const Seq o = order_statistics(s);
    CHECK(order_statistics(o) == o);
    CHECK(std::multiset<Natural>(s.begin(), s.end()) == std::multiset<Natural>(o.begin(), o.end()));
    CHECK(std::is_sorted(o.begin(), o.end()));
  }
}

TEST_CASE("path of an increasing sequence") {
  CHECK(path_of_increasing({1, 1, 3}, 3).word() == "ENNEEN");
  CHECK(path_of_increasing({0, 0, 0}, 0).word() == "NNN");
  CHECK(path_of_increasing({}, 2).word() == "EE");

  const Seq s{0, 0, 1, 5, 6};
  const LatticePath p = path_of_increasing(s, 6);
  CHECK(p.width() == 6);
  CHECK(p.height() == 5);
  Seq xs;
  Natural x = 0;
  for (char c : p.word()) {
    if (c == 'E') ++x;
    else xs.push_back(x);
  }
  CHECK(xs == s);

  CHECK(kind_of([] { path_of_increasing({1, 0}, 3); }) == ErrorKind::NotIncreasing);
  CHECK(kind_of([] { path_of_increasing({0, 4}, 3); }) == ErrorKind::OutOfRange);
}

TEST_CASE("transpose") {
  CHECK(transpose(P("NNENNEE")).word() == "EENEENN");
  CHECK(transpose(P("E")).word() == "N");
  CHECK(transpose(path_of_increasing({0, 3, 3}, 4)).word() == "ENNNEEN");
  for (const auto& p : all_paths(3, 3)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("weakly above") {
  CHECK(weakly_above(P("NNENNEE"), P("ENNNEEN")));
  CHECK_FALSE(weakly_above(P("NNEENNE"), P("ENNNEEN")));
  CHECK(weakly_above(P("ENNNEEN"), P("ENNNEEN")));
  CHECK(kind_of([] { weakly_above(P("NE"), P("NNE")); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("weakly above agrees with column heights and transposes") {
  for (Natural w = 0; w <= 3; ++w) {
    for (Natural h = 0; h <= 3; ++h) {
      const auto paths = all_paths(w, h);
      for (const auto& up : paths) {
        for (const auto& low : paths) {
          const auto tu = column_tops(up);
          const auto tl = column_tops(low);
          bool expected = true;
          for (std::size_t x = 0; x < tu.size(); ++x) expected = expected && tu[x] >= tl[x];
          CHECK(weakly_above(up, low) == expected);
          CHECK(weakly_above(up, low) == weakly_above(transpose(low), transpose(up)));
        }
      }
    }
  }
}

TEST_CASE("common points") {
  const auto pts = common_points(P("ENNNEEN"), P("NNENNEE"));
  CHECK(std::find(pts.begin(), pts.end(), Point{1, 2}) != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), Point{1, 3}) != pts.end());

  const LatticePath p = P("NENNEE");
  CHECK(common_points(p, p) == p.vertices());

  // The (6,5) pair (3,0,3,2,3,0), (6,1,0,5,0) drawn in L(6,5).
  const LatticePath horiz = transpose(path_of_increasing({0, 0, 2, 3, 3, 3}, 5));
  const LatticePath vert = path_of_increasing({0, 0, 1, 5, 6}, 6);
  CHECK(common_points(horiz, vert) ==
        std::vector<Point>{{0, 0}, {3, 3}, {4, 3}, {5, 3}, {6, 4}, {6, 5}});

  CHECK(kind_of([] { common_points(P("NE"), P("NN")); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("common points form a chain that includes both endpoints") {
  const auto paths = all_paths(3, 3);
  for (const auto& p : paths) {
    for (const auto& q : paths) {
      const auto pts = common_points(p, q);
      REQUIRE(pts.size() >= 2);
      CHECK(pts.front() == Point{0, 0});
      CHECK(pts.back() == Point{3, 3});
      for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i - 1].x <= pts[i].x);
        CHECK(pts[i - 1].y <= pts[i].y);
      }
    }
  }
}

TEST_CASE("vertical labels") {
  CHECK(label_vertical({2, 0, 3, 0}, 4).vertical_labels == std::vector<std::size_t>{1, 3, 0, 2});
  const auto single = label_vertical({0}, 1);
  CHECK(single.path.word() == "NE");
  CHECK(single.vertical_labels == std::vector<std::size_t>{0});
  CHECK(label_vertical({7, 3, 0, 4, 0, 3}, 8).vertical_labels ==
        std::vector<std::size_t>{2, 4, 1, 5, 3, 0});
  CHECK(kind_of([] { label_vertical({5}, 4); }) == ErrorKind::OutOfRange);
}

TEST_CASE("labels within a column increase bottom to top and read back") {
  testing::all_tuples(4, 4, [](const Seq& a) {
    const LabeledPath lp = label_vertical(a, 3);
    CHECK(read_vertical_labels(lp) == a);
    Natural x = 0;
    std::size_t i = 0;
    std::optional<std::pair<Natural, std::size_t>> prev;
    for (char c : lp.path.word()) {
      if (c == 'E') {
        ++x;
        continue;
      }
      const std::size_t label = lp.vertical_labels[i++];
      if (prev && prev->first == x) CHECK(prev->second < label);
      prev = std::pair{x, label};
    }
  });
}

TEST_CASE("checked arithmetic") {
  const Natural big = std::numeric_limits<Natural>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(0, big) == 0);
  CHECK(kind_of([&] { checked_add(big, 1); }) == ErrorKind::Overflow);
  CHECK(kind_of([&] { checked_mul(big / 2 + 1, 2); }) == ErrorKind::Overflow);
}
