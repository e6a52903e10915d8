#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parkfn {

using Natural = std::uint64_t;
using Seq = std::vector<Natural>;

struct Point {
  Natural x = 0;
  Natural y = 0;

  auto operator<=>(const Point&) const = default;
};

// A lattice path from (0,0) stored as its step word over {N, E}.
class LatticePath {
 public:
  LatticePath() = default;

  /// Throws InvalidArgument on any character other than 'N' or 'E'.
  explicit LatticePath(std::string word);

  const std::string& word() const noexcept { return word_; }
  Natural width() const noexcept { return width_; }
  Natural height() const noexcept { return height_; }
  std::size_t size() const noexcept { return word_.size(); }

  /// Vertices (0,0), ..., (width, height) in traversal order.
  std::vector<Point> vertices() const;

  bool operator==(const LatticePath& other) const noexcept { return word_ == other.word_; }

 private:
  std::string word_;
  Natural width_ = 0;
  Natural height_ = 0;
};

struct LabeledPath {
  LatticePath path;
  std::vector<std::size_t> vertical_labels;                     // bottom to top
  std::optional<std::vector<std::size_t>> horizontal_labels;    // left to right
};

/// A pair (a, b) with p = |a| and q = |b|; either side may be empty.
struct PQPair {
  Seq a;
  Seq b;

  std::size_t p() const noexcept { return a.size(); }
  std::size_t q() const noexcept { return b.size(); }

  bool operator==(const PQPair&) const = default;
};

Seq order_statistics(const Seq& s);

/// Indices of s in the order of a stable sort by value.
std::vector<std::size_t> sorted_indices(const Seq& s);

bool is_weakly_increasing(const Seq& s);

/// The path in L(width, |s|) whose i-th north step sits at x = s[i].
LatticePath path_of_increasing(const Seq& s, Natural width);

LatticePath transpose(const LatticePath& p);

bool weakly_above(const LatticePath& upper, const LatticePath& lower);

std::vector<Point> common_points(const LatticePath& p, const LatticePath& q);

/// Labels the north steps of L_a so that label j sits in column a[j].
LabeledPath label_vertical(const Seq& a, Natural width);

/// Column of each label, i.e. the inverse of label_vertical.
Seq read_vertical_labels(const LabeledPath& lp);

Natural checked_add(Natural x, Natural y);
Natural checked_mul(Natural x, Natural y);

}  // namespace parkfn
