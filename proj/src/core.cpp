#include "parkfn/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "parkfn/error.hpp"

namespace parkfn {

LatticePath::LatticePath(std::string word) : word_(std::move(word)) {
  for (char c : word_) {
    if (c == 'E') {
      ++width_;
    } else if (c == 'N') {
      ++height_;
    } else {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("lattice path step must be N or E, got '") + c + "'");
    }
  }
}

std::vector<Point> LatticePath::vertices() const {
  std::vector<Point> out;
  out.reserve(word_.size() + 1);
  Point cur;
  out.push_back(cur);
  for (char c : word_) {
    if (c == 'E') {
      ++cur.x;
    } else {
      ++cur.y;
    }
    out.push_back(cur);
  }
  return out;
}

Seq order_statistics(const Seq& s) {
  Seq out = s;
  std::stable_sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> sorted_indices(const Seq& s) {
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return s[i] < s[j]; });
  return idx;
}

bool is_weakly_increasing(const Seq& s) {
  return std::is_sorted(s.begin(), s.end());
}

LatticePath path_of_increasing(const Seq& s, Natural width) {
  if (!is_weakly_increasing(s)) {
    throw Error(ErrorKind::NotIncreasing, "sequence is not weakly increasing");
  }
  if (!s.empty() && s.back() > width) {
    throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(s.back()) +
                                           " exceeds path width " + std::to_string(width));
  }
  std::string word;
  word.reserve(s.size() + width);
  Natural x = 0;
  for (Natural v : s) {
    word.append(v - x, 'E');
    x = v;
    word.push_back('N');
  }
  word.append(width - x, 'E');
  return LatticePath(std::move(word));
}

LatticePath transpose(const LatticePath& p) {
  std::string word = p.word();
  for (char& c : word) c = (c == 'N') ? 'E' : 'N';
  return LatticePath(std::move(word));
}

namespace {

void require_same_shape(const LatticePath& p, const LatticePath& q) {
  if (p.width() != q.width() || p.height() != q.height()) {
    throw Error(ErrorKind::DimensionMismatch,
                "paths " + p.word() + " and " + q.word() + " have different endpoints");
  }
}

// Height at which each east step is taken.
std::vector<Natural> east_heights(const LatticePath& p) {
  std::vector<Natural> out;
  out.reserve(p.width());
  Natural y = 0;
  for (char c : p.word()) {
    if (c == 'N') {
      ++y;
    } else {
      out.push_back(y);
    }
  }
  return out;
}

}  // namespace

bool weakly_above(const LatticePath& upper, const LatticePath& lower) {
  require_same_shape(upper, lower);
  auto up = east_heights(upper);
  auto low = east_heights(lower);
  for (std::size_t k = 0; k < up.size(); ++k) {
    if (up[k] < low[k]) return false;
  }
  return true;
}

std::vector<Point> common_points(const LatticePath& p, const LatticePath& q) {
  require_same_shape(p, q);
  // Both paths visit exactly one vertex on each anti-diagonal x + y = d.
  auto vp = p.vertices();
  auto vq = q.vertices();
  std::vector<Point> out;
  for (std::size_t d = 0; d < vp.size(); ++d) {
    if (vp[d] == vq[d]) out.push_back(vp[d]);
  }
  return out;
}

LabeledPath label_vertical(const Seq& a, Natural width) {
  LabeledPath lp;
  lp.path = path_of_increasing(order_statistics(a), width);
  lp.vertical_labels = sorted_indices(a);
  return lp;
}

Seq read_vertical_labels(const LabeledPath& lp) {
  Seq a(lp.vertical_labels.size());
  std::size_t i = 0;
  Natural x = 0;
  for (char c : lp.path.word()) {
    if (c == 'E') {
      ++x;
    } else {
      a.at(lp.vertical_labels.at(i++)) = x;
    }
  }
  return a;
}

Natural checked_add(Natural x, Natural y) {
  if (x > std::numeric_limits<Natural>::max() - y) {
    throw Error(ErrorKind::Overflow, "natural addition overflows");
  }
  return x + y;
}

Natural checked_mul(Natural x, Natural y) {
  if (x != 0 && y > std::numeric_limits<Natural>::max() / x) {
    throw Error(ErrorKind::Overflow, "natural multiplication overflows");
  }
  return x * y;
}

}  // namespace parkfn
