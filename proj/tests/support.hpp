#pragma once

// Helpers shared by the test binaries. Nothing here calls into the library's
// enumeration code; tuples are generated independently.

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "parkfn/core.hpp"
#include "parkfn/error.hpp"

namespace testing {

using parkfn::Natural;
using parkfn::Seq;

template <class F>
parkfn::ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const parkfn::Error& e) {
    return e.kind();
  }
  FAIL("expected a parkfn::Error");
  return parkfn::ErrorKind::InvalidArgument;
}

/// Every tuple in [0, bound)^len, by recursion.
inline void all_tuples(std::size_t len, Natural bound, const std::function<void(const Seq&)>& fn) {
  Seq t(len);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == len) {
      fn(t);
      return;
    }
    for (Natural v = 0; v < bound; ++v) {
      t[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

/// Every weakly increasing sequence of length len with entries in [lo, hi].
inline void all_increasing(std::size_t len, Natural lo, Natural hi,
                           const std::function<void(const Seq&)>& fn) {
  Seq t(len);
  std::function<void(std::size_t, Natural)> rec = [&](std::size_t i, Natural from) {
    if (i == len) {
      fn(t);
      return;
    }
    for (Natural v = from; v <= hi; ++v) {
      t[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, lo);
}

inline Seq sorted(Seq s) {
  std::sort(s.begin(), s.end());
  return s;
}

inline std::size_t count_below(const Seq& s, Natural bound) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](Natural x) { return x < bound; }));
}

}  // namespace testing
