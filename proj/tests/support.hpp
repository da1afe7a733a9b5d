#ifndef EXSUM_TESTS_SUPPORT_HPP
#define EXSUM_TESTS_SUPPORT_HPP

// Random instance generators shared by the unit tests and the acceptance
// driver.

#include <cstdint>
#include <vector>

#include "exsum/rat.hpp"
#include "exsum/rng.hpp"
#include "exsum/sets.hpp"

namespace exsum::testing {

/// n/d in lowest terms.
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// p/q with |p| <= max_num and 1 <= q <= max_den.
inline Rat random_rat(Rng& rng, std::int64_t max_num, std::int64_t max_den) {
  Rat r(rng.uniform_int(-max_num, max_num), rng.uniform_int(1, max_den));
  r.canonicalize();
  return r;
}

inline Rat random_nonneg_rat(Rng& rng, std::int64_t max_num, std::int64_t max_den) {
  Rat r(rng.uniform_int(0, max_num), rng.uniform_int(1, max_den));
  r.canonicalize();
  return r;
}

/// Exactly n distinct elements (n must fit in the value range).
inline RealSet random_set(Rng& rng, std::size_t n, std::int64_t max_num, std::int64_t max_den) {
  std::vector<Rat> v;
  while (true) {
    RealSet s(v);
    if (s.size() == n) return s;
    v = s.elems();
    v.push_back(random_rat(rng, max_num, max_den));
  }
}

/// n distinct integers from [lo, hi].
inline RealSet random_int_set(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<Rat> v;
  while (true) {
    RealSet s(v);
    if (s.size() == n) return s;
    v = s.elems();
    v.push_back(Rat(rng.uniform_int(lo, hi)));
  }
}

/// Integers from [lo, hi] scaled by step and shifted by offset.
inline RealSet random_grid_set(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                               const Rat& step, const Rat& offset) {
  std::vector<Rat> v;
  for (const Rat& x : random_int_set(rng, n, lo, hi)) v.push_back(offset + step * x);
  return RealSet(std::move(v));
}

/// t support points from random_set and nonzero values; positive values
/// when positive is set.
inline SparseFn random_fn(Rng& rng, std::size_t t, std::int64_t max_num, std::int64_t max_den,
                          bool positive) {
  std::vector<SparseFn::Entry> e;
  for (const Rat& x : random_set(rng, t, max_num, max_den)) {
    Rat v;
    do {
      v = positive ? Rat(rng.uniform_int(1, 9), rng.uniform_int(1, 4)) : random_rat(rng, 9, 4);
    } while (v == 0);
    v.canonicalize();
    e.emplace_back(x, v);
  }
  return SparseFn(std::move(e));
}

}  // namespace exsum::testing

#endif  // EXSUM_TESTS_SUPPORT_HPP
