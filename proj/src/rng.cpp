#include "exsum/rng.hpp"

#include "exsum/errors.hpp"

namespace exsum {

std::uint64_t Rng::mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::uniform(std::uint64_t n) {
  if (n == 0) throw ContractError("uniform over an empty range");
  if ((n & (n - 1)) == 0) return next() & (n - 1);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ContractError("uniform_int with lo > hi");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
  return lo + static_cast<std::int64_t>(uniform(span + 1));
}

bool Rng::keep_with_rate_pow2(unsigned level) {
  while (level >= 64) {
    if (next() != 0) return false;
    level -= 64;
  }
  if (level == 0) return true;
  return (next() >> (64 - level)) == 0;
}

}  // namespace exsum
