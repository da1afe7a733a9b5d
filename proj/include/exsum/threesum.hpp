#ifndef EXSUM_THREESUM_HPP
#define EXSUM_THREESUM_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "exsum/rng.hpp"
#include "exsum/sets.hpp"

namespace exsum {

struct BsgDecomposition {
  /// Pairs (A_i, B_i); k = pairs.size().
  std::vector<std::pair<RealSet, RealSet>> pairs;
  /// Solutions (a, b), a + b in C, not covered by any A_i × B_i.
  std::vector<std::pair<Rat, Rat>> remainder;
  Rat alpha;

  std::size_t k() const { return pairs.size(); }
};

/// A decomposition provider: (A, B, C, alpha, rng) -> decomposition. It must
/// cover every solution; the size targets are the provider's business.
using BsgProvider = std::function<BsgDecomposition(const RealSet&, const RealSet&,
                                                   const RealSet&, const Rat&, Rng&)>;

/// Fallback provider: k = 0 and the exhaustive remainder
/// {(a, b) in A × B : a + b in C}, sorted. Throws ContractError unless
/// 0 < alpha < 1.
BsgDecomposition bsg_decompose(const RealSet& a, const RealSet& b, const RealSet& c,
                               const Rat& alpha, Rng& rng);

/// Every (a, b) with a + b in C lies in the remainder or some A_i × B_i.
bool covers_all_solutions(const BsgDecomposition& d, const RealSet& a, const RealSet& b,
                          const RealSet& c);

struct ThreeSumIndex {
  RealSet a, b, c;
  BsgDecomposition decomposition;
};

/// n^{-1/7} rounded to a rational with 2^-20 resolution, n = max size;
/// 1/2 when n <= 1.
Rat default_alpha(std::size_t n);

/// Stores the inputs and the provider's decomposition.
ThreeSumIndex preprocess(const RealSet& a, const RealSet& b, const RealSet& c, const Rat& alpha,
                         Rng& rng, const BsgProvider& provider = bsg_decompose);
ThreeSumIndex preprocess(const RealSet& a, const RealSet& b, const RealSet& c, Rng& rng);

/// ∃ a in A', b in B', c in C' with a + b = c. Scans the remainder, then
/// checks compute_sumset(A_i ∩ A', B_i ∩ B') against C'. Throws
/// ContractError unless A' ⊆ A, B' ⊆ B, C' ⊆ C.
bool query(const ThreeSumIndex& idx, const RealSet& aq, const RealSet& bq, const RealSet& cq,
           Rng& rng);

}  // namespace exsum

#endif  // EXSUM_THREESUM_HPP
