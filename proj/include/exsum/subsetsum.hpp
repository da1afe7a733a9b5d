#ifndef EXSUM_SUBSETSUM_HPP
#define EXSUM_SUBSETSUM_HPP

#include <cstddef>

#include "exsum/rng.hpp"
#include "exsum/sets.hpp"

namespace exsum {

/// Checks on internal merges, collected when a SubsetSumStats is passed.
struct SubsetSumStats {
  std::size_t merges = 0;
  /// |S₁ + S₂| >= |S₁| + |S₂| - 1 held on every unclipped merge.
  bool lower_bound_held = true;
  /// n <= |S(X, t)| held after multiplicity reduction (top-level call).
  bool preprocess_bound_held = true;
};

/// All subset sums, 0 included. Multiplicities are expanded into
/// power-of-two bundles (leaf {0, c·v}); the leaves are merged by divide
/// and conquer with compute_sumset. Throws ContractError on a negative value.
RealSet all_subset_sums(const RatMultiset& x, Rng& rng, SubsetSumStats* stats = nullptr);

/// Every value must lie in [u, 2u], u > 0, else ContractError. A random
/// partition into 2k² parts (k = ⌊t/u⌋) folded with prefix_sumset at t;
/// the result is a subset of S(A, t) and holds each of its elements with
/// probability >= 1/2. k = 0 gives {0}.
RealSet capped_level2(const RatMultiset& a, const Rat& u, const Rat& t, Rng& rng);

/// Same contract. Exact S(A) when u <= t/(2n); otherwise k = ⌊t/u⌋ random
/// parts, each solved by capped_level2 at t' = min(t, 12·max(1, log₂k)·u)
/// repeated ⌈4·log₂(k+1)⌉ times, then a binary tree of prefix_sumset folds.
RealSet capped_level1(const RatMultiset& a, const Rat& u, const Rat& t, Rng& rng);

inline constexpr double kBoostExponent = 102.0;

struct CappedOptions {
  /// E in the repetition count ⌈log₂(n^E·s₁²·s₂²)⌉ of each layer.
  double boost_exponent = kBoostExponent;
  SubsetSumStats* stats = nullptr;
};

/// S(X, t) = {Σ(X') : X' ⊆ X, Σ(X') <= t}; always a subset, equal with high
/// probability. Items above t are dropped and multiplicities capped at
/// ⌊t/v⌋; the halves are solved recursively at t/2 to size the boosting,
/// then the layers X ∩ (t/2^{l+1}, t/2^l], l <= L = ⌈log₂ n⌉, go through
/// capped_level1 and the tail X ∩ [0, t/2^{L+1}] through all_subset_sums.
/// Throws ContractError for negative t or values.
RealSet capped_subset_sums(const RatMultiset& x, const Rat& t, Rng& rng,
                           const CappedOptions& options = {});

}  // namespace exsum

#endif  // EXSUM_SUBSETSUM_HPP
