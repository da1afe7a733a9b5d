#ifndef EXSUM_RESTRICTED_HPP
#define EXSUM_RESTRICTED_HPP

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "exsum/rng.hpp"
#include "exsum/sets.hpp"

namespace exsum {

struct ClaimAtLeast {
  std::size_t s;
  friend bool operator==(const ClaimAtLeast&, const ClaimAtLeast&) = default;
};

/// Either the exact sumset or a claim that it has at least s elements.
using BudgetedSumset = std::variant<RealSet, ClaimAtLeast>;

inline constexpr double kSumsetBudget = 4.0;

/// Work units allowed to a budgeted sumset: ⌈c·s·log₂³(s+2)⌉.
std::uint64_t sumset_budget(std::size_t s, double constant = kSumsetBudget);

/// compute_sumset under a work meter. A returned set is always A + B; the
/// claim comes back only when the meter runs out, and is then correct with
/// high probability. Empty A or B gives the empty set. Throws ContractError
/// for s = 0.
BudgetedSumset sumset_with_budget(const RealSet& a, const RealSet& b, std::size_t s, Rng& rng,
                                  double constant = kSumsetBudget);

struct IntervalStats {
  std::size_t guesses = 0;
  /// Block count g of the guess whose result was returned.
  std::size_t blocks = 0;
  /// Block pairs whose sumset was computed, in that guess.
  std::size_t pairs = 0;
  /// Every partition used had rank-contiguous, ordered blocks.
  bool blocks_ordered = true;
};

/// (A + B) ∩ [lo, hi]. A and B are cut into g rank blocks and every block
/// pair whose range meets [lo, hi] is solved with compute_sumset. All
/// ⌈log₂(|A||B|)⌉ guesses |C| = 2^j (g = ⌈sqrt(|A||B|/2^j)⌉) are run; their
/// results are checked equal and the cheapest one is returned. Throws
/// ContractError when lo > hi.
RealSet interval_sumset(const RealSet& a, const RealSet& b, const Rat& lo, const Rat& hi,
                        Rng& rng, IntervalStats* stats = nullptr);

struct PrefixStats {
  /// Guess s that finished first.
  std::size_t guess = 0;
  /// Rounds of the time-slicing schedule.
  std::size_t rounds = 0;
  std::size_t nodes = 0;
  std::size_t claims = 0;
  std::size_t max_depth = 0;
  /// Some node went past the depth cap and was solved by brute force.
  bool depth_cap_hit = false;
  /// The inputs of the unfinished calls on every recursion level formed a
  /// staircase: A blocks increasing, B blocks decreasing.
  bool staircase = true;
};

/// (A + B) ∩ (-∞, u], exactly. After shifting both sets to start at 0,
/// each guess s = 2^0 … 2^{L-1} (L = ⌈log₂(|A|+|B|)⌉) runs the staircase
/// recursion: budgeted sumset with s; on a claim, split A at its median,
/// split B at u - max(A₁), solve A₁ + B₁ directly and recurse on (A₁, B₂)
/// and (A₂, B₁). The guesses share the work counter round-robin and the
/// first to finish wins.
RealSet prefix_sumset(const RealSet& a, const RealSet& b, const Rat& u, Rng& rng,
                      PrefixStats* stats = nullptr);

}  // namespace exsum

#endif  // EXSUM_RESTRICTED_HPP
