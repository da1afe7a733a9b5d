#ifndef EXSUM_SUMSET_HPP
#define EXSUM_SUMSET_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "exsum/coprime.hpp"
#include "exsum/rng.hpp"
#include "exsum/sets.hpp"
#include "exsum/work.hpp"

namespace exsum {

inline constexpr double kRestrictionConstant = 160.0;
inline constexpr std::size_t kRetryCap = 100;

struct RestrictionFamily {
  std::vector<std::pair<RealSet, RealSet>> pairs;
  std::size_t size() const { return pairs.size(); }
};

/// m = ⌈c·L·log₂ n⌉ with L = ⌈log₂|A|⌉ + 1 and n = |A| + |B|.
std::size_t restriction_count(std::size_t a_size, std::size_t b_size,
                              double constant = kRestrictionConstant);

/// Draws restriction pairs one at a time. Pair i keeps each element of A
/// with probability 2^-l for a uniform l in [0, L) and each element of B
/// with probability 1/2.
class RestrictionSampler {
 public:
  RestrictionSampler(const RealSet& a, const RealSet& b, Rng& rng);
  std::pair<RealSet, RealSet> next();

 private:
  const RealSet& a_;
  const RealSet& b_;
  Rng& rng_;
  unsigned levels_;
};

RestrictionFamily random_restrictions(const RealSet& a, const RealSet& b, Rng& rng,
                                      double constant = kRestrictionConstant);

struct SumsetStats {
  std::size_t attempts = 0;      // restriction families drawn
  std::size_t restrictions = 0;  // Λ_i built, over all attempts
  std::size_t size = 0;          // |A + B|
};

struct SumsetOptions {
  double restriction_constant = kRestrictionConstant;
  std::size_t retry_cap = kRetryCap;
  /// Λ_i are folded into the basis in batches of this many, growing by
  /// half each time; verification runs after every batch.
  std::size_t first_batch = 8;
  unsigned threads = 1;
  WorkMeter* meter = nullptr;
  SumsetStats* stats = nullptr;
};

/// True iff every member is linear and there are exactly t of them; the
/// roots are then exactly A + B.
bool basis_certifies(const CoprimeBasis& basis, std::size_t t);

/// A + B, always exact. Throws ContractError for empty input and
/// RetryCapError when every one of retry_cap families fails verification.
RealSet compute_sumset(const RealSet& a, const RealSet& b, Rng& rng,
                       const SumsetOptions& options = {});

/// f ⊛ g for strictly positive f and g; throws ContractError otherwise.
SparseFn convolve(const SparseFn& f, const SparseFn& g, Rng& rng,
                  const SumsetOptions& options = {});

}  // namespace exsum

#endif  // EXSUM_SUMSET_HPP
