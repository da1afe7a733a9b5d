#ifndef EXSUM_CONSTELLATION_HPP
#define EXSUM_CONSTELLATION_HPP

#include <cstddef>
#include <vector>

#include "exsum/rng.hpp"
#include "exsum/sets.hpp"
#include "exsum/work.hpp"

namespace exsum {

/// {s in S : A + s ⊆ B}. Evaluates the Baur–Strassen derivative of the
/// shift-count circuit at all-ones inputs and keeps s iff ∂z/∂y_s = |A|.
/// An empty A keeps all of S. The rng only drives the internal sumset.
RealSet filter_shifts(const RealSet& a, const RealSet& b, const RealSet& s, Rng& rng);
RealSet filter_shifts(const RealSet& a, const RealSet& b, const RealSet& s);

inline constexpr double kConstellationBudget = 8.0;
inline constexpr std::size_t kConstellationRestarts = 8;

struct ConstellationStats {
  std::size_t restarts = 0;
  /// |S_l| for l = L+1 down to 0 in the run that finished.
  std::vector<std::size_t> level_sizes;
  std::size_t work = 0;
};

struct ConstellationOptions {
  /// A run is interrupted once its filter work passes
  /// budget·(|A|+|B|)·log₂³(|A|+|B|+2) and restarted with fresh randomness.
  double budget = kConstellationBudget;
  /// After this many interruptions the next run goes unbudgeted.
  std::size_t max_restarts = kConstellationRestarts;
  ConstellationStats* stats = nullptr;
};

/// {s : A + s ⊆ B}, exactly. Starts from S = B - min A and filters level by
/// level with A subsampled at rate 2^-l, l = L down to 0,
/// L = ⌈log₂(|A|+|B|)⌉. Throws ContractError for empty A or B.
RealSet constellation(const RealSet& a, const RealSet& b, Rng& rng,
                      const ConstellationOptions& options = {});

/// Points in ℚ^d as coordinate vectors.
using PointSet = std::vector<std::vector<Rat>>;

/// All vectors v with A + v ⊆ B in d dimensions. Each coordinate projection
/// runs the one-dimensional solver; candidates b - a₀ must lie in every
/// coordinate's shift set and are then checked directly.
PointSet constellation_nd(const PointSet& a, const PointSet& b, Rng& rng);

}  // namespace exsum

#endif  // EXSUM_CONSTELLATION_HPP
