#ifndef EXSUM_ORACLE_HPP
#define EXSUM_ORACLE_HPP

#include "exsum/poly.hpp"
#include "exsum/sets.hpp"

/// Brute-force references. Nothing here calls into the algorithmic modules;
/// results are built from plain loops over std containers.
namespace exsum::oracle {

RealSet brute_sumset(const RealSet& a, const RealSet& b);

SparseFn brute_convolve(const SparseFn& f, const SparseFn& g);

/// {s : A + s ⊆ B}; every candidate b - a₀ is checked element by element.
RealSet brute_constellation(const RealSet& a, const RealSet& b);

/// {Σ(X') : X' ⊆ X, Σ(X') <= t} by a DP over a growing sum set.
RealSet brute_capped(const RatMultiset& x, const Rat& t);

/// All subset sums, no cap.
RealSet brute_subset_sums(const RatMultiset& x);

/// ∃ a in A, b in B, c in C with a + b = c.
bool brute_3sum(const RealSet& a, const RealSet& b, const RealSet& c);

/// ∏_{a in support} (X - a), expanded one factor at a time.
Poly brute_min_poly(const RealSet& support);

}  // namespace exsum::oracle

#endif  // EXSUM_ORACLE_HPP
