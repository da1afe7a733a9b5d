#ifndef EXSUM_PRONY_HPP
#define EXSUM_PRONY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "exsum/poly.hpp"
#include "exsum/rat.hpp"
#include "exsum/sets.hpp"
#include "exsum/work.hpp"

namespace exsum {

/// sums[i] = Σ^i(f) = Σ_x x^i·f(x).
using PowerSums = std::vector<Rat>;

/// Σ^0(f), …, Σ^{k-1}(f).
PowerSums power_sums(const SparseFn& f, std::size_t k);

/// Power sums of the indicator of s (plain power sums of the elements).
PowerSums power_sums(const RealSet& s, std::size_t k);

/// The function on `support` whose first |support| power sums equal
/// sums[0..|support|). Transposed Vandermonde solve by the master
/// polynomial ∏(X - a); zero values are dropped from the result.
/// Throws ContractError on repeated support points or too few sums.
SparseFn interpolate_from_power_sums(std::span<const Rat> sums, const RealSet& support);
SparseFn interpolate_from_power_sums(std::span<const Rat> sums, const std::vector<Rat>& support);

/// Power sums of f ⊛ g from those of f and g: entry m is
/// Σ_{i+j=m} C(m,i)·fs[i]·gs[j]. Computed as m!·[X^m](F·G) with the
/// exponential generating functions F = Σ fs[i]/i!·X^i, G likewise.
PowerSums convolve_power_sums(std::span<const Rat> fs, std::span<const Rat> gs);

/// Berlekamp–Massey: the monic Λ of least degree r with
/// Σ_l λ_l·seq[i+l] = 0 for 0 <= i < len - r. The zero sequence gives 1.
Poly minimal_polynomial(std::span<const Rat> seq);

/// True iff the shortest linear recurrence generating seq has order > s.
/// Stops Berlekamp–Massey as soon as the order passes s.
bool linear_complexity_exceeds(std::span<const Rat> seq, std::size_t s);

/// Σ^0, …, Σ^{k-1} of 1_A ⊛ 1_B.
PowerSums sumset_power_sums(const RealSet& a, const RealSet& b, std::size_t k);

/// ∏_{c ∈ A+B} (X - c), given t >= |A+B|. An empty A or B gives 1.
Poly lambda_of_sumset(const RealSet& a, const RealSet& b, std::size_t t);

/// True iff the nonnegative function with these power sums has more than s
/// support points: the (s+1)×(s+1) Hankel matrix [sums[i+j]] is positive
/// semidefinite, and its determinant is positive exactly then. For such a
/// matrix a kernel vector is the same thing as a recurrence of order <= s
/// on the first 2s+1 sums, so this runs linear_complexity_exceeds.
/// Needs 2s+1 sums.
bool sparsity_exceeds(std::span<const Rat> sums, std::size_t s);

/// |A+B|, deterministically. Both sets are first mapped to small integers
/// by the same exact affine map, which preserves the sumset size.
std::size_t sumset_size(const RealSet& a, const RealSet& b);

/// sumset_size's search on integer sets (normalize_pair output), also
/// returning Λ_{A+B}. The sparsity tests for s = max(|A|,|B|), max+1, …
/// share one online Berlekamp–Massey run; the first s that fails is t.
/// Throws ContractError for empty or non-integer sets.
struct SizeCertificate {
  std::size_t size;
  Poly lambda;
};
/// Charges one unit per power sum consumed, when a meter is given.
SizeCertificate sumset_size_certificate(const RealSet& a, const RealSet& b,
                                        WorkMeter* meter = nullptr);

/// Exact affine normalization shared by A and B: a = a0 + g·a', b = b0 + g·b'
/// with a', b' nonnegative integers, a0 = min A, b0 = min B and g the
/// rational gcd of all differences (1 when there are none).
struct AffineForm {
  Rat a0, b0, g;
  RealSet a, b;
};
AffineForm normalize_pair(const RealSet& a, const RealSet& b);

}  // namespace exsum

#endif  // EXSUM_PRONY_HPP
