#ifndef EXSUM_HANKEL_HPP
#define EXSUM_HANKEL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "exsum/rat.hpp"

namespace exsum {

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Exact determinant of an integer matrix (row-major, n×n) by Bareiss
/// fraction-free elimination with row pivoting.
Int bareiss_determinant(std::vector<Int> matrix, std::size_t n);

/// Sign of det [sums[i+j]]_{i,j<dim}. Denominators are cleared with a
/// positive common multiple first, which leaves the sign unchanged.
/// Throws ContractError when sums has fewer than 2·dim − 1 entries.
Sign hankel_det_sign(std::span<const Rat> sums, std::size_t dim);

/// Whether [sums[i+j]]_{i,j<dim} is positive definite. Sylvester's
/// criterion on the ratios h_k = H_{k+1}/H_k of consecutive leading minors,
/// which the Chebyshev moment recursion produces in O(dim²) operations;
/// stops at the first h_k <= 0. Needs 2·dim − 1 entries.
bool hankel_positive_definite(std::span<const Rat> sums, std::size_t dim);

}  // namespace exsum

#endif  // EXSUM_HANKEL_HPP
