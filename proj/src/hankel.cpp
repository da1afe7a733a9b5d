#include "exsum/hankel.hpp"

#include <utility>

#include "exsum/errors.hpp"

namespace exsum {

Int bareiss_determinant(std::vector<Int> m, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
  bool negate = false;
  Int prev = 1;
  Int tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    const Int& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int& cell = at(i, j);
        cell *= pivot;
        mpz_mul(tmp.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
        cell -= tmp;
        mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  Int det = at(n - 1, n - 1);
  return negate ? Int(-det) : det;
}

Sign hankel_det_sign(std::span<const Rat> sums, std::size_t dim) {
  if (dim == 0) return Sign::positive;
  if (sums.size() < 2 * dim - 1) {
    throw ContractError("hankel_det_sign needs 2*dim-1 power sums");
  }
  Int lcm = 1;
  for (std::size_t k = 0; k < 2 * dim - 1; ++k) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), sums[k].get_den_mpz_t());
  }
  std::vector<Int> scaled(2 * dim - 1);
  for (std::size_t k = 0; k < scaled.size(); ++k) {
    Int factor = lcm / sums[k].get_den();
    scaled[k] = sums[k].get_num() * factor;
  }
  std::vector<Int> m(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m[i * dim + j] = scaled[i + j];
  }
  const int s = sgn(bareiss_determinant(std::move(m), dim));
  return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
}

bool hankel_positive_definite(std::span<const Rat> sums, std::size_t dim) {
  if (dim == 0) return true;
  if (sums.size() < 2 * dim - 1) {
    throw ContractError("hankel_positive_definite needs 2*dim-1 power sums");
  }
  const std::size_t top = 2 * dim - 2;
  // sigma_k[l] = L(p_k·x^l) for the monic orthogonal polynomials p_k of the
  // functional L(x^l) = sums[l]; only l in [k, top - k] is ever needed.
  std::vector<Rat> before(top + 1), prev(sums.begin(), sums.begin() + top + 1), cur(top + 1);
  if (sgn(prev[0]) <= 0) return false;
  if (dim == 1) return true;
  Rat alpha = prev[1] / prev[0];
  Rat beta = prev[0];
  Rat tmp;
  bool have_before = false;
  for (std::size_t k = 1; k < dim; ++k) {
    for (std::size_t l = k; l + k <= top; ++l) {
      cur[l] = prev[l + 1];
      tmp = alpha * prev[l];
      cur[l] -= tmp;
      if (have_before) {
        tmp = beta * before[l];
        cur[l] -= tmp;
      }
    }
    if (sgn(cur[k]) <= 0) return false;
    if (k + 1 < dim) {
      alpha = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
      beta = cur[k] / prev[k - 1];
    }
    std::swap(before, prev);
    std::swap(prev, cur);
    have_before = true;
  }
  return true;
}

}  // namespace exsum
