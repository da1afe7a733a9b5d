#ifndef EXSUM_COPRIME_HPP
#define EXSUM_COPRIME_HPP

#include <optional>
#include <vector>

#include "exsum/poly.hpp"

namespace exsum {

/// Pairwise coprime, monic, nonconstant, squarefree polynomials kept in a
/// canonical order (degree, then coefficients from the top). Each source
/// polynomial is c·∏ Q^e over members Q.
struct CoprimeBasis {
  std::vector<Poly> polys;

  std::size_t size() const { return polys.size(); }
  bool empty() const { return polys.empty(); }
  std::size_t total_degree() const;

  friend bool operator==(const CoprimeBasis&, const CoprimeBasis&) = default;
};

/// Strict total order used for canonical basis order.
bool poly_less(const Poly& a, const Poly& b);

/// Adds p to the source set. p is split into its squarefree layers
/// (Yun), and each layer P is merged in by
/// {gcd(P,Q), Q/gcd(P,Q) : Q in basis} ∪ {P/gcd(P, ∏Q)}, constants dropped.
/// P mod Q for all members comes from one remainder tree, and
/// gcd(P, ∏Q) = ∏ gcd(P mod Q, Q) because the members are coprime.
/// Throws ContractError for p = 0.
CoprimeBasis extend_basis(const Poly& p, const CoprimeBasis& basis);

/// Basis of the union of both source sets. Member i of q2 gets the
/// L-bit name i (L = ⌈log₂|q2|⌉, at least 1); q1 is extended by the 2L
/// products R_{l,b} = ∏ {Q in q2 : bit l of its name is b}.
CoprimeBasis merge_bases(const CoprimeBasis& q1, const CoprimeBasis& q2);

/// Divide and conquer: bases of both halves, then merge_bases. Constant
/// inputs are ignored; a zero input throws ContractError.
CoprimeBasis coprime_basis(const std::vector<Poly>& ps);

/// Exponents e_i with p = c·∏ basis[i]^e_i, found by trial division;
/// nullopt when p does not factor over the basis.
std::optional<std::vector<int>> factor_over(const Poly& p, const CoprimeBasis& basis);

}  // namespace exsum

#endif  // EXSUM_COPRIME_HPP
