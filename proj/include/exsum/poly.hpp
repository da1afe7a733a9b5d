#ifndef EXSUM_POLY_HPP
#define EXSUM_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "exsum/rat.hpp"

namespace exsum {

/// Dense univariate polynomial over Rat. Coefficients are stored lowest
/// degree first with trailing zeros stripped, so the zero polynomial has
/// no coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  /// X - root.
  static Poly linear(const Rat& root);
  /// ∏ (X - r) over the given roots, by a balanced product tree.
  static Poly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of X^i; zero beyond the degree.
  Rat coeff(std::size_t i) const;
  const Rat& leading() const { return coeffs_.back(); }

  Rat eval(const Rat& x) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void strip();
  std::vector<Rat> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Rat& c, const Poly& p);
Poly operator*(const Poly& a, const Poly& b);

/// Exact product. Denominators are cleared first, then int_poly_mul.
Poly poly_mul(const Poly& p, const Poly& q);

/// Integer polynomial product: schoolbook up to 32 coefficients, Karatsuba
/// above, and Kronecker substitution into a single GMP multiplication once
/// both operands are long and some coefficient exceeds 256 bits.
std::vector<Int> int_poly_mul(std::span<const Int> a, std::span<const Int> b);
std::vector<Int> int_poly_mul_karatsuba(std::span<const Int> a, std::span<const Int> b);
std::vector<Int> int_poly_mul_kronecker(std::span<const Int> a, std::span<const Int> b);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// p = quotient·d + remainder with deg remainder < deg d.
/// Throws ContractError when d is zero.
DivRem poly_divrem(const Poly& p, const Poly& d);
Poly poly_rem(const Poly& p, const Poly& d);
/// Quotient of an exact division; throws ContractError on a nonzero remainder.
Poly poly_exact_div(const Poly& p, const Poly& d);

/// Monic gcd by the Euclidean algorithm with a monic normalization after
/// every step. gcd(p, 0) = monic(p). Throws ContractError when both are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

/// p scaled to leading coefficient 1 (zero stays zero).
Poly monic(const Poly& p);
Poly derivative(const Poly& p);

/// Squarefree decomposition (Yun): returns S_1, S_2, … with
/// monic(p) = ∏ S_i^i, each S_i squarefree and pairwise coprime. Constant
/// S_i are kept so the exponent is the index + 1.
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Human-readable form, highest degree first, e.g. "X^2 - 3*X + 2".
std::string to_string(const Poly& p);

}  // namespace exsum

#endif  // EXSUM_POLY_HPP
