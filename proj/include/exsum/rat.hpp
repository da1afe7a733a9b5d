#ifndef EXSUM_RAT_HPP
#define EXSUM_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace exsum {

/// Arbitrary-precision rational. GMP keeps every mpq_class in canonical
/// form (gcd 1, positive denominator) after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses one token: `p/q`, an integer `p`, or a decimal `±d.d…d`.
/// Decimals are converted exactly (d digits → numerator / 10^d).
/// Throws ParseError on anything else, including a zero denominator.
Rat parse_rat(std::string_view token);

/// Canonical text form: `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rat& x);

/// Rational gcd: the largest g > 0 with every x/g an integer. Zero when
/// all inputs are zero.
Rat rat_gcd(const std::vector<Rat>& xs);

/// x^k by repeated squaring.
Rat pow(const Rat& x, unsigned long k);

}  // namespace exsum

#endif  // EXSUM_RAT_HPP
