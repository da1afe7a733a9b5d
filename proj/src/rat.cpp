#include "exsum/rat.hpp"

#include <cctype>

#include "exsum/errors.hpp"

namespace exsum {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rat result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(token) + "'");
    }
    Int q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
    result = Rat(Int(std::string(num), 10), q);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal '" + std::string(token) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rat(Int(digits, 10), scale);
    result.canonicalize();
  } else {
    if (!all_digits(body)) {
      throw ParseError("malformed integer '" + std::string(token) + "'");
    }
    result = Rat(Int(std::string(body), 10));
  }
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rat& x) { return x.get_str(10); }

Rat rat_gcd(const std::vector<Rat>& xs) {
  Int num = 0;
  Int den = 1;
  for (const Rat& x : xs) {
    if (x == 0) continue;
    Int n = abs(x.get_num());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  Rat g(num, den);
  g.canonicalize();
  return g;
}

Rat pow(const Rat& x, unsigned long k) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), k);
  return r;
}

}  // namespace exsum
