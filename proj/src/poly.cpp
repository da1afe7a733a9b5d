#include "exsum/poly.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <utility>

#include "exsum/errors.hpp"

namespace exsum {

namespace {

constexpr std::size_t kKaratsubaCrossover = 32;
constexpr std::size_t kKroneckerBits = 256;

// out[i + j] += a[i] * b[j]; out must hold a.size() + b.size() - 1 entries.
void schoolbook_acc(std::span<const Int> a, std::span<const Int> b, std::span<Int> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

// Product of equal-length a and b (length n) added into out (length 2n-1).
void karatsuba(std::span<const Int> a, std::span<const Int> b, std::span<Int> out) {
  const std::size_t n = a.size();
  if (n <= kKaratsubaCrossover) {
    schoolbook_acc(a, b, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  auto a0 = a.subspan(0, lo), a1 = a.subspan(lo);
  auto b0 = b.subspan(0, lo), b1 = b.subspan(lo);

  std::vector<Int> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba(a0, b0, z0);
  karatsuba(a1, b1, z2);

  std::vector<Int> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] += a0[i];
    sb[i] += b0[i];
  }
  karatsuba(sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + lo] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * lo] += z2[i];
}

// Integer numerators over one common denominator.
Int clear_denominators(const std::vector<Rat>& c, std::vector<Int>& out) {
  Int den = 1;
  for (const Rat& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  out.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), c[i].get_den_mpz_t());
    out[i] *= c[i].get_num();
  }
  return den;
}

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { strip(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::linear(const Rat& root) { return Poly(std::vector<Rat>{-root, Rat(1)}); }

Poly Poly::from_roots(const std::vector<Rat>& roots) {
  if (roots.empty()) return constant(1);
  std::vector<Poly> level;
  level.reserve(roots.size());
  for (const Rat& r : roots) level.push_back(linear(r));
  while (level.size() > 1) {
    std::vector<Poly> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(poly_mul(level[i], level[i + 1]));
    }
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return std::move(level.front());
}

Rat Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Rat> c(a.coeffs());
  for (Rat& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Rat& c, const Poly& p) {
  if (c == 0) return Poly();
  std::vector<Rat> out(p.coeffs());
  for (Rat& x : out) x *= c;
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

namespace {

std::size_t max_bits(std::span<const Int> v) {
  std::size_t m = 0;
  for (const Int& x : v) {
    if (x != 0) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return m;
}

// Σ v[i]·2^(64·limbs·i) for nonnegative entries of at most `limbs` limbs.
Int pack(std::span<const Int> v, std::size_t limbs, int sign) {
  std::vector<mp_limb_t> buf(v.size() * limbs, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != sign) continue;
    std::size_t count = 0;
    mpz_export(buf.data() + i * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, v[i].get_mpz_t());
  }
  Int out;
  mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
  return out;
}

}  // namespace

std::vector<Int> int_poly_mul_karatsuba(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1);
  if (std::min(a.size(), b.size()) <= kKaratsubaCrossover) {
    schoolbook_acc(a, b, out);
    return out;
  }
  // Karatsuba on equal-length blocks of the shorter operand's size.
  const auto shorter = a.size() <= b.size() ? a : b;
  const auto longer = a.size() <= b.size() ? b : a;
  const std::size_t n = shorter.size();
  std::vector<Int> block(2 * n - 1);
  std::vector<Int> chunk(n);
  for (std::size_t start = 0; start < longer.size(); start += n) {
    const std::size_t len = std::min(n, longer.size() - start);
    std::fill(chunk.begin(), chunk.end(), Int(0));
    std::copy(longer.begin() + start, longer.begin() + start + len, chunk.begin());
    std::fill(block.begin(), block.end(), Int(0));
    karatsuba(shorter, chunk, block);
    const std::size_t used = std::min(block.size(), out.size() - start);
    for (std::size_t i = 0; i < used; ++i) out[start + i] += block[i];
  }
  return out;
}

std::vector<Int> int_poly_mul_kronecker(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  // Every product coefficient is below 2^(bits - 1) in absolute value.
  std::size_t bits = max_bits(a) + max_bits(b) + 2;
  for (std::size_t m = std::min(a.size(), b.size()); m > 0; m >>= 1) ++bits;
  const std::size_t limbs = (bits + 63) / 64;
  const Int pa = pack(a, limbs, 1) - pack(a, limbs, -1);
  const Int pb = pack(b, limbs, 1) - pack(b, limbs, -1);
  Int prod = pa * pb;
  const bool negative = sgn(prod) < 0;
  if (negative) prod = -prod;

  std::vector<mp_limb_t> buf(n * limbs + 1, 0);
  std::size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, prod.get_mpz_t());

  // Balanced digits: a digit at or above 2^(w-1) stands for digit - 2^w
  // with a carry into the next position.
  std::vector<Int> out(n);
  Int half, full;
  mpz_setbit(full.get_mpz_t(), limbs * 64);
  mpz_setbit(half.get_mpz_t(), limbs * 64 - 1);
  bool carry = false;
  for (std::size_t i = 0; i < n; ++i) {
    Int& digit = out[i];
    mpz_import(digit.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
    if (carry) ++digit;
    carry = digit >= half;
    if (carry) digit -= full;
    if (negative) digit = -digit;
  }
  return out;
}

std::vector<Int> int_poly_mul(std::span<const Int> a, std::span<const Int> b) {
  if (std::min(a.size(), b.size()) > kKaratsubaCrossover &&
      std::max(max_bits(a), max_bits(b)) > kKroneckerBits) {
    return int_poly_mul_kronecker(a, b);
  }
  return int_poly_mul_karatsuba(a, b);
}

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Int> a, b;
  const Int den = clear_denominators(p.coeffs(), a) * clear_denominators(q.coeffs(), b);
  std::vector<Int> prod = int_poly_mul(a, b);
  std::vector<Rat> out(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out[i] = Rat(prod[i], den);
    out[i].canonicalize();
  }
  return Poly(std::move(out));
}

DivRem poly_divrem(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw ContractError("polynomial division by zero");
  if (p.degree() < d.degree()) return {Poly(), p};
  std::vector<Rat> r(p.coeffs());
  const auto& dc = d.coeffs();
  const std::size_t dn = dc.size();
  const bool monic_divisor = d.is_monic();
  Rat inv_lead = 1 / d.leading();
  std::vector<Rat> q(r.size() - dn + 1);
  Rat tmp;
  for (std::size_t k = q.size(); k-- > 0;) {
    Rat& top = r[k + dn - 1];
    if (top == 0) continue;
    if (monic_divisor) {
      q[k] = top;
    } else {
      q[k] = top * inv_lead;
    }
    for (std::size_t j = 0; j + 1 < dn; ++j) {
      if (dc[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), q[k].get_mpq_t(), dc[j].get_mpq_t());
      mpq_sub(r[k + j].get_mpq_t(), r[k + j].get_mpq_t(), tmp.get_mpq_t());
    }
    top = 0;
  }
  r.resize(dn - 1);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_rem(const Poly& p, const Poly& d) { return poly_divrem(p, d).remainder; }

Poly poly_exact_div(const Poly& p, const Poly& d) {
  DivRem qr = poly_divrem(p, d);
  if (!qr.remainder.is_zero()) throw ContractError("inexact polynomial division");
  return std::move(qr.quotient);
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.is_monic()) return p;
  return (1 / p.leading()) * p;
}

namespace {

// Integer primitive part: denominators cleared, content divided out, sign
// made positive on the leading coefficient.
std::vector<Int> primitive_part(const std::vector<Rat>& c) {
  std::vector<Int> v;
  clear_denominators(c, v);
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(v.back()) < 0) g = -g;
  if (g != 1) {
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

void strip_int(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), it->get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// a <- remainder of lc(b)^k·a by b, with k the number of reduction steps.
void pseudo_rem(std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t nb = b.size();
  const Int& lead = b.back();
  const bool unit = lead == 1;
  Int factor;
  while (a.size() >= nb) {
    factor = a.back();
    const std::size_t shift = a.size() - nb;
    if (!unit) {
      for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] *= lead;
    }
    for (std::size_t j = 0; j + 1 < nb; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), factor.get_mpz_t(), b[j].get_mpz_t());
    }
    a.pop_back();
    strip_int(a);
  }
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw ContractError("gcd of two zero polynomials");
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  // Euclid over the integers: every remainder is reduced to its primitive
  // part, which keeps coefficients at subresultant size without the
  // per-coefficient gcds of rational arithmetic.
  std::vector<Int> a = primitive_part(p.coeffs());
  std::vector<Int> b = primitive_part(q.coeffs());
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Poly::constant(1);
    pseudo_rem(a, b);
    make_primitive(a);
    std::swap(a, b);
  }
  std::vector<Rat> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = Rat(a[i], a.back());
    out[i].canonicalize();
  }
  return Poly(std::move(out));
}

Poly derivative(const Poly& p) {
  if (p.degree() <= 0) return Poly();
  std::vector<Rat> c(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) c[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return Poly(std::move(c));
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw ContractError("squarefree decomposition of zero");
  std::vector<Poly> parts;
  Poly f = monic(p);
  if (f.degree() == 0) return parts;
  Poly df = derivative(f);
  Poly a = poly_gcd(f, df);
  Poly b = poly_exact_div(f, a);
  Poly c = poly_exact_div(df, a);
  Poly d = c - derivative(b);
  while (b.degree() > 0) {
    Poly s = poly_gcd(b, d);
    parts.push_back(s);
    b = poly_exact_div(b, s);
    if (b.degree() <= 0) break;
    c = poly_exact_div(d, s);
    d = c - derivative(b);
  }
  return parts;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) os << to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace exsum
