#include "exsum/prony.hpp"

#include <algorithm>

#include "exsum/errors.hpp"
#include "exsum/hankel.hpp"

namespace exsum {

PowerSums power_sums(const SparseFn& f, std::size_t k) {
  PowerSums sums(k);
  Rat term;
  for (const auto& [x, v] : f.entries()) {
    term = v;
    for (std::size_t i = 0; i < k; ++i) {
      sums[i] += term;
      term *= x;
    }
  }
  return sums;
}

PowerSums power_sums(const RealSet& s, std::size_t k) {
  PowerSums sums(k);
  Rat term;
  for (const Rat& x : s) {
    term = 1;
    for (std::size_t i = 0; i < k; ++i) {
      sums[i] += term;
      term *= x;
    }
  }
  return sums;
}

SparseFn interpolate_from_power_sums(std::span<const Rat> sums, const std::vector<Rat>& support) {
  const std::size_t n = support.size();
  if (sums.size() < n) throw ContractError("interpolation needs at least |support| power sums");
  {
    std::vector<Rat> sorted(support);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ContractError("interpolation support has a repeated point");
    }
  }
  if (n == 0) return {};
  // M(X) = ∏(X - a). For q_a = M/(X - a) = Σ q_j X^j we have
  // Σ_j q_j·sums[j] = Σ_b f(b)·q_a(b) = f(a)·M'(a).
  const Poly master = Poly::from_roots(support);
  const auto& mc = master.coeffs();
  std::vector<SparseFn::Entry> entries;
  entries.reserve(n);
  std::vector<Rat> q(n);
  Rat num, den;
  for (const Rat& a : support) {
    q[n - 1] = mc[n];
    for (std::size_t j = n - 1; j > 0; --j) q[j - 1] = mc[j] + a * q[j];
    num = 0;
    den = 0;
    for (std::size_t j = n; j-- > 0;) {
      num += q[j] * sums[j];
      den = den * a + q[j];
    }
    entries.emplace_back(a, num / den);
  }
  return SparseFn(std::move(entries));
}

SparseFn interpolate_from_power_sums(std::span<const Rat> sums, const RealSet& support) {
  return interpolate_from_power_sums(sums, support.elems());
}

namespace {

// D·x as integers for the lcm D of all denominators.
Int scale_to_integers(std::span<const Rat> xs, std::vector<Int>& out) {
  Int den = 1;
  for (const Rat& x : xs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  out.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), xs[i].get_den_mpz_t());
    out[i] *= xs[i].get_num();
  }
  return den;
}

}  // namespace

PowerSums convolve_power_sums(std::span<const Rat> fs, std::span<const Rat> gs) {
  if (fs.size() != gs.size()) throw ContractError("convolve_power_sums length mismatch");
  const std::size_t k = fs.size();
  if (k == 0) return {};
  // EGF coefficients fs[i]/i! brought to the common denominator (k-1)!:
  // F_i = D_f·fs[i]·(k-1)!/i!, so (F·G)_m·m!/((k-1)!²·D_f·D_g) is entry m.
  std::vector<Int> f_egf, g_egf;
  const Int den_f = scale_to_integers(fs, f_egf);
  const Int den_g = scale_to_integers(gs, g_egf);
  Int falling = 1;
  for (std::size_t i = k - 1;; --i) {
    f_egf[i] *= falling;
    g_egf[i] *= falling;
    if (i == 0) break;
    falling *= static_cast<unsigned long>(i);
  }
  const Int top_fact = falling;
  const std::vector<Int> prod = int_poly_mul(f_egf, g_egf);
  const Int den = top_fact * top_fact * den_f * den_g;
  PowerSums out(k);
  Int fact = 1;
  for (std::size_t m = 0; m < k; ++m) {
    if (m > 0) fact *= static_cast<unsigned long>(m);
    out[m] = Rat(prod[m] * fact, den);
    out[m].canonicalize();
  }
  return out;
}

namespace {

void remove_content(std::vector<Int>& v) {
  // Seed the gcd from two coefficients, then only take further gcds with
  // entries it does not already divide; divisibility tests are far cheaper
  // than gcds on large operands.
  Int g = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it != 0) {
      g = abs(*it);
      break;
    }
  }
  if (g == 0) return;
  if (v.front() != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.front().get_mpz_t());
  for (const Int& x : v) {
    if (g == 1) return;
    if (x != 0 && !mpz_divisible_p(x.get_mpz_t(), g.get_mpz_t())) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
  }
  if (g == 1) return;
  for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

struct Recurrence {
  std::vector<Int> connection;  // C(z) up to a nonzero scalar
  std::size_t length = 0;
};

// Online Berlekamp–Massey over the integers. Both connection polynomials
// are kept as primitive integer vectors, each only defined up to a scalar:
// the update C <- b·C - d·z^shift·B (with d, b the discrepancies of the
// scaled vectors) is the field update multiplied through by a constant.
class OnlineBM {
 public:
  void push(const Int& x) {
    seq_.push_back(x);
    const std::size_t n = seq_.size() - 1;
    d_ = 0;
    for (std::size_t i = 0; i < c_.size() && i <= n; ++i) {
      mpz_addmul(d_.get_mpz_t(), c_[i].get_mpz_t(), seq_[n - i].get_mpz_t());
    }
    if (d_ == 0) {
      ++shift_;
      return;
    }
    const bool grow = 2 * len_ <= n;
    std::vector<Int> saved;
    if (grow) saved = c_;
    if (c_.size() < prev_.size() + shift_) c_.resize(prev_.size() + shift_);
    for (Int& x : c_) x *= prev_disc_;
    for (std::size_t i = 0; i < prev_.size(); ++i) {
      mpz_submul(c_[i + shift_].get_mpz_t(), d_.get_mpz_t(), prev_[i].get_mpz_t());
    }
    remove_content(c_);
    if (grow) {
      len_ = n + 1 - len_;
      prev_ = std::move(saved);
      prev_disc_ = d_;
      shift_ = 1;
    } else {
      ++shift_;
    }
  }

  std::size_t terms() const { return seq_.size(); }
  std::size_t length() const { return len_; }

  Recurrence recurrence() const {
    std::vector<Int> c = c_;
    c.resize(std::max(c.size(), len_ + 1));
    return {std::move(c), len_};
  }

 private:
  std::vector<Int> seq_;
  std::vector<Int> c_{Int(1)}, prev_{Int(1)};
  Int prev_disc_ = 1;
  Int d_;
  std::size_t len_ = 0;
  std::size_t shift_ = 1;
};

Recurrence berlekamp_massey(const std::vector<Int>& seq, std::size_t stop_above) {
  OnlineBM bm;
  for (const Int& x : seq) {
    bm.push(x);
    if (bm.length() > stop_above) break;
  }
  return bm.recurrence();
}

std::vector<Int> integer_multiple(std::span<const Rat> seq) {
  std::vector<Int> out;
  scale_to_integers(seq, out);
  return out;
}

// Λ(X) = X^L·C(1/X), made monic by C_0.
Poly to_lambda(const Recurrence& rec) {
  std::vector<Rat> lambda(rec.length + 1);
  for (std::size_t i = 0; i <= rec.length; ++i) {
    lambda[rec.length - i] = Rat(rec.connection[i], rec.connection[0]);
    lambda[rec.length - i].canonicalize();
  }
  return Poly(std::move(lambda));
}

}  // namespace

Poly minimal_polynomial(std::span<const Rat> seq) {
  return to_lambda(berlekamp_massey(integer_multiple(seq), seq.size()));
}

bool linear_complexity_exceeds(std::span<const Rat> seq, std::size_t s) {
  return berlekamp_massey(integer_multiple(seq), s).length > s;
}

PowerSums sumset_power_sums(const RealSet& a, const RealSet& b, std::size_t k) {
  return convolve_power_sums(power_sums(a, k), power_sums(b, k));
}

Poly lambda_of_sumset(const RealSet& a, const RealSet& b, std::size_t t) {
  if (a.empty() || b.empty()) return Poly::constant(1);
  const PowerSums sums = sumset_power_sums(a, b, 2 * t);
  return minimal_polynomial(sums);
}

bool sparsity_exceeds(std::span<const Rat> sums, std::size_t s) {
  if (sums.size() < 2 * s + 1) throw ContractError("sparsity_exceeds needs 2s+1 power sums");
  return linear_complexity_exceeds(sums.first(2 * s + 1), s);
}

AffineForm normalize_pair(const RealSet& a, const RealSet& b) {
  if (a.empty() || b.empty()) throw ContractError("normalize_pair of an empty set");
  AffineForm form;
  form.a0 = a.min();
  form.b0 = b.min();
  std::vector<Rat> diffs;
  diffs.reserve(a.size() + b.size());
  for (const Rat& x : a) diffs.push_back(x - form.a0);
  for (const Rat& y : b) diffs.push_back(y - form.b0);
  form.g = rat_gcd(diffs);
  if (form.g == 0) form.g = 1;
  std::vector<Rat> na, nb;
  na.reserve(a.size());
  nb.reserve(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) na.push_back(diffs[i] / form.g);
  for (std::size_t j = 0; j < b.size(); ++j) nb.push_back(diffs[a.size() + j] / form.g);
  form.a = RealSet::from_sorted(std::move(na));
  form.b = RealSet::from_sorted(std::move(nb));
  return form;
}

SizeCertificate sumset_size_certificate(const RealSet& a, const RealSet& b, WorkMeter* meter) {
  if (a.empty() || b.empty()) throw ContractError("sumset_size of an empty set");
  // The sparsity test at s asks whether the first 2s+1 sums have linear
  // complexity <= s. One online Berlekamp–Massey run answers it for every
  // s >= max(|A|,|B|) in turn, so the first s that passes is t itself and
  // the connection polynomial at that point is Λ_{A+B}.
  for (const RealSet* x : {&a, &b}) {
    for (const Rat& v : *x) {
      if (v.get_den() != 1) throw ContractError("sumset_size_certificate needs integer sets");
    }
  }
  const std::size_t s0 = std::max(a.size(), b.size());
  OnlineBM bm;
  std::size_t have = 0;
  std::size_t chunk = 2 * s0 + 1;
  PowerSums sums;
  for (;;) {
    if (bm.terms() == have) {
      have = chunk;
      chunk *= 2;
      sums = sumset_power_sums(a, b, have);
    }
    if (meter != nullptr) meter->charge(1);
    bm.push(sums[bm.terms()].get_num());
    const std::size_t n = bm.terms();
    if (n % 2 == 1 && n >= 2 * s0 + 1 && bm.length() <= n / 2) {
      const Recurrence rec = bm.recurrence();
      return {rec.length, to_lambda(rec)};
    }
  }
}

std::size_t sumset_size(const RealSet& a, const RealSet& b) {
  if (a.empty() || b.empty()) throw ContractError("sumset_size of an empty set");
  const AffineForm form = normalize_pair(a, b);
  return sumset_size_certificate(form.a, form.b).size;
}

}  // namespace exsum
