#include "exsum/oracle.hpp"

#include <map>
#include <set>

namespace exsum::oracle {

namespace {

RealSet from_set(const std::set<Rat>& s) {
  return RealSet::from_sorted(std::vector<Rat>(s.begin(), s.end()));
}

}  // namespace

RealSet brute_sumset(const RealSet& a, const RealSet& b) {
  std::set<Rat> out;
  for (const Rat& x : a) {
    for (const Rat& y : b) out.insert(x + y);
  }
  return from_set(out);
}

SparseFn brute_convolve(const SparseFn& f, const SparseFn& g) {
  std::map<Rat, Rat> acc;
  for (const auto& [x, u] : f.entries()) {
    for (const auto& [y, v] : g.entries()) acc[x + y] += u * v;
  }
  std::vector<SparseFn::Entry> entries;
  for (const auto& [z, w] : acc) {
    if (w != 0) entries.emplace_back(z, w);
  }
  return SparseFn(std::move(entries));
}

RealSet brute_constellation(const RealSet& a, const RealSet& b) {
  std::set<Rat> bs(b.begin(), b.end());
  std::set<Rat> out;
  if (a.empty()) return {};
  const Rat& a0 = *a.begin();
  for (const Rat& y : b) {
    const Rat s = y - a0;
    bool ok = true;
    for (const Rat& x : a) {
      if (bs.count(x + s) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(s);
  }
  return from_set(out);
}

RealSet brute_capped(const RatMultiset& x, const Rat& t) {
  std::set<Rat> sums{Rat(0)};
  if (t < 0) return {};
  for (const auto& item : x.items()) {
    for (std::size_t k = 0; k < item.multiplicity; ++k) {
      std::set<Rat> next = sums;
      for (const Rat& s : sums) {
        const Rat v = s + item.value;
        if (v <= t) next.insert(v);
      }
      sums.swap(next);
    }
  }
  return from_set(sums);
}

RealSet brute_subset_sums(const RatMultiset& x) {
  std::set<Rat> sums{Rat(0)};
  for (const auto& item : x.items()) {
    for (std::size_t k = 0; k < item.multiplicity; ++k) {
      std::set<Rat> next = sums;
      for (const Rat& s : sums) next.insert(s + item.value);
      sums.swap(next);
    }
  }
  return from_set(sums);
}

bool brute_3sum(const RealSet& a, const RealSet& b, const RealSet& c) {
  std::set<Rat> cs(c.begin(), c.end());
  for (const Rat& x : a) {
    for (const Rat& y : b) {
      if (cs.count(x + y) != 0) return true;
    }
  }
  return false;
}

Poly brute_min_poly(const RealSet& support) {
  std::vector<Rat> coeffs{Rat(1)};
  for (const Rat& r : support) {
    std::vector<Rat> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs.swap(next);
  }
  return Poly(std::move(coeffs));
}

}  // namespace exsum::oracle
