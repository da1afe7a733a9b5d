#include "exsum/threesum.hpp"

#include <algorithm>
#include <cmath>

#include "exsum/errors.hpp"
#include "exsum/sumset.hpp"

namespace exsum {

BsgDecomposition bsg_decompose(const RealSet& a, const RealSet& b, const RealSet& c,
                               const Rat& alpha, Rng&) {
  if (sgn(alpha) <= 0 || alpha >= 1) throw ContractError("bsg_decompose needs 0 < alpha < 1");
  BsgDecomposition d;
  d.alpha = alpha;
  for (const Rat& x : a) {
    for (const Rat& y : b) {
      if (c.contains(x + y)) d.remainder.emplace_back(x, y);
    }
  }
  return d;
}

bool covers_all_solutions(const BsgDecomposition& d, const RealSet& a, const RealSet& b,
                          const RealSet& c) {
  std::vector<std::pair<Rat, Rat>> rem = d.remainder;
  std::sort(rem.begin(), rem.end());
  for (const Rat& x : a) {
    for (const Rat& y : b) {
      if (!c.contains(x + y)) continue;
      if (std::binary_search(rem.begin(), rem.end(), std::make_pair(x, y))) continue;
      const bool in_pair = std::any_of(d.pairs.begin(), d.pairs.end(), [&](const auto& p) {
        return p.first.contains(x) && p.second.contains(y);
      });
      if (!in_pair) return false;
    }
  }
  return true;
}

Rat default_alpha(std::size_t n) {
  if (n <= 1) return Rat(1, 2);
  const double alpha = std::pow(static_cast<double>(n), -1.0 / 7.0);
  Rat out(static_cast<long>(std::floor(alpha * 1048576.0)), 1048576);
  out.canonicalize();
  return out;
}

ThreeSumIndex preprocess(const RealSet& a, const RealSet& b, const RealSet& c, const Rat& alpha,
                         Rng& rng, const BsgProvider& provider) {
  ThreeSumIndex idx{a, b, c, provider(a, b, c, alpha, rng)};
  return idx;
}

ThreeSumIndex preprocess(const RealSet& a, const RealSet& b, const RealSet& c, Rng& rng) {
  const std::size_t n = std::max({a.size(), b.size(), c.size()});
  return preprocess(a, b, c, default_alpha(n), rng);
}

bool query(const ThreeSumIndex& idx, const RealSet& aq, const RealSet& bq, const RealSet& cq,
           Rng& rng) {
  if (!aq.is_subset_of(idx.a) || !bq.is_subset_of(idx.b) || !cq.is_subset_of(idx.c)) {
    throw ContractError("query sets must be subsets of the preprocessed sets");
  }
  if (aq.empty() || bq.empty() || cq.empty()) return false;
  for (const auto& [x, y] : idx.decomposition.remainder) {
    if (aq.contains(x) && bq.contains(y) && cq.contains(x + y)) return true;
  }
  for (const auto& [ai, bi] : idx.decomposition.pairs) {
    const RealSet a2 = set_intersection(ai, aq);
    const RealSet b2 = set_intersection(bi, bq);
    if (a2.empty() || b2.empty()) continue;
    const RealSet sums = compute_sumset(a2, b2, rng);
    if (!set_intersection(sums, cq).empty()) return true;
  }
  return false;
}

}  // namespace exsum
