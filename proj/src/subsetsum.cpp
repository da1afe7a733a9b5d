#include "exsum/subsetsum.hpp"

#include <algorithm>
#include <cmath>

#include "exsum/errors.hpp"
#include "exsum/restricted.hpp"
#include "exsum/sumset.hpp"

namespace exsum {

namespace {

void require_nonnegative(const RatMultiset& x) {
  for (const auto& item : x.items()) {
    if (sgn(item.value) < 0) throw ContractError("subset sums need nonnegative values");
  }
}

void require_window(const RatMultiset& a, const Rat& u) {
  if (sgn(u) <= 0) throw ContractError("capped subset sums need u > 0");
  for (const auto& item : a.items()) {
    if (item.value < u || item.value > 2 * u) throw ContractError("value outside [u, 2u]");
  }
}

// Leaves {0, c·v} from power-of-two bundles of each multiplicity.
std::vector<RealSet> bundle_leaves(const RatMultiset& x) {
  std::vector<RealSet> leaves;
  for (const auto& [v, m] : x.items()) {
    if (v == 0) continue;
    std::size_t left = m;
    for (std::size_t c = 1; left > 0; c *= 2) {
      const std::size_t take = std::min(c, left);
      leaves.push_back(RealSet::from_sorted({Rat(0), v * static_cast<unsigned long>(take)}));
      left -= take;
    }
  }
  return leaves;
}

RealSet merge_all(const std::vector<RealSet>& sets, std::size_t lo, std::size_t hi, Rng& rng,
                  SubsetSumStats* stats) {
  if (hi - lo == 1) return sets[lo];
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  const RealSet left = merge_all(sets, lo, mid, rng, stats);
  const RealSet right = merge_all(sets, mid, hi, rng, stats);
  RealSet out = compute_sumset(left, right, rng);
  if (stats != nullptr) {
    ++stats->merges;
    if (out.size() + 1 < left.size() + right.size()) stats->lower_bound_held = false;
  }
  return out;
}

// Independent uniform part for every copy of every item.
std::vector<RatMultiset> random_parts(const RatMultiset& a, std::size_t parts, Rng& rng) {
  std::vector<std::vector<Rat>> buckets(parts);
  for (const Rat& v : a.expanded()) buckets[rng.uniform(parts)].push_back(v);
  std::vector<RatMultiset> out;
  for (auto& b : buckets) {
    if (!b.empty()) out.emplace_back(b);
  }
  return out;
}

// ((S₁ ∪ {0}) + (S₂ ∪ {0}) + …) ∩ [0, t] as a balanced tree of prefix sumsets.
RealSet fold_tree(std::vector<RealSet> sets, const Rat& t, Rng& rng) {
  if (sets.empty()) return RealSet{Rat(0)};
  for (RealSet& s : sets) s = set_union(clip_above(s, t), RealSet{Rat(0)});
  while (sets.size() > 1) {
    std::vector<RealSet> next;
    for (std::size_t i = 0; i + 1 < sets.size(); i += 2) {
      next.push_back(prefix_sumset(sets[i], sets[i + 1], t, rng));
    }
    if (sets.size() % 2 == 1) next.push_back(std::move(sets.back()));
    sets = std::move(next);
  }
  return sets.front();
}

std::size_t floor_ratio(const Rat& t, const Rat& u) {
  const Rat r = t / u;
  const Int q = r.get_num() / r.get_den();
  return q.get_ui();
}

}  // namespace

RealSet all_subset_sums(const RatMultiset& x, Rng& rng, SubsetSumStats* stats) {
  require_nonnegative(x);
  const std::vector<RealSet> leaves = bundle_leaves(x);
  if (leaves.empty()) return RealSet{Rat(0)};
  return merge_all(leaves, 0, leaves.size(), rng, stats);
}

RealSet capped_level2(const RatMultiset& a, const Rat& u, const Rat& t, Rng& rng) {
  require_window(a, u);
  if (sgn(t) < 0) return {};
  const std::size_t k = floor_ratio(t, u);
  if (k == 0 || a.empty()) return RealSet{Rat(0)};
  RealSet s{Rat(0)};
  for (const RatMultiset& part : random_parts(a, 2 * k * k, rng)) {
    std::vector<Rat> vals = part.expanded();
    vals.push_back(0);
    s = prefix_sumset(s, RealSet(std::move(vals)), t, rng);
  }
  return s;
}

RealSet capped_level1(const RatMultiset& a, const Rat& u, const Rat& t, Rng& rng) {
  require_window(a, u);
  if (sgn(t) < 0) return {};
  const std::size_t n = a.count();
  if (n == 0) return RealSet{Rat(0)};
  if (u * static_cast<unsigned long>(2 * n) <= t) return all_subset_sums(a, rng);
  const std::size_t k = floor_ratio(t, u);
  if (k == 0) return RealSet{Rat(0)};
  const double lg = std::max(1.0, std::log2(static_cast<double>(k)));
  Rat t_inner = u * Rat(static_cast<long>(std::ceil(12 * lg)));
  if (t_inner > t) t_inner = t;
  const auto reps = static_cast<std::size_t>(std::ceil(4 * std::log2(static_cast<double>(k) + 1)));
  std::vector<RealSet> leaves;
  for (const RatMultiset& part : random_parts(a, k, rng)) {
    RealSet acc;
    for (std::size_t r = 0; r < reps; ++r) acc = set_union(acc, capped_level2(part, u, t_inner, rng));
    leaves.push_back(std::move(acc));
  }
  return fold_tree(std::move(leaves), t, rng);
}

namespace {

RealSet capped_rec(const RatMultiset& x, const Rat& t, Rng& rng, const CappedOptions& options) {
  // Halves are solved at t/2, so items above the current cap can appear.
  std::vector<Rat> all;
  for (const Rat& v : x.expanded()) {
    if (v <= t) all.push_back(v);
  }
  const std::size_t n = all.size();
  if (n == 0) return RealSet{Rat(0)};
  if (n == 1) return set_union(RealSet{Rat(0)}, RealSet{all.front()});
  // Arbitrary halves, solved at t/2, only to size the boosting.
  const std::vector<Rat> h1(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n / 2));
  const std::vector<Rat> h2(all.begin() + static_cast<std::ptrdiff_t>(n / 2), all.end());
  const Rat half_t = t / 2;
  const double s1 = static_cast<double>(capped_rec(RatMultiset(h1), half_t, rng, options).size());
  const double s2 = static_cast<double>(capped_rec(RatMultiset(h2), half_t, rng, options).size());
  const double dn = static_cast<double>(n);
  const auto reps = static_cast<std::size_t>(std::max(
      1.0, std::ceil(options.boost_exponent * std::log2(dn) + 2 * std::log2(s1) + 2 * std::log2(s2))));

  unsigned levels = 0;
  while ((std::size_t{1} << levels) < n) ++levels;
  std::vector<std::vector<Rat>> layer(levels + 1);
  std::vector<Rat> tail;
  for (const Rat& v : all) {
    // v in (t/2^{l+1}, t/2^l] for the smallest such l, or the tail.
    Rat bound = t;
    unsigned l = 0;
    while (l <= levels && v <= bound / 2) {
      bound /= 2;
      ++l;
    }
    if (l > levels) tail.push_back(v);
    else layer[l].push_back(v);
  }
  std::vector<RealSet> pieces;
  pieces.push_back(all_subset_sums(RatMultiset(tail), rng, options.stats));
  Rat width = t / 2;
  for (unsigned l = 0; l <= levels; ++l, width /= 2) {
    if (layer[l].empty()) continue;
    const RatMultiset part(layer[l]);
    RealSet acc;
    for (std::size_t r = 0; r < reps; ++r) acc = set_union(acc, capped_level1(part, width, t, rng));
    pieces.push_back(std::move(acc));
  }
  RealSet out = clip_above(pieces.front(), t);
  for (std::size_t i = 1; i < pieces.size(); ++i) out = prefix_sumset(out, pieces[i], t, rng);
  return out;
}

}  // namespace

RealSet capped_subset_sums(const RatMultiset& x, const Rat& t, Rng& rng,
                           const CappedOptions& options) {
  if (sgn(t) < 0) throw ContractError("capped_subset_sums needs t >= 0");
  require_nonnegative(x);
  if (t == 0) return RealSet{Rat(0)};
  std::vector<RatMultiset::Item> kept;
  for (const auto& [v, m] : x.items()) {
    if (v == 0 || v > t) continue;
    kept.push_back({v, std::min(m, floor_ratio(t, v))});
  }
  const RatMultiset reduced(std::move(kept));
  RealSet out = capped_rec(reduced, t, rng, options);
  if (options.stats != nullptr && reduced.count() > out.size()) {
    options.stats->preprocess_bound_held = false;
  }
  return out;
}

}  // namespace exsum
