#include "exsum/restricted.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "exsum/errors.hpp"
#include "exsum/sumset.hpp"
#include "exsum/work.hpp"

namespace exsum {

namespace {

unsigned ceil_log2(std::size_t n) {
  unsigned l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  return l;
}

RealSet slice(const RealSet& s, std::size_t lo, std::size_t hi) {
  return RealSet::from_sorted(std::vector<Rat>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                               s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

RealSet brute_clipped(const RealSet& a, const RealSet& b, const Rat& hi) {
  std::vector<Rat> out;
  for (const Rat& x : a) {
    for (const Rat& y : b) {
      Rat z = x + y;
      if (z <= hi) out.push_back(std::move(z));
    }
  }
  return RealSet(std::move(out));
}

RealSet exact_sumset(const RealSet& a, const RealSet& b, Rng& rng) {
  if (a.empty() || b.empty()) return {};
  return compute_sumset(a, b, rng);
}

// One staircase run for a fixed guess s on A, B ⊆ [0, u].
class Staircase {
 public:
  Staircase(const Rat& u, std::size_t s, std::size_t depth_cap, Rng& rng, WorkMeter& meter,
            PrefixStats& stats)
      : u_(u), s_(s), depth_cap_(depth_cap), rng_(rng), meter_(meter), stats_(stats) {}

  RealSet solve(const RealSet& a, const RealSet& b, std::size_t depth) {
    if (a.empty() || b.empty()) return {};
    meter_.charge(1);
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (depth > depth_cap_) {
      stats_.depth_cap_hit = true;
      meter_.charge(a.size() * b.size());
      return brute_clipped(a, b, u_);
    }
    BudgetedSumset r = sumset_with_budget(a, b, s_, rng_);
    if (auto* set = std::get_if<RealSet>(&r)) {
      meter_.charge(set->size());
      return clip_above(*set, u_);
    }
    ++stats_.claims;
    record(depth, a, b);
    const std::size_t half = (a.size() + 1) / 2;
    const RealSet a1 = slice(a, 0, half);
    const RealSet a2 = slice(a, half, a.size());
    const Rat cut = u_ - a1.max();
    const auto split = std::upper_bound(b.begin(), b.end(), cut) - b.begin();
    const RealSet b1 = slice(b, 0, static_cast<std::size_t>(split));
    const RealSet b2 = slice(b, static_cast<std::size_t>(split), b.size());
    RealSet low = exact_sumset(a1, b1, rng_);
    meter_.charge(low.size());
    RealSet out = set_union(low, solve(a1, b2, depth + 1));
    return set_union(out, solve(a2, b1, depth + 1));
  }

  // Claimed nodes per depth in left-to-right order must form a staircase.
  void check_staircase() const {
    for (const auto& [depth, boxes] : levels_) {
      for (std::size_t i = 1; i < boxes.size(); ++i) {
        const Box& p = boxes[i - 1];
        const Box& q = boxes[i];
        if (!(p.a_max < q.a_min && p.b_min > q.b_max)) stats_.staircase = false;
      }
    }
  }

 private:
  struct Box {
    Rat a_min, a_max, b_min, b_max;
  };

  void record(std::size_t depth, const RealSet& a, const RealSet& b) {
    levels_[depth].push_back({a.min(), a.max(), b.min(), b.max()});
  }

  const Rat& u_;
  std::size_t s_;
  std::size_t depth_cap_;
  Rng& rng_;
  WorkMeter& meter_;
  PrefixStats& stats_;
  std::map<std::size_t, std::vector<Box>> levels_;
};

}  // namespace

std::uint64_t sumset_budget(std::size_t s, double constant) {
  const double lg = std::log2(static_cast<double>(s) + 2);
  return static_cast<std::uint64_t>(std::ceil(constant * static_cast<double>(s) * lg * lg * lg));
}

BudgetedSumset sumset_with_budget(const RealSet& a, const RealSet& b, std::size_t s, Rng& rng,
                                  double constant) {
  if (s == 0) throw ContractError("sumset_with_budget needs s >= 1");
  if (a.empty() || b.empty()) return RealSet{};
  WorkMeter meter(sumset_budget(s, constant));
  SumsetOptions options;
  options.meter = &meter;
  try {
    return compute_sumset(a, b, rng, options);
  } catch (const BudgetExceeded&) {
    return ClaimAtLeast{s};
  }
}

RealSet interval_sumset(const RealSet& a, const RealSet& b, const Rat& lo, const Rat& hi,
                        Rng& rng, IntervalStats* stats) {
  if (lo > hi) throw ContractError("interval_sumset needs lo <= hi");
  IntervalStats local;
  IntervalStats& st = stats != nullptr ? *stats : local;
  st = {};
  if (a.empty() || b.empty()) return {};

  auto blocks_of = [&](const RealSet& s, std::size_t g) {
    const std::size_t width = (s.size() + g - 1) / g;
    std::vector<RealSet> out;
    for (std::size_t i = 0; i < s.size(); i += width) {
      out.push_back(slice(s, i, std::min(s.size(), i + width)));
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (!(out[i - 1].max() < out[i].min())) st.blocks_ordered = false;
    }
    return out;
  };

  const double product = static_cast<double>(a.size()) * static_cast<double>(b.size());
  const unsigned guesses = std::max(1u, ceil_log2(a.size() * b.size()));
  std::optional<RealSet> best;
  std::size_t best_work = 0;
  for (unsigned j = 0; j < guesses; ++j) {
    const double guess = std::ldexp(1.0, static_cast<int>(j));
    auto g = static_cast<std::size_t>(std::ceil(std::sqrt(product / guess)));
    g = std::clamp<std::size_t>(g, 1, std::max(a.size(), b.size()));
    const std::vector<RealSet> ab = blocks_of(a, g);
    const std::vector<RealSet> bb = blocks_of(b, g);
    std::vector<Rat> out;
    std::size_t work = 0, pairs = 0;
    for (const RealSet& ai : ab) {
      for (const RealSet& bj : bb) {
        if (ai.min() + bj.min() > hi || ai.max() + bj.max() < lo) continue;
        const RealSet part = clip(compute_sumset(ai, bj, rng), lo, hi);
        work += part.size() + 1;
        ++pairs;
        out.insert(out.end(), part.begin(), part.end());
      }
    }
    RealSet result(std::move(out));
    ++st.guesses;
    if (best && result != *best) throw std::logic_error("interval_sumset: guesses disagree");
    if (!best || work < best_work) {
      best = std::move(result);
      best_work = work;
      st.blocks = g;
      st.pairs = pairs;
    }
  }
  return *best;
}

RealSet prefix_sumset(const RealSet& a, const RealSet& b, const Rat& u, Rng& rng,
                      PrefixStats* stats) {
  PrefixStats local;
  PrefixStats& st = stats != nullptr ? *stats : local;
  st = {};
  if (a.empty() || b.empty()) return {};
  const Rat a0 = a.min();
  const Rat b0 = b.min();
  const Rat top = u - a0 - b0;
  if (top < 0) return {};
  const RealSet as = clip_above(shifted(a, -a0), top);
  const RealSet bs = clip_above(shifted(b, -b0), top);

  const unsigned copies = std::max(1u, ceil_log2(as.size() + bs.size()));
  const std::size_t depth_cap = 2 * ceil_log2(bs.size()) + 8;
  std::uint64_t slice_budget = as.size() + bs.size() + 1;
  for (std::size_t round = 0;; ++round) {
    for (unsigned j = 0; j < copies; ++j) {
      const std::size_t s = std::size_t{1} << j;
      PrefixStats trial;
      WorkMeter meter(slice_budget);
      Rng stream = rng.split();
      Staircase run(top, s, depth_cap, stream, meter, trial);
      try {
        RealSet out = run.solve(as, bs, 0);
        run.check_staircase();
        trial.guess = s;
        trial.rounds = round + 1;
        st = trial;
        return shifted(out, a0 + b0);
      } catch (const BudgetExceeded&) {
      }
    }
    slice_budget *= 2;
  }
}

}  // namespace exsum
