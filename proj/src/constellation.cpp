#include "exsum/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "exsum/circuit.hpp"
#include "exsum/errors.hpp"
#include "exsum/sumset.hpp"

namespace exsum {

namespace {

unsigned ceil_log2(std::size_t n) {
  unsigned l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  return l;
}

RealSet filter_with_support(const RealSet& a, const RealSet& b, const RealSet& s,
                            const RealSet& support) {
  const Circuit c = build_shift_count_circuit(a, s, b, support);
  const Circuit d = baur_strassen(c, "z");
  Assignment ones;
  for (const Rat& x : a) ones[x_name(x)] = 1;
  for (const Rat& y : s) ones[y_name(y)] = 1;
  const auto values = eval_circuit(d, ones);
  const Rat full(static_cast<long>(a.size()));
  std::vector<Rat> keep;
  for (const Rat& y : s) {
    if (values.at("d/" + y_name(y)) == full) keep.push_back(y);
  }
  return RealSet::from_sorted(std::move(keep));
}

// One pass of the level schedule; throws BudgetExceeded through the meter.
RealSet run_levels(const RealSet& a, const RealSet& b, Rng& rng, WorkMeter& meter,
                   std::vector<std::size_t>& sizes) {
  const unsigned levels = ceil_log2(a.size() + b.size());
  RealSet s = shifted(b, -a.min());
  sizes.assign(1, s.size());
  for (unsigned l = levels + 1; l-- > 0;) {
    std::vector<Rat> sub;
    for (const Rat& x : a) {
      if (rng.keep_with_rate_pow2(l)) sub.push_back(x);
    }
    const RealSet al = RealSet::from_sorted(std::move(sub));
    if (!al.empty() && !s.empty()) {
      Rng inner = rng.split();
      const RealSet support = compute_sumset(al, s, inner);
      meter.charge(al.size() + s.size() + support.size());
      s = filter_with_support(al, b, s, support);
    }
    sizes.push_back(s.size());
  }
  return s;
}

}  // namespace

RealSet filter_shifts(const RealSet& a, const RealSet& b, const RealSet& s, Rng& rng) {
  if (a.empty() || s.empty()) return s;
  return filter_with_support(a, b, s, compute_sumset(a, s, rng));
}

RealSet filter_shifts(const RealSet& a, const RealSet& b, const RealSet& s) {
  Rng rng(0);
  return filter_shifts(a, b, s, rng);
}

RealSet constellation(const RealSet& a, const RealSet& b, Rng& rng,
                      const ConstellationOptions& options) {
  if (a.empty() || b.empty()) throw ContractError("constellation of an empty set");
  ConstellationStats local;
  ConstellationStats& stats = options.stats != nullptr ? *options.stats : local;
  stats = {};
  const double n = static_cast<double>(a.size() + b.size());
  const double lg = std::log2(n + 2);
  const auto budget = static_cast<std::uint64_t>(std::ceil(options.budget * n * lg * lg * lg));
  for (;;) {
    const bool last = stats.restarts >= options.max_restarts;
    WorkMeter meter(last ? WorkMeter().budget() : budget);
    try {
      RealSet out = run_levels(a, b, rng, meter, stats.level_sizes);
      stats.work = meter.used();
      return out;
    } catch (const BudgetExceeded&) {
      ++stats.restarts;
    }
  }
}

PointSet constellation_nd(const PointSet& a, const PointSet& b, Rng& rng) {
  if (a.empty() || b.empty()) throw ContractError("constellation of an empty set");
  const std::size_t d = a.front().size();
  for (const PointSet* ps : {&a, &b}) {
    for (const auto& p : *ps) {
      if (p.size() != d) throw ContractError("constellation_nd: mixed dimensions");
    }
  }
  auto project = [](const PointSet& ps, std::size_t j) {
    std::vector<Rat> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p[j]);
    return RealSet(std::move(out));
  };
  std::vector<RealSet> shifts;
  shifts.reserve(d);
  for (std::size_t j = 0; j < d; ++j) shifts.push_back(constellation(project(a, j), project(b, j), rng));

  const std::set<std::vector<Rat>> bset(b.begin(), b.end());
  const std::vector<Rat>& a0 = *std::min_element(a.begin(), a.end());
  std::set<std::vector<Rat>> found;
  for (const auto& p : b) {
    std::vector<Rat> v(d);
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      v[j] = p[j] - a0[j];
      ok = shifts[j].contains(v[j]);
    }
    if (!ok) continue;
    ok = std::all_of(a.begin(), a.end(), [&](const std::vector<Rat>& x) {
      std::vector<Rat> y(d);
      for (std::size_t j = 0; j < d; ++j) y[j] = x[j] + v[j];
      return bset.count(y) > 0;
    });
    if (ok) found.insert(std::move(v));
  }
  return {found.begin(), found.end()};
}

}  // namespace exsum
