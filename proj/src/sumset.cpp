#include "exsum/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "exsum/errors.hpp"
#include "exsum/prony.hpp"

namespace exsum {

namespace {

unsigned ceil_log2(std::size_t n) {
  unsigned l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  return l;
}

std::vector<Poly> build_lambdas(const std::vector<std::pair<RealSet, RealSet>>& pairs,
                                std::size_t t, unsigned threads) {
  std::vector<Poly> out(pairs.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& [ai, bi] = pairs[i];
      const std::size_t ti = std::min(t, ai.size() * bi.size());
      out[i] = lambda_of_sumset(ai, bi, ti);
    }
  };
  if (threads <= 1 || pairs.size() < 2) {
    work(0, pairs.size());
    return out;
  }
  const std::size_t chunks = std::min<std::size_t>(threads, pairs.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = pairs.size() * c / chunks;
    const std::size_t hi = pairs.size() * (c + 1) / chunks;
    jobs.push_back(std::async(std::launch::async, work, lo, hi));
  }
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace

std::size_t restriction_count(std::size_t a_size, std::size_t b_size, double constant) {
  const double levels = ceil_log2(a_size) + 1;
  const double n = static_cast<double>(a_size + b_size);
  return static_cast<std::size_t>(std::ceil(constant * levels * std::log2(n)));
}

RestrictionSampler::RestrictionSampler(const RealSet& a, const RealSet& b, Rng& rng)
    : a_(a), b_(b), rng_(rng), levels_(ceil_log2(a.size()) + 1) {}

std::pair<RealSet, RealSet> RestrictionSampler::next() {
  const auto level = static_cast<unsigned>(rng_.uniform(levels_));
  std::vector<Rat> ai, bi;
  for (const Rat& x : a_) {
    if (rng_.keep_with_rate_pow2(level)) ai.push_back(x);
  }
  for (const Rat& y : b_) {
    if (rng_.coin()) bi.push_back(y);
  }
  return {RealSet::from_sorted(std::move(ai)), RealSet::from_sorted(std::move(bi))};
}

RestrictionFamily random_restrictions(const RealSet& a, const RealSet& b, Rng& rng,
                                      double constant) {
  if (a.empty() || b.empty()) throw ContractError("random_restrictions of an empty set");
  RestrictionSampler sampler(a, b, rng);
  RestrictionFamily family;
  const std::size_t m = restriction_count(a.size(), b.size(), constant);
  family.pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) family.pairs.push_back(sampler.next());
  return family;
}

bool basis_certifies(const CoprimeBasis& basis, std::size_t t) {
  if (basis.size() != t) return false;
  return std::all_of(basis.polys.begin(), basis.polys.end(),
                     [](const Poly& q) { return q.degree() == 1; });
}

RealSet compute_sumset(const RealSet& a, const RealSet& b, Rng& rng,
                       const SumsetOptions& options) {
  if (a.empty() || b.empty()) throw ContractError("compute_sumset of an empty set");
  SumsetStats local;
  SumsetStats& stats = options.stats != nullptr ? *options.stats : local;
  stats = {};
  if (a.size() == 1 || b.size() == 1) {
    stats.attempts = 1;
    stats.size = a.size() * b.size();
    return a.size() == 1 ? shifted(b, a.min()) : shifted(a, b.min());
  }

  const AffineForm form = normalize_pair(a, b);
  const std::size_t t = sumset_size_certificate(form.a, form.b, options.meter).size;
  stats.size = t;
  const std::size_t m = restriction_count(a.size(), b.size(), options.restriction_constant);

  for (std::size_t attempt = 1; attempt <= options.retry_cap; ++attempt) {
    stats.attempts = attempt;
    RestrictionSampler sampler(form.a, form.b, rng);
    CoprimeBasis basis;
    std::size_t done = 0;
    std::size_t batch = std::max<std::size_t>(1, options.first_batch);
    while (done < m) {
      const std::size_t k = std::min(batch, m - done);
      std::vector<std::pair<RealSet, RealSet>> pairs;
      pairs.reserve(k);
      for (std::size_t i = 0; i < k; ++i) {
        pairs.push_back(sampler.next());
        if (options.meter != nullptr) {
          const auto& [ai, bi] = pairs.back();
          options.meter->charge(2 * std::min(t, ai.size() * bi.size()) + ai.size() + bi.size());
        }
      }
      basis = merge_bases(basis, coprime_basis(build_lambdas(pairs, t, options.threads)));
      if (options.meter != nullptr) options.meter->charge(basis.total_degree());
      stats.restrictions += k;
      done += k;
      batch += batch / 2;
      if (basis_certifies(basis, t)) {
        std::vector<Rat> roots;
        roots.reserve(t);
        const Rat base = form.a0 + form.b0;
        for (const Poly& q : basis.polys) roots.push_back(base - form.g * q.coeffs()[0]);
        return RealSet(std::move(roots));
      }
    }
  }
  throw RetryCapError("compute_sumset: no restriction family verified in " +
                      std::to_string(options.retry_cap) + " attempts");
}

SparseFn convolve(const SparseFn& f, const SparseFn& g, Rng& rng, const SumsetOptions& options) {
  for (const SparseFn* h : {&f, &g}) {
    for (const auto& [x, v] : h->entries()) {
      if (sgn(v) <= 0) throw ContractError("convolve needs strictly positive values");
    }
  }
  if (f.empty() || g.empty()) return {};
  const AffineForm form = normalize_pair(f.support(), g.support());
  auto normalized = [&](const SparseFn& h, const Rat& origin) {
    std::vector<SparseFn::Entry> entries;
    entries.reserve(h.size());
    for (const auto& [x, v] : h.entries()) entries.emplace_back((x - origin) / form.g, v);
    return SparseFn(std::move(entries));
  };
  const SparseFn fn = normalized(f, form.a0);
  const SparseFn gn = normalized(g, form.b0);
  const RealSet support = compute_sumset(form.a, form.b, rng, options);
  const std::size_t t = support.size();
  const PowerSums sums = convolve_power_sums(power_sums(fn, 2 * t), power_sums(gn, 2 * t));
  const SparseFn hn = interpolate_from_power_sums(sums, support);
  std::vector<SparseFn::Entry> entries;
  entries.reserve(hn.size());
  const Rat base = form.a0 + form.b0;
  for (const auto& [x, v] : hn.entries()) entries.emplace_back(base + form.g * x, v);
  return SparseFn(std::move(entries));
}

}  // namespace exsum
