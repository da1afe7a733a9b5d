#include <gtest/gtest.h>

#include "exsum/coprime.hpp"
#include "exsum/errors.hpp"
#include "exsum/oracle.hpp"
#include "exsum/sumset.hpp"
#include "exsum/work.hpp"
#include "support.hpp"

namespace exsum {
namespace {

RealSet ints(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.push_back(Rat(x));
  return RealSet(std::move(v));
}

TEST(Restrictions, CountAndSubsets) {
  EXPECT_EQ(restriction_count(4, 2), 1241u);
  EXPECT_EQ(restriction_count(1, 1), 160u);
  Rng rng(30);
  const RealSet a = ints({0, 1, 2, 3}), b = ints({0, 4});
  const RestrictionFamily fam = random_restrictions(a, b, rng);
  EXPECT_EQ(fam.size(), restriction_count(4, 2));
  for (const auto& [ai, bi] : fam.pairs) {
    EXPECT_TRUE(ai.is_subset_of(a));
    EXPECT_TRUE(bi.is_subset_of(b));
  }
}

TEST(Restrictions, SingletonAIsAllOrNothing) {
  Rng rng(31);
  const RealSet a = ints({7}), b = ints({0, 1, 2});
  for (const auto& [ai, bi] : random_restrictions(a, b, rng).pairs) {
    EXPECT_TRUE(ai.empty() || ai == a);
  }
}

TEST(Restrictions, Reproducible) {
  const RealSet a = ints({0, 1, 2, 3, 9}), b = ints({0, 4, 5});
  Rng r1(99), r2(99);
  const RestrictionFamily f1 = random_restrictions(a, b, r1), f2 = random_restrictions(a, b, r2);
  EXPECT_EQ(f1.pairs, f2.pairs);
}

TEST(Restrictions, SeparateEveryPair) {
  const RealSet a = ints({0, 1, 2, 3}), b = ints({0, 4});
  const RealSet c = oracle::brute_sumset(a, b);
  std::size_t separated_runs = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    const RestrictionFamily fam = random_restrictions(a, b, rng);
    std::vector<RealSet> subs;
    for (const auto& [ai, bi] : fam.pairs) subs.push_back(oracle::brute_sumset(ai, bi));
    bool all = true;
    for (std::size_t i = 0; i < c.size() && all; ++i) {
      for (std::size_t j = i + 1; j < c.size() && all; ++j) {
        bool sep = false;
        for (const RealSet& s : subs) {
          if (s.contains(c[i]) != s.contains(c[j])) {
            sep = true;
            break;
          }
        }
        all = sep;
      }
    }
    separated_runs += all;
  }
  EXPECT_GE(separated_runs, 475u);
}

TEST(ComputeSumset, Examples) {
  Rng rng(32);
  EXPECT_EQ(compute_sumset(ints({0, 1}), ints({0, 2}), rng), ints({0, 1, 2, 3}));
  EXPECT_EQ(compute_sumset(RealSet{Rat(1, 3)}, RealSet{Rat(-5, 2)}, rng), RealSet{Rat(-13, 6)});
  const RealSet a{Rat(0), Rat(1, 3), Rat(2, 3)}, b{Rat(0), Rat(1, 3)};
  EXPECT_EQ(compute_sumset(a, b, rng), (RealSet{Rat(0), Rat(1, 3), Rat(2, 3), Rat(1)}));
  EXPECT_THROW(compute_sumset(RealSet{}, a, rng), ContractError);
}

TEST(ComputeSumset, MatchesBruteForce) {
  Rng gen(33);
  std::size_t attempts = 0, max_attempts = 0;
  const int instances = 20;
  for (int i = 0; i < instances; ++i) {
    const RealSet a = testing::random_set(gen, 1 + gen.uniform(10), 60, 4);
    const RealSet b = testing::random_set(gen, 1 + gen.uniform(10), 60, 4);
    Rng rng(gen.next());
    SumsetStats stats;
    SumsetOptions options;
    options.stats = &stats;
    const RealSet c = compute_sumset(a, b, rng, options);
    EXPECT_EQ(c, oracle::brute_sumset(a, b));
    EXPECT_GE(c.size() + 1, a.size() + b.size());
    EXPECT_EQ(stats.size, c.size());
    attempts += stats.attempts;
    max_attempts = std::max(max_attempts, stats.attempts);
  }
  EXPECT_LE(static_cast<double>(attempts) / instances, 1.1);
  EXPECT_LE(max_attempts, 3u);
}

TEST(ComputeSumset, StructuredInputs) {
  Rng rng(34);
  RealSet ap, geo;
  for (long i = 0; i < 10; ++i) ap = set_union(ap, RealSet{Rat(3 * i, 7)});
  for (long i = 0, p = 1; i < 6; ++i, p *= 3) geo = set_union(geo, RealSet{Rat(p)});
  EXPECT_EQ(compute_sumset(ap, ap, rng), oracle::brute_sumset(ap, ap));
  EXPECT_EQ(compute_sumset(geo, ap, rng), oracle::brute_sumset(geo, ap));
  EXPECT_EQ(compute_sumset(geo, geo, rng), oracle::brute_sumset(geo, geo));
}

TEST(ComputeSumset, DeterministicForSeed) {
  const RealSet a = ints({0, 5, 6, 19, 40}), b = ints({1, 2, 30});
  SumsetStats s1, s2;
  SumsetOptions o1, o2;
  o1.stats = &s1;
  o2.stats = &s2;
  Rng r1(5), r2(5);
  EXPECT_EQ(compute_sumset(a, b, r1, o1), compute_sumset(a, b, r2, o2));
  EXPECT_EQ(s1.restrictions, s2.restrictions);
  EXPECT_EQ(r1.next(), r2.next());
}

TEST(ComputeSumset, ThreadsGiveSameResult) {
  const RealSet a = ints({0, 3, 4, 10, 11, 12}), b = ints({0, 1, 7, 8});
  Rng r1(6), r2(6);
  SumsetOptions threaded;
  threaded.threads = 4;
  EXPECT_EQ(compute_sumset(a, b, r1), compute_sumset(a, b, r2, threaded));
}

TEST(ComputeSumset, RetryCapAborts) {
  // A constant this small yields families too thin to ever certify.
  const RealSet a = ints({0, 1, 2, 3, 4, 5, 6, 7}), b = ints({0, 10, 20, 30});
  Rng rng(7);
  SumsetOptions options;
  options.restriction_constant = 1e-9;
  options.retry_cap = 3;
  options.first_batch = 1;
  EXPECT_THROW(compute_sumset(a, b, rng, options), RetryCapError);
}

TEST(ComputeSumset, MeterIsCharged) {
  WorkMeter meter;
  SumsetOptions options;
  options.meter = &meter;
  Rng rng(8);
  compute_sumset(ints({0, 1, 5}), ints({0, 2}), rng, options);
  EXPECT_GT(meter.used(), 0u);
  WorkMeter tight(1);
  options.meter = &tight;
  EXPECT_THROW(compute_sumset(ints({0, 1, 5}), ints({0, 2}), rng, options), BudgetExceeded);
}

TEST(BasisCertifies, RejectsCorruptedBases) {
  const RealSet c = ints({0, 1, 2, 3});
  CoprimeBasis good;
  for (const Rat& x : c) good = extend_basis(Poly::linear(x), good);
  EXPECT_TRUE(basis_certifies(good, 4));

  CoprimeBasis missing = good;
  missing.polys.pop_back();
  EXPECT_FALSE(basis_certifies(missing, 4));

  CoprimeBasis merged = good;
  merged.polys[0] = merged.polys[0] * merged.polys[1];
  merged.polys.erase(merged.polys.begin() + 1);
  EXPECT_FALSE(basis_certifies(merged, 4));
  EXPECT_FALSE(basis_certifies(merged, 3));

  CoprimeBasis extra = good;
  extra.polys.push_back(Poly::linear(Rat(9)));
  EXPECT_FALSE(basis_certifies(extra, 4));
  EXPECT_FALSE(basis_certifies(CoprimeBasis{}, 1));
}

TEST(Convolve, Examples) {
  Rng rng(35);
  EXPECT_EQ(convolve(SparseFn{{Rat(0), Rat(2)}}, SparseFn{{Rat(5), Rat(3)}}, rng),
            (SparseFn{{Rat(5), Rat(6)}}));
  const SparseFn f{{Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  EXPECT_EQ(convolve(f, f, rng), (SparseFn{{Rat(0), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(1)}}));
  EXPECT_EQ(convolve(SparseFn{{Rat(0), Rat(1)}, {Rat(2), Rat(1)}}, SparseFn{{Rat(1), Rat(1)}}, rng),
            (SparseFn{{Rat(1), Rat(1)}, {Rat(3), Rat(1)}}));
  EXPECT_THROW(convolve(SparseFn{{Rat(0), Rat(-1)}}, f, rng), ContractError);
}

TEST(Convolve, MatchesBruteForce) {
  Rng gen(36);
  for (int i = 0; i < 12; ++i) {
    const SparseFn f = testing::random_fn(gen, 1 + gen.uniform(8), 60, 4, true);
    const SparseFn g = testing::random_fn(gen, 1 + gen.uniform(8), 60, 4, true);
    Rng rng(gen.next());
    EXPECT_EQ(convolve(f, g, rng), oracle::brute_convolve(f, g));
  }
}

}  // namespace
}  // namespace exsum
