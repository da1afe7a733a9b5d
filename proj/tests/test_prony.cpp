#include <gtest/gtest.h>

#include "exsum/errors.hpp"
#include "exsum/hankel.hpp"
#include "exsum/oracle.hpp"
#include "exsum/prony.hpp"
#include "support.hpp"

namespace exsum {
namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.push_back(Rat(x));
  return out;
}

// Power sums straight from the definition.
PowerSums direct_sums(const SparseFn& f, std::size_t k) {
  PowerSums out(k, Rat(0));
  for (const auto& [x, v] : f.entries()) {
    for (std::size_t i = 0; i < k; ++i) {
      Rat p = 1;
      for (std::size_t j = 0; j < i; ++j) p *= x;
      out[i] += p * v;
    }
  }
  return out;
}

// Whether some monic recurrence of degree r annihilates every window of seq:
// Gaussian elimination on the system in λ_0 .. λ_{r-1}.
bool recurrence_exists(const std::vector<Rat>& seq, std::size_t r) {
  if (seq.size() <= r) return true;
  const std::size_t rows = seq.size() - r;
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(r + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t l = 0; l < r; ++l) m[i][l] = seq[i + l];
    m[i][r] = -seq[i + r];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < r && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[rank][col];
      for (std::size_t c = col; c <= r; ++c) m[i][c] -= f * m[rank][c];
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (m[i][r] != 0) return false;
  return true;
}

TEST(PowerSums, Examples) {
  EXPECT_EQ(power_sums(SparseFn{{Rat(2), Rat(1, 2)}}, 3), (PowerSums{Rat(1, 2), Rat(1), Rat(2)}));
  EXPECT_EQ(power_sums(SparseFn{{Rat(1), Rat(1)}, {Rat(2), Rat(1)}}, 4), rats({2, 3, 5, 9}));
  EXPECT_EQ(power_sums(SparseFn{}, 2), rats({0, 0}));
  EXPECT_EQ(power_sums(RealSet{Rat(1), Rat(2)}, 4), rats({2, 3, 5, 9}));
}

TEST(PowerSums, MatchDefinition) {
  Rng rng(10);
  for (int i = 0; i < 30; ++i) {
    const SparseFn f = testing::random_fn(rng, 1 + rng.uniform(12), 20, 5, false);
    EXPECT_EQ(power_sums(f, 15), direct_sums(f, 15));
  }
}

TEST(Interpolate, Examples) {
  EXPECT_EQ(interpolate_from_power_sums(rats({5, 7}), RealSet{Rat(1), Rat(2)}),
            (SparseFn{{Rat(1), Rat(3)}, {Rat(2), Rat(2)}}));
  EXPECT_EQ(interpolate_from_power_sums(std::vector<Rat>{Rat(4, 3)}, RealSet{Rat(-5)}),
            (SparseFn{{Rat(-5), Rat(4, 3)}}));
  EXPECT_EQ(interpolate_from_power_sums(rats({1, 0}), RealSet{Rat(0), Rat(1)}),
            (SparseFn{{Rat(0), Rat(1)}}));
  EXPECT_THROW(interpolate_from_power_sums(rats({1, 0}), std::vector<Rat>{Rat(1), Rat(1)}),
               ContractError);
  EXPECT_THROW(interpolate_from_power_sums(rats({1}), RealSet{Rat(0), Rat(1)}), ContractError);
}

TEST(Interpolate, RoundTrip) {
  Rng rng(11);
  for (std::size_t t : {1u, 2u, 7u, 30u, 128u}) {
    const SparseFn f = testing::random_fn(rng, t, 1000, 6, false);
    EXPECT_EQ(interpolate_from_power_sums(power_sums(f, t), f.support()), f) << t;
  }
}

TEST(ConvolvePowerSums, Examples) {
  EXPECT_EQ(convolve_power_sums(rats({1, 1, 1, 1}), rats({1, 2, 4, 8})), rats({1, 3, 9, 27}));
  EXPECT_EQ(convolve_power_sums(rats({3, 1, 4}), rats({0, 0, 0})), rats({0, 0, 0}));
  EXPECT_EQ(convolve_power_sums(rats({1, 0, 0}), rats({5, -2, 7})), rats({5, -2, 7}));
  EXPECT_THROW(convolve_power_sums(rats({1, 0}), rats({1})), ContractError);
}

TEST(ConvolvePowerSums, ProductRule) {
  Rng rng(12);
  for (int i = 0; i < 25; ++i) {
    const SparseFn f = testing::random_fn(rng, 1 + rng.uniform(32), 30, 4, false);
    const SparseFn g = testing::random_fn(rng, 1 + rng.uniform(32), 30, 4, false);
    const std::size_t k = 1 + rng.uniform(40);
    EXPECT_EQ(convolve_power_sums(power_sums(f, k), power_sums(g, k)),
              power_sums(oracle::brute_convolve(f, g), k));
  }
}

TEST(MinimalPolynomial, Examples) {
  EXPECT_EQ(minimal_polynomial(rats({2, 3, 5, 9})), (Poly{2, -3, 1}));
  EXPECT_EQ(minimal_polynomial(rats({0, 0, 0, 0})), Poly{1});
  EXPECT_EQ(minimal_polynomial(rats({1, 2, 4, 8})), (Poly{-2, 1}));
}

TEST(MinimalPolynomial, PronyIdentity) {
  Rng rng(13);
  for (std::size_t t : {1u, 3u, 16u, 64u}) {
    const SparseFn f = testing::random_fn(rng, t, 200, 3, false);
    EXPECT_EQ(minimal_polynomial(power_sums(f, 2 * t)), oracle::brute_min_poly(f.support())) << t;
  }
}

TEST(MinimalPolynomial, IsMinimalAndAnnihilates) {
  Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    const std::size_t len = 1 + rng.uniform(24);
    std::vector<Rat> seq;
    if (i % 2 == 0) {
      for (std::size_t k = 0; k < len; ++k) seq.push_back(testing::random_rat(rng, 3, 2));
    } else {
      seq = power_sums(testing::random_fn(rng, 1 + rng.uniform(6), 9, 2, false), len);
    }
    const Poly lambda = minimal_polynomial(seq);
    ASSERT_TRUE(lambda.is_monic());
    const auto r = static_cast<std::size_t>(lambda.degree());
    for (std::size_t w = 0; w + r < seq.size(); ++w) {
      Rat acc = 0;
      for (std::size_t l = 0; l <= r; ++l) acc += lambda.coeff(l) * seq[w + l];
      EXPECT_EQ(acc, 0);
    }
    for (std::size_t lower = 0; lower < r; ++lower) EXPECT_FALSE(recurrence_exists(seq, lower));
    EXPECT_EQ(linear_complexity_exceeds(seq, r), false);
    if (r > 0) {
      EXPECT_EQ(linear_complexity_exceeds(seq, r - 1), true);
    }
  }
}

TEST(LambdaOfSumset, Examples) {
  EXPECT_EQ(lambda_of_sumset(RealSet{Rat(0), Rat(1)}, RealSet{Rat(0), Rat(1)}, 4), (Poly{0, 2, -3, 1}));
  EXPECT_EQ(lambda_of_sumset(RealSet{Rat(1, 2)}, RealSet{Rat(3)}, 1), (Poly{Rat(-7, 2), 1}));
  EXPECT_EQ(lambda_of_sumset(RealSet{Rat(0), Rat(1)}, RealSet{Rat(0), Rat(2)}, 4),
            (Poly{0, -6, 11, -6, 1}));
  EXPECT_EQ(lambda_of_sumset(RealSet{}, RealSet{Rat(1)}, 3), Poly{1});
}

TEST(LambdaOfSumset, OverlargeBoundIsHarmless) {
  Rng rng(15);
  for (int i = 0; i < 10; ++i) {
    const RealSet a = testing::random_set(rng, 1 + rng.uniform(6), 30, 3);
    const RealSet b = testing::random_set(rng, 1 + rng.uniform(6), 30, 3);
    const RealSet c = oracle::brute_sumset(a, b);
    EXPECT_EQ(lambda_of_sumset(a, b, c.size() + rng.uniform(10)), oracle::brute_min_poly(c));
  }
}

TEST(SparsityExceeds, Examples) {
  const PowerSums delta3 = power_sums(SparseFn{{Rat(3), Rat(1)}}, 3);
  EXPECT_TRUE(sparsity_exceeds(delta3, 0));
  EXPECT_FALSE(sparsity_exceeds(delta3, 1));
  EXPECT_TRUE(sparsity_exceeds(rats({2, 3, 5}), 1));
  EXPECT_THROW(sparsity_exceeds(rats({2, 3}), 1), ContractError);
}

TEST(SparsityExceeds, AgreesWithSupportSizeAndHankelSign) {
  Rng rng(16);
  for (std::size_t t = 0; t <= 12; ++t) {
    const SparseFn f = t == 0 ? SparseFn{} : testing::random_fn(rng, t, 40, 3, true);
    for (std::size_t s = 0; s <= 12; ++s) {
      const PowerSums sums = power_sums(f, 2 * s + 1);
      const bool exceeds = sparsity_exceeds(sums, s);
      EXPECT_EQ(exceeds, t > s) << "t=" << t << " s=" << s;
      EXPECT_EQ(exceeds, hankel_det_sign(sums, s + 1) == Sign::positive);
    }
  }
}

TEST(SumsetSize, Examples) {
  EXPECT_EQ(sumset_size(RealSet{Rat(0), Rat(1)}, RealSet{Rat(0), Rat(2)}), 4u);
  EXPECT_EQ(sumset_size(RealSet{Rat(0)}, RealSet{Rat(0)}), 1u);
  RealSet ap;
  for (long i = 0; i < 8; ++i) ap = set_union(ap, RealSet{Rat(i)});
  EXPECT_EQ(sumset_size(ap, ap), 15u);
  EXPECT_THROW(sumset_size(RealSet{}, ap), ContractError);
}

TEST(SumsetSize, MatchesBruteForce) {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const RealSet a = testing::random_set(rng, 1 + rng.uniform(12), 60, 4);
    const RealSet b = testing::random_set(rng, 1 + rng.uniform(12), 60, 4);
    EXPECT_EQ(sumset_size(a, b), oracle::brute_sumset(a, b).size());
  }
}

TEST(SumsetSize, CertificateCarriesLambda) {
  const AffineForm form = normalize_pair(RealSet{Rat(1), Rat(3, 2)}, RealSet{Rat(-1), Rat(2)});
  EXPECT_EQ(form.a0, Rat(1));
  EXPECT_EQ(form.b0, Rat(-1));
  EXPECT_EQ(form.g, Rat(1, 2));
  EXPECT_EQ(form.a, (RealSet{Rat(0), Rat(1)}));
  EXPECT_EQ(form.b, (RealSet{Rat(0), Rat(6)}));
  const SizeCertificate cert = sumset_size_certificate(form.a, form.b);
  EXPECT_EQ(cert.size, 4u);
  EXPECT_EQ(cert.lambda, Poly::from_roots({Rat(0), Rat(1), Rat(6), Rat(7)}));
  EXPECT_THROW(sumset_size_certificate(RealSet{Rat(1, 2)}, RealSet{Rat(0)}), ContractError);
}

}  // namespace
}  // namespace exsum
