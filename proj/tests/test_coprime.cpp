#include <gtest/gtest.h>

#include "exsum/coprime.hpp"
#include "exsum/errors.hpp"
#include "support.hpp"

namespace exsum {
namespace {

Poly random_factor(Rng& rng) {
  if (rng.coin()) return Poly::linear(Rat(rng.uniform_int(-6, 6)));
  return Poly{Rat(rng.uniform_int(-4, 4)), Rat(rng.uniform_int(-3, 3)), Rat(1)};
}

std::vector<Poly> random_inputs(Rng& rng, std::size_t count) {
  std::vector<Poly> ps;
  for (std::size_t i = 0; i < count; ++i) {
    Poly p = Poly::constant(Rat(rng.uniform_int(1, 5)));
    const std::size_t factors = 1 + rng.uniform(8);
    for (std::size_t f = 0; f < factors; ++f) p = p * random_factor(rng);
    ps.push_back(p);
  }
  return ps;
}

// Pairwise coprime, monic and nonconstant; each input rebuilt exactly from
// its recorded exponents; total degree bounded; each member divides an input.
void expect_valid_basis(const CoprimeBasis& basis, const std::vector<Poly>& ps) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_TRUE(basis.polys[i].is_monic());
    EXPECT_GT(basis.polys[i].degree(), 0);
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      EXPECT_EQ(poly_gcd(basis.polys[i], basis.polys[j]), Poly{1});
  }
  std::size_t input_degree = 0;
  for (const Poly& p : ps) {
    if (p.is_constant()) continue;
    input_degree += static_cast<std::size_t>(p.degree());
    const auto exps = factor_over(p, basis);
    ASSERT_TRUE(exps.has_value()) << to_string(p);
    Poly rebuilt = Poly::constant(p.leading());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int e = 0; e < (*exps)[i]; ++e) rebuilt = rebuilt * basis.polys[i];
    EXPECT_EQ(rebuilt, p);
  }
  EXPECT_LE(basis.total_degree(), input_degree);
  for (const Poly& q : basis.polys) {
    bool divides = false;
    for (const Poly& p : ps) divides = divides || (!p.is_constant() && poly_rem(p, q).is_zero());
    EXPECT_TRUE(divides) << to_string(q);
  }
}

TEST(CoprimeBasis, Examples) {
  const Poly x{0, 1};
  const CoprimeBasis b1 = coprime_basis({Poly{-1, 0, 1}, Poly{0, -1, 1}});
  EXPECT_EQ(b1.polys, (std::vector<Poly>{Poly{-1, 1}, x, Poly{1, 1}}));

  const Poly cube = Poly{-1, 1} * Poly{-1, 1} * Poly{-1, 1};
  const CoprimeBasis b2 = coprime_basis({cube});
  EXPECT_EQ(b2.polys, (std::vector<Poly>{Poly{-1, 1}}));
  EXPECT_EQ(factor_over(cube, b2), (std::vector<int>{3}));

  EXPECT_EQ(coprime_basis({Poly{-7, 1}}).polys, (std::vector<Poly>{Poly{-7, 1}}));
  EXPECT_TRUE(coprime_basis({Poly{5}}).empty());
  EXPECT_THROW(coprime_basis({Poly{}}), ContractError);
  EXPECT_THROW(extend_basis(Poly{}, {}), ContractError);
  EXPECT_EQ(factor_over(Poly{-2, 1}, b1), std::nullopt);
}

TEST(CoprimeBasis, RandomInputs) {
  Rng rng(20);
  for (int i = 0; i < 25; ++i) {
    const std::vector<Poly> ps = random_inputs(rng, 1 + rng.uniform(6));
    expect_valid_basis(coprime_basis(ps), ps);
  }
}

TEST(CoprimeBasis, MergeMatchesIncrementalExtension) {
  Rng rng(21);
  for (int i = 0; i < 15; ++i) {
    const std::vector<Poly> left = random_inputs(rng, 1 + rng.uniform(4));
    const std::vector<Poly> right = random_inputs(rng, 1 + rng.uniform(4));
    const CoprimeBasis merged = merge_bases(coprime_basis(left), coprime_basis(right));
    CoprimeBasis incremental;
    for (const auto* side : {&left, &right})
      for (const Poly& p : *side) incremental = extend_basis(p, incremental);
    EXPECT_EQ(merged, incremental);
    std::vector<Poly> all = left;
    all.insert(all.end(), right.begin(), right.end());
    expect_valid_basis(merged, all);
  }
}

TEST(CoprimeBasis, MergeWithSingleMember) {
  const CoprimeBasis one = coprime_basis({Poly{-1, 0, 1}});
  const CoprimeBasis other = coprime_basis({Poly{-1, 1}});
  EXPECT_EQ(merge_bases(one, other).polys, (std::vector<Poly>{Poly{-1, 1}, Poly{1, 1}}));
  EXPECT_EQ(merge_bases(CoprimeBasis{}, other), other);
  EXPECT_EQ(merge_bases(other, CoprimeBasis{}), other);
}

TEST(CoprimeBasis, CanonicalOrder) {
  EXPECT_TRUE(poly_less(Poly{5, 1}, Poly{0, 0, 1}));
  EXPECT_TRUE(poly_less(Poly{-3, 1}, Poly{2, 1}));
  EXPECT_FALSE(poly_less(Poly{2, 1}, Poly{2, 1}));
}

}  // namespace
}  // namespace exsum
