#include <gtest/gtest.h>

#include <ospkit/catO.hpp>

using namespace osp;

TEST(Bgg, RankOneTerms)
{
  const auto res = bgg_resolution(Weight::from_ints({0}));
  ASSERT_EQ(res.terms.size(), 2u);
  ASSERT_EQ(res.terms[0].size(), 1u);
  EXPECT_EQ(res.terms[0][0].weight, Weight::from_ints({0}));
  ASSERT_EQ(res.terms[1].size(), 1u);
  EXPECT_EQ(res.terms[1][0].weight, Weight::from_ints({-1}));
  EXPECT_EQ(bgg_resolution(Weight::from_ints({2})).terms[1][0].weight, Weight::from_ints({-3}));
}

TEST(Bgg, RankTwoTermSizes)
{
  const auto res = bgg_resolution(Weight::from_ints({1, 0}));
  std::vector<std::size_t> sizes;
  for (const auto& t : res.terms) sizes.push_back(t.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 2, 2, 1}));
  EXPECT_EQ(res.terms[4][0].weight, dot_act(WeylElement::longest(2), Weight::from_ints({1, 0})));
  for (std::size_t k = 0; k < res.terms.size(); ++k)
    for (const auto& e : res.terms[k]) {
      EXPECT_EQ(length(e.w), k);
      EXPECT_EQ(e.weight, dot_act(e.w, res.lambda));
    }
}

TEST(Bgg, RejectsNonDominant)
{
  EXPECT_THROW(bgg_resolution(Weight::from_ints({0, 1})), std::invalid_argument);
  EXPECT_THROW(bgg_resolution(Weight::from_ints({-1})), std::invalid_argument);
}

TEST(Bgg, CharacterExactness)
{
  EXPECT_TRUE(verify_resolution_characters(Weight::from_ints({0}), 6));
  EXPECT_TRUE(verify_resolution_characters(Weight::from_ints({3}), 10));
  EXPECT_TRUE(verify_resolution_characters(Weight::from_ints({1, 0}), 8));
  EXPECT_TRUE(verify_resolution_characters(Weight::from_ints({2, 1}), 9));
  EXPECT_TRUE(verify_resolution_characters(Weight::from_ints({0, 0, 0}), 6));
}

TEST(Bgg, WeightsBelowCount)
{
  // Compositions of at most b into n parts: C(b+n, n).
  EXPECT_EQ(weights_below(Weight::from_ints({0}), 5).size(), 6u);
  EXPECT_EQ(weights_below(Weight::from_ints({0, 0}), 4).size(), 15u);
  EXPECT_EQ(weights_below(Weight::from_ints({0, 0, 0}), 3).size(), 20u);
}

TEST(Ext, Examples)
{
  const Weight zero = Weight::from_ints({0, 0});
  EXPECT_EQ(ext_dim(zero, zero, 0), 1u);
  EXPECT_EQ(ext_dim(zero, zero, 1), 0u);
  EXPECT_EQ(ext_dim(Weight::from_ints({0, -1}), zero, 1), 1u);
  EXPECT_EQ(ext_dim(Weight::from_ints({0, -1}), zero, 2), 0u);
  EXPECT_EQ(ext_dim(Weight::from_ints({-3, -1}), zero, 4), 1u);
  EXPECT_THROW(ext_dim(zero, Weight::from_ints({0, 1}), 0), std::invalid_argument);
}

TEST(Ext, TotalOverOrbitIsWeylOrder)
{
  for (const auto& lambda : {Weight::from_ints({0, 0}), Weight::from_ints({2, 1})}) {
    std::size_t total = 0;
    for (const auto& w : enumerate_weyl(2))
      for (std::size_t k = 0; k <= 4; ++k) total += ext_dim(dot_act(w, lambda), lambda, k);
    EXPECT_EQ(total, 8u);
  }
}

TEST(Bbw, Examples)
{
  const auto dom = bbw(Weight::from_ints({2, 1}));
  EXPECT_FALSE(dom.zero);
  EXPECT_EQ(dom.k, 0u);
  EXPECT_EQ(dom.highest_weight, Weight::from_ints({2, 1}));
  EXPECT_TRUE(bbw(Weight::from_ints({0, 1})).zero);
  const auto reg = bbw(Weight::from_ints({0, -1}));
  EXPECT_FALSE(reg.zero);
  EXPECT_EQ(reg.k, 1u);
  EXPECT_EQ(reg.highest_weight, Weight::from_ints({0, 0}));
  const auto low = bbw(Weight::from_ints({-3, -1}));
  EXPECT_EQ(low.k, 4u);
  EXPECT_EQ(low.highest_weight, Weight::from_ints({0, 0}));
  EXPECT_THROW(bbw(Weight{Rational(1, 2), Rational(0)}), std::invalid_argument);
}

TEST(Bbw, OrbitSweep)
{
  for (const auto& lambda : {Weight::from_ints({0}), Weight::from_ints({1}), Weight::from_ints({0, 0}),
                             Weight::from_ints({1, 0}), Weight::from_ints({2, 2})})
    for (const auto& w : enumerate_weyl(lambda.rank())) {
      const auto a = bbw(dot_act(w, lambda));
      EXPECT_FALSE(a.zero);
      EXPECT_EQ(a.k, length(w));
      EXPECT_EQ(a.highest_weight, lambda);
    }
}

TEST(ProjDim, PerElement)
{
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(global_dim(n), 2 * n * n);
    for (const auto& w : enumerate_weyl(n)) EXPECT_EQ(pd_verma(w) + pd_simple(w), global_dim(n));
    const auto w0 = WeylElement::longest(n);
    EXPECT_EQ(pd_verma(w0), n * n);
    EXPECT_EQ(pd_simple(w0), n * n);
    EXPECT_EQ(pd_verma(WeylElement::identity(n)), 0u);
    EXPECT_EQ(pd_simple(WeylElement::identity(n)), 2 * n * n);
  }
  EXPECT_THROW(global_dim(0), std::invalid_argument);
}

TEST(ProjDim, ForWeights)
{
  const auto pd = projective_dimensions(Weight::from_ints({0, -1}));
  EXPECT_EQ(pd.dominant, Weight::from_ints({0, 0}));
  EXPECT_EQ(dot_act(pd.w, pd.dominant), Weight::from_ints({0, -1}));
  EXPECT_EQ(pd.verma, 1u);
  EXPECT_EQ(pd.simple, 7u);
  EXPECT_THROW(projective_dimensions(Weight::from_ints({0, 1})), std::domain_error);
  EXPECT_THROW(projective_dimensions(Weight{Rational(1, 2)}), std::invalid_argument);
}
