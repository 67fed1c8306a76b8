#include <gtest/gtest.h>

#include <ospkit/homology.hpp>

using namespace osp;

namespace {

ChainComplex complex_for(const Weight& lambda)
{
  return ChainComplex(std::make_shared<const SimpleModule>(simple_quotient(lambda)));
}

FormalCharacter chars(std::initializer_list<std::vector<long>> weights)
{
  FormalCharacter ch;
  for (const auto& w : weights) ch.add(Weight(std::vector<Rational>(w.begin(), w.end())));
  return ch;
}

}  // namespace

TEST(Homology, RankOneTrivial)
{
  const auto C = complex_for(Weight::from_ints({0}));
  const auto rep = homology_dims(C, 2);
  EXPECT_TRUE(rep.match);
  EXPECT_EQ(rep.homology.at(0), chars({{0}}));
  EXPECT_EQ(rep.homology.at(1), chars({{-1}}));
  EXPECT_TRUE(rep.homology.at(2).empty());
}

TEST(Homology, RankTwoTrivial)
{
  const auto C = complex_for(Weight::from_ints({0, 0}));
  const auto rep = homology_dims(C, 5);
  EXPECT_TRUE(rep.match);
  EXPECT_EQ(rep.homology.at(1), chars({{-1, 1}, {0, -1}}));
  EXPECT_EQ(rep.homology.at(4), chars({{-3, -1}}));
  EXPECT_TRUE(rep.homology.at(5).empty());
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(rep.homology.at(k).dimension(), k == 0 || k == 4 ? 1u : 2u);
}

TEST(Homology, MatchesOrbitOnGrid)
{
  for (const auto& lambda : {Weight::from_ints({1}), Weight::from_ints({2}), Weight::from_ints({3}),
                             Weight::from_ints({1, 0}), Weight::from_ints({1, 1}), Weight::from_ints({2, 0})}) {
    const auto C = complex_for(lambda);
    const std::size_t n = lambda.rank();
    const auto rep = homology_dims(C, n * n + 1);
    EXPECT_TRUE(rep.match) << lambda;
    for (std::size_t k = 0; k <= n * n; ++k) EXPECT_EQ(rep.homology.at(k), predicted_homology(lambda, k));
    EXPECT_TRUE(rep.homology.at(n * n + 1).empty());
  }
}

TEST(Homology, ValidatesDegree)
{
  const auto C = complex_for(Weight::from_ints({0}));
  EXPECT_THROW(homology_dims(C, 0), std::invalid_argument);
  EXPECT_THROW(reduced_homology_dims(C, 0), std::invalid_argument);
  EXPECT_THROW(verify_phi_iso(C, 0), std::invalid_argument);
}

TEST(Laplacian, Examples)
{
  const auto C0 = complex_for(Weight::from_ints({0}));
  const auto l0 = laplacian_kernel(C0, 1);
  EXPECT_EQ(l0.kernel, (std::map<Weight, std::size_t>{{Weight::from_ints({-1}), 1}}));
  const auto C1 = complex_for(Weight::from_ints({1}));
  const auto l1 = laplacian_kernel(C1, 1);
  EXPECT_EQ(l1.kernel, (std::map<Weight, std::size_t>{{Weight::from_ints({-2}), 2}}));
  EXPECT_EQ(l1.total, 2u);
  EXPECT_EQ(homology_dims(C1, 1).homology.at(1).dimension(), 1u);
}

TEST(Laplacian, ContainsHomology)
{
  for (const auto& lambda : {Weight::from_ints({0}), Weight::from_ints({2}), Weight::from_ints({1, 0}),
                             Weight::from_ints({1, 1})}) {
    const auto C = complex_for(lambda);
    const auto rep = homology_dims(C, lambda.rank() * lambda.rank() + 1);
    for (const auto& [k, h] : rep.homology) {
      const auto lap = laplacian_kernel(C, k);
      for (const auto& [mu, d] : h) {
        ASSERT_TRUE(lap.kernel.count(mu)) << lambda << ' ' << k << ' ' << mu;
        EXPECT_GE(lap.kernel.at(mu), d);
      }
    }
  }
}

TEST(Decomposition, RankOneDimensions)
{
  const auto C = complex_for(Weight::from_ints({0}));
  const auto d2 = verify_decomposition(C, 2);
  EXPECT_TRUE(d2.ok);
  std::size_t a = 0, da = 0, r = 0;
  for (const auto& b : d2.blocks) {
    a += b.dim_a;
    da += b.dim_delta_a;
    r += b.dim_r;
  }
  EXPECT_EQ(a, 1u);
  EXPECT_EQ(da, 1u);
  EXPECT_EQ(r, 0u);
  const auto d1 = verify_decomposition(C, 1);
  EXPECT_TRUE(d1.ok);
  a = da = r = 0;
  for (const auto& b : d1.blocks) {
    a += b.dim_a;
    da += b.dim_delta_a;
    r += b.dim_r;
  }
  EXPECT_EQ(a, 0u);
  EXPECT_EQ(da, 1u);
  EXPECT_EQ(r, 1u);
}

TEST(Decomposition, HoldsOnGrid)
{
  for (const auto& lambda : {Weight::from_ints({0}), Weight::from_ints({1}), Weight::from_ints({2}),
                             Weight::from_ints({0, 0}), Weight::from_ints({1, 0}), Weight::from_ints({1, 1})}) {
    const auto C = complex_for(lambda);
    const std::size_t n = lambda.rank();
    for (std::size_t k = 0; k <= n * n + 1; ++k) {
      const auto rep = verify_decomposition(C, k);
      EXPECT_TRUE(rep.ok) << lambda << " k=" << k;
      for (const auto& b : rep.blocks) {
        EXPECT_FALSE(b.a_meets_kernel);
        EXPECT_EQ(b.dim_a + b.dim_delta_a + b.dim_r, b.dim_c);
      }
      if (k >= 1) EXPECT_TRUE(verify_phi_iso(C, k)) << lambda << " k=" << k;
    }
  }
}

TEST(Decomposition, PhiCountsMatch)
{
  // A_k and B_{k-1} have equal size on every weight block.
  const auto C = complex_for(Weight::from_ints({1, 0}));
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& [mu, b] : C.blocks(k)) {
      const ChainBlock* below = C.block(k - 1, mu);
      const std::size_t nb = below ? below->indices(TagKind::B).size() : 0;
      EXPECT_EQ(b.indices(TagKind::A).size(), nb) << k << ' ' << mu;
    }
}

TEST(Reduced, EqualsFullHomology)
{
  for (const auto& lambda : {Weight::from_ints({0}), Weight::from_ints({2}), Weight::from_ints({0, 0}),
                             Weight::from_ints({1, 1})}) {
    const auto C = complex_for(lambda);
    const std::size_t k_max = lambda.rank() * lambda.rank() + 1;
    EXPECT_EQ(reduced_homology_dims(C, k_max).homology, homology_dims(C, k_max).homology) << lambda;
  }
}

TEST(Euler, IdentityHolds)
{
  for (const auto& lambda : {Weight::from_ints({0}), Weight::from_ints({3}), Weight::from_ints({0, 0}),
                             Weight::from_ints({2, 1})}) {
    const auto C = complex_for(lambda);
    const auto rep = homology_dims(C, lambda.rank() * lambda.rank() + 1);
    EXPECT_EQ(euler_characteristic(rep), euler_rhs(lambda)) << lambda;
  }
  const auto rep = homology_dims(complex_for(Weight::from_ints({0})), 2);
  SignedCharacter expected;
  expected.add(Weight::from_ints({0}), 1);
  expected.add(Weight::from_ints({-1}), -1);
  EXPECT_EQ(euler_characteristic(rep), expected);
}

TEST(Homology, RankThreeTrivialLowDegrees)
{
  const auto C = complex_for(Weight::from_ints({0, 0, 0}));
  const auto rep = homology_dims(C, 2);
  EXPECT_TRUE(rep.match);
  EXPECT_EQ(rep.homology.at(1).dimension(), 3u);
  EXPECT_EQ(rep.homology.at(2).dimension(), 5u);
}
