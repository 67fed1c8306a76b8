#include <gtest/gtest.h>

#include <algorithm>

#include <ospkit/rootsys.hpp>
#include <ospkit/weyl.hpp>

using namespace osp;

namespace {

std::vector<Weight> weights_of(const std::vector<Root>& roots)
{
  std::vector<Weight> out;
  for (const auto& r : roots) out.push_back(r.weight);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(RootSystem, RankTwoRoots)
{
  const auto rs = build_root_system(2);
  std::vector<Weight> even{Weight::from_ints({1, -1}), Weight::from_ints({1, 1}), Weight::from_ints({2, 0}),
                           Weight::from_ints({0, 2})};
  std::sort(even.begin(), even.end());
  EXPECT_EQ(weights_of(rs.positive_even()), even);
  std::vector<Weight> odd{Weight::from_ints({1, 0}), Weight::from_ints({0, 1})};
  std::sort(odd.begin(), odd.end());
  EXPECT_EQ(weights_of(rs.positive_odd()), odd);
  EXPECT_EQ(rs.rho(), parse_weight("3/2,1/2"));
}

TEST(RootSystem, RankOne)
{
  const auto rs = build_root_system(1);
  EXPECT_EQ(rs.rho(), parse_weight("1/2"));
  ASSERT_EQ(rs.positive_even().size(), 1u);
  EXPECT_EQ(rs.positive_even()[0].weight, Weight::from_ints({2}));
  ASSERT_EQ(rs.positive_odd().size(), 1u);
  EXPECT_EQ(rs.positive_odd()[0].weight, Weight::from_ints({1}));
}

TEST(RootSystem, RejectsRankZero) { EXPECT_THROW(build_root_system(0), std::invalid_argument); }

TEST(RootSystem, CountsRhoAndSimpleRootsForSeveralRanks)
{
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto rs = build_root_system(n);
    EXPECT_EQ(rs.positive_even().size(), n * n);
    EXPECT_EQ(rs.positive_odd().size(), n);
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(rs.rho()[j], Rational(2 * static_cast<long>(n - j) - 1, 2));
    ASSERT_EQ(rs.simple_roots().size(), n);
    for (std::size_t k = 0; k + 1 < n; ++k)
      EXPECT_EQ(rs.simple_roots()[k].weight, Weight::unit(n, k) - Weight::unit(n, k + 1));
    EXPECT_EQ(rs.simple_roots().back().weight, Weight::unit(n, n - 1));
    EXPECT_EQ(rs.simple_roots().back().parity, Parity::odd);
    for (const auto& g : rs.positive_odd()) EXPECT_GE(rs.index_of(Rational(2) * g.weight), 0);
    for (const auto& r : rs.positive()) EXPECT_TRUE(in_positive_cone(r.weight));
  }
}

TEST(RootSystem, GlobalOrderPutsEvenRootsFirst)
{
  const auto rs = build_root_system(3);
  const auto& all = rs.positive();
  const auto first_odd = std::find_if(all.begin(), all.end(), [](const Root& r) { return r.parity == Parity::odd; });
  EXPECT_TRUE(std::all_of(first_odd, all.end(), [](const Root& r) { return r.parity == Parity::odd; }));
  for (std::size_t i = 0; i + 1 < 9; ++i) EXPECT_LE(height(all[i].weight), height(all[i + 1].weight));
}

TEST(Inner, Examples)
{
  EXPECT_EQ(inner(Weight::from_ints({1, 0}), Weight::from_ints({0, 1})), 0);
  EXPECT_EQ(inner(parse_weight("3/2,1/2"), parse_weight("3/2,1/2")), Rational(5, 2));
  EXPECT_EQ(inner(Weight::from_ints({1}), Weight::from_ints({1})), 1);
  EXPECT_THROW(inner(Weight::from_ints({1}), Weight::from_ints({1, 0})), std::invalid_argument);
}

TEST(Inner, IsWeylInvariant)
{
  for (std::size_t n = 1; n <= 3; ++n) {
    Weight a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = Rational(static_cast<long>(2 * i + 1), 3);
      b[i] = static_cast<long>(i) - 1;
    }
    for (const auto& w : enumerate_weyl(n)) EXPECT_EQ(inner(w.act(a), w.act(b)), inner(a, b));
  }
}

TEST(Dominance, Examples)
{
  EXPECT_TRUE(is_integral_dominant(Weight::from_ints({1, 1})));
  EXPECT_FALSE(is_integral_dominant(Weight::from_ints({1, 2})));
  EXPECT_TRUE(is_integral_dominant(Weight::from_ints({0, 0, 0})));
  EXPECT_FALSE(is_integral_dominant(Weight::from_ints({1, -1})));
  EXPECT_FALSE(is_integral_dominant(parse_weight("1/2")));
}

TEST(Regularity, Examples)
{
  EXPECT_FALSE(is_dot_regular(Weight::from_ints({0, 1})));
  EXPECT_TRUE(is_dot_regular(Weight::from_ints({0, 0})));
  EXPECT_FALSE(is_dot_regular(parse_weight("-1/2")));
  EXPECT_TRUE(is_dot_regular(Weight::from_ints({0, -1})));
}

TEST(Height, CountsSimpleRoots)
{
  EXPECT_EQ(height(Weight::from_ints({1, -1})), 1);
  EXPECT_EQ(height(Weight::from_ints({0, 1})), 1);
  EXPECT_EQ(height(Weight::from_ints({2, 0})), 4);
  EXPECT_FALSE(in_positive_cone(Weight::from_ints({-1, 2})));
  EXPECT_FALSE(in_positive_cone(parse_weight("1/2")));
}
