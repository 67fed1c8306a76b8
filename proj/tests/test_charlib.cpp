#include <gtest/gtest.h>

#include <ospkit/charlib.hpp>

using namespace osp;

namespace {

FormalCharacter make(std::initializer_list<std::pair<Weight, std::uint64_t>> terms)
{
  FormalCharacter ch;
  for (const auto& [w, m] : terms) ch.add(w, m);
  return ch;
}

const std::vector<Weight>& dominant_grid()
{
  static const std::vector<Weight> grid{Weight::from_ints({0}),       Weight::from_ints({1}),
                                        Weight::from_ints({2}),       Weight::from_ints({3}),
                                        Weight::from_ints({0, 0}),    Weight::from_ints({1, 0}),
                                        Weight::from_ints({1, 1}),    Weight::from_ints({2, 1}),
                                        Weight::from_ints({2, 2}),    Weight::from_ints({1, 0, 0}),
                                        Weight::from_ints({1, 1, 1}), Weight::from_ints({2, 1, 0})};
  return grid;
}

}  // namespace

TEST(VermaMult, CountsPbwMonomialsWithOddExponentsAtMostOne)
{
  // Y_{2d} and Y_d Y_d span the same line: only one PBW monomial of weight -2.
  EXPECT_EQ(verma_mult(Weight::from_ints({0}), Weight::from_ints({-2})), 1u);
  EXPECT_EQ(verma_mult(Weight::from_ints({0}), Weight::from_ints({-3})), 1u);
  EXPECT_EQ(verma_mult(Weight::from_ints({1, 0}), Weight::from_ints({1, 0})), 1u);
  EXPECT_EQ(verma_mult(Weight::from_ints({0, 0}), Weight::from_ints({1, 0})), 0u);
  EXPECT_EQ(verma_mult(Weight::from_ints({0}), parse_weight("-1/2")), 0u);
}

TEST(VermaMult, MatchesGeneratingFunctionInRankOne)
{
  // (1 + q) / (1 - q^2) = 1 / (1 - q): every weight -k has multiplicity 1.
  for (long k = 0; k < 12; ++k) EXPECT_EQ(verma_mult(Weight::from_ints({0}), Weight::from_ints({-k})), 1u);
}

TEST(SimpleCharacter, Examples)
{
  EXPECT_EQ(simple_character(Weight::from_ints({0, 0})), make({{Weight::from_ints({0, 0}), 1}}));
  EXPECT_EQ(simple_character(Weight::from_ints({1})),
            make({{Weight::from_ints({1}), 1}, {Weight::from_ints({0}), 1}, {Weight::from_ints({-1}), 1}}));
  const auto v = simple_character(Weight::from_ints({1, 0}));
  EXPECT_EQ(v.dimension(), 5u);
  EXPECT_EQ(v.support_size(), 5u);
  EXPECT_THROW(simple_character(Weight::from_ints({0, 1})), std::invalid_argument);
}

TEST(SimpleCharacter, WeylDimensionAndInvariance)
{
  for (const auto& lambda : dominant_grid()) {
    const auto ch = simple_character(lambda);
    EXPECT_EQ(Integer(ch.dimension()), weyl_dimension(lambda)) << lambda;
    for (const auto& w : enumerate_weyl(lambda.rank()))
      for (const auto& [mu, m] : ch) EXPECT_EQ(ch[w.act(mu)], m);
    EXPECT_EQ(ch[lambda], 1u);
  }
  EXPECT_EQ(weyl_dimension(Weight::from_ints({1, 1})), 10);
  EXPECT_EQ(weyl_dimension(Weight::from_ints({1, 0, 0})), 7);
}

TEST(ExteriorCharacter, Examples)
{
  EXPECT_EQ(exterior_character(1, 0), make({{Weight::from_ints({0}), 1}}));
  EXPECT_EQ(exterior_character(1, 2), make({{Weight::from_ints({-2}), 1}, {Weight::from_ints({-3}), 1}}));
  const auto rs = build_root_system(2);
  FormalCharacter one;
  for (const auto& r : rs.positive()) one.add(-r.weight);
  EXPECT_EQ(exterior_character(2, 1), one);
}

TEST(ExteriorCharacter, MatchesProductFormula)
{
  // prod_even (1 + t e^-a) * prod_odd 1/(1 - t e^-g), coefficient of t^k.
  const std::size_t n = 2, top = 5;
  const auto rs = build_root_system(n);
  std::vector<FormalCharacter> series(top + 1);
  series[0].add(Weight(n));
  for (const auto& r : rs.positive()) {
    std::vector<FormalCharacter> next(top + 1);
    for (std::size_t k = 0; k <= top; ++k)
      for (std::size_t e = 0; k + e <= top; ++e) {
        if (r.parity == Parity::even && e > 1) break;
        next[k + e] = next[k + e] + series[k].translated(-(Rational(static_cast<long>(e)) * r.weight));
      }
    series = std::move(next);
  }
  for (std::size_t k = 0; k <= top; ++k) EXPECT_EQ(exterior_character(n, k), series[k]) << k;
}

TEST(EulerRhs, Examples)
{
  const auto e1 = euler_rhs(Weight::from_ints({0}));
  EXPECT_EQ(e1[Weight::from_ints({0})], 1);
  EXPECT_EQ(e1[Weight::from_ints({-1})], -1);
  EXPECT_EQ(e1.support().size(), 2u);
  const auto e2 = euler_rhs(Weight::from_ints({0, 0}));
  EXPECT_EQ(e2.support().size(), 8u);
  EXPECT_EQ(e2.positive().dimension(), 4u);
  EXPECT_EQ(e2.negative().dimension(), 4u);
}

TEST(EulerRhs, EqualsAlternatingSumOfChainCharactersOnOrbit)
{
  for (const auto& lambda : {Weight::from_ints({0}), Weight::from_ints({1}), Weight::from_ints({0, 0}),
                             Weight::from_ints({1, 0})}) {
    const std::size_t n = lambda.rank();
    const auto rs = build_root_system(n);
    const auto L = simple_character(lambda);
    const auto rhs = euler_rhs(lambda);
    const auto orbit = dot_orbit(lambda, rs);
    // A degree-k chain weight lies at height >= k below lambda.
    const auto k_top = static_cast<std::size_t>(to_long(height(lambda - dot_act(WeylElement::longest(n), lambda))));
    SignedCharacter lhs;
    for (std::size_t k = 0; k <= k_top; ++k) {
      const auto prod = exterior_character(n, k) * L;
      for (const auto& mu : orbit) lhs.add(mu, (k % 2 ? -1 : 1) * static_cast<std::int64_t>(prod[mu]));
    }
    for (const auto& mu : orbit) EXPECT_EQ(lhs[mu], rhs[mu]) << lambda << " at " << mu;
  }
}

TEST(SignedCharacter, Canonicalizes)
{
  SignedCharacter a;
  a.add(Weight::from_ints({1}), 2);
  a.add(Weight::from_ints({1}), -2);
  EXPECT_TRUE(a.support().empty());
  SignedCharacter b(make({{Weight::from_ints({0}), 3}}), make({{Weight::from_ints({0}), 1}}));
  EXPECT_EQ(b[Weight::from_ints({0})], 2);
  EXPECT_EQ((b - b).support().size(), 0u);
}
