#include <gtest/gtest.h>

#include <set>

#include <ospkit/weyl.hpp>

using namespace osp;

namespace {

WeylElement s(std::size_t n, std::size_t k) { return WeylElement::simple_reflection(n, k); }

}  // namespace

TEST(Weyl, EnumerationSizes)
{
  EXPECT_EQ(enumerate_weyl(1).size(), 2u);
  EXPECT_EQ(enumerate_weyl(2).size(), 8u);
  EXPECT_EQ(enumerate_weyl(3).size(), 48u);
  const auto w3 = enumerate_weyl(3);
  EXPECT_EQ(std::set<WeylElement>(w3.begin(), w3.end()).size(), 48u);
  EXPECT_THROW(enumerate_weyl(6), std::invalid_argument);
  EXPECT_THROW(enumerate_weyl(0), std::invalid_argument);
}

TEST(Weyl, LengthExamples)
{
  EXPECT_EQ(length(WeylElement::identity(2)), 0u);
  EXPECT_EQ(length(WeylElement::longest(2)), 4u);
  EXPECT_EQ(length(s(2, 0)), 1u);
  EXPECT_EQ(length(s(2, 1)), 1u);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(length(WeylElement::longest(n)), n * n);
}

TEST(Weyl, LengthGeneratingFunctionIsPalindromic)
{
  auto sizes = [](std::size_t n) {
    std::vector<std::size_t> v;
    for (std::size_t k = 0; k <= n * n; ++k) v.push_back(elements_of_length(n, k).size());
    return v;
  };
  EXPECT_EQ(sizes(1), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(sizes(2), (std::vector<std::size_t>{1, 2, 2, 2, 1}));
  EXPECT_TRUE(elements_of_length(2, 5).empty());
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto v = sizes(n);
    EXPECT_EQ(v, std::vector<std::size_t>(v.rbegin(), v.rend()));
    std::size_t total = 0;
    for (auto c : v) total += c;
    EXPECT_EQ(total, enumerate_weyl(n).size());
  }
}

TEST(Weyl, ReducedWordLengthMatchesInversionCount)
{
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& w : enumerate_weyl(n)) {
      const auto word = reduced_word(w);
      EXPECT_EQ(word.size(), length(w));
      auto prod = WeylElement::identity(n);
      for (auto k : word) prod = prod * s(n, k);
      EXPECT_EQ(prod, w);
    }
}

TEST(Weyl, GroupAxioms)
{
  const auto all = enumerate_weyl(2);
  const auto e = WeylElement::identity(2);
  for (const auto& a : all) {
    EXPECT_EQ(a * a.inverse(), e);
    EXPECT_EQ(a.inverse() * a, e);
    EXPECT_EQ(a * e, a);
    for (const auto& b : all)
      for (const auto& c : all) EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Weyl, TextFormRoundTrips)
{
  const WeylElement w({1, 0}, {1, -1});
  EXPECT_EQ(to_string(w), "(2,-1)");
  EXPECT_EQ(parse_weyl_element("(2,-1)"), w);
  EXPECT_EQ(w.act(Weight::from_ints({1, 0})), Weight::from_ints({0, 1}));
  EXPECT_EQ(w.act(Weight::from_ints({0, 1})), Weight::from_ints({-1, 0}));
  for (const auto& v : enumerate_weyl(3)) EXPECT_EQ(parse_weyl_element(to_string(v)), v);
  EXPECT_THROW(parse_weyl_element("(1,1)"), std::invalid_argument);
}

TEST(DotAction, Examples)
{
  EXPECT_EQ(dot_act(s(1, 0), Weight::from_ints({0})), Weight::from_ints({-1}));
  EXPECT_EQ(dot_act(s(2, 1), Weight::from_ints({0, 0})), Weight::from_ints({0, -1}));
  const auto mu = parse_weight("3/2,-7");
  EXPECT_EQ(dot_act(WeylElement::identity(2), mu), mu);
  EXPECT_THROW(dot_act(s(2, 0), Weight::from_ints({1})), std::invalid_argument);
}

TEST(DotAction, IsAnAction)
{
  const auto lambda = parse_weight("1/3,-2");
  for (const auto& a : enumerate_weyl(2))
    for (const auto& b : enumerate_weyl(2)) EXPECT_EQ(dot_act(a, dot_act(b, lambda)), dot_act(a * b, lambda));
}

TEST(ToDominant, Examples)
{
  const auto r = to_dominant(Weight::from_ints({0, -1}));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->w, s(2, 1));
  EXPECT_EQ(r->dominant, Weight::from_ints({0, 0}));
  EXPECT_FALSE(to_dominant(Weight::from_ints({0, 1})).has_value());
  const auto d = to_dominant(Weight::from_ints({2, 1}));
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(d->w.is_identity());
}

TEST(ToDominant, UniqueDominantInOrbit)
{
  const auto rs = build_root_system(2);
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      const auto mu = Weight::from_ints({a, b});
      const auto r = to_dominant(mu);
      ASSERT_EQ(r.has_value(), is_dot_regular(mu));
      if (!r) continue;
      std::size_t hits = 0;
      for (const auto& w : enumerate_weyl(2)) {
        const auto x = dot_act(w, mu) + rs.rho();
        if (x[0] > x[1] && x[1] > 0) {
          ++hits;
          EXPECT_EQ(w, r->w);
        }
      }
      EXPECT_EQ(hits, 1u);
      EXPECT_EQ(dot_act(r->w, mu), r->dominant);
    }
}

TEST(Bruhat, Examples)
{
  const auto w0 = WeylElement::longest(2);
  for (const auto& w : enumerate_weyl(2)) {
    EXPECT_TRUE(bruhat_leq(WeylElement::identity(2), w));
    EXPECT_TRUE(bruhat_leq(w, w0));
    EXPECT_TRUE(bruhat_leq(w, w));
  }
  EXPECT_TRUE(bruhat_leq(s(2, 0), w0));
  EXPECT_FALSE(bruhat_leq(w0, s(2, 0)));
  EXPECT_FALSE(bruhat_leq(s(2, 0), s(2, 1)));
}

TEST(Bruhat, IsAPartialOrderCompatibleWithLength)
{
  const auto all = enumerate_weyl(3);
  for (const auto& v : all)
    for (const auto& w : all) {
      if (bruhat_leq(v, w)) {
        EXPECT_LE(length(v), length(w));
        if (!(v == w)) {
          EXPECT_FALSE(bruhat_leq(w, v));
        }
      }
    }
}

TEST(Linkage, StrongLinkageExamples)
{
  EXPECT_TRUE(strongly_linked(Weight::from_ints({0, -1}), Weight::from_ints({0, 0})));
  EXPECT_TRUE(strongly_linked(Weight::from_ints({1, 0}), Weight::from_ints({1, 0})));
  EXPECT_FALSE(strongly_linked(Weight::from_ints({0, 0}), Weight::from_ints({0, -1})));
}

TEST(Linkage, WholeOrbitIsStronglyLinkedToDominant)
{
  for (std::size_t n = 1; n <= 2; ++n)
    for (long a = 0; a <= 2; ++a) {
      Weight lambda(n);
      for (std::size_t i = 0; i < n; ++i) lambda[i] = i == 0 ? a : a / 2;
      for (const auto& w : enumerate_weyl(n)) EXPECT_TRUE(strongly_linked(dot_act(w, lambda), lambda));
    }
}

TEST(Linkage, CentralCharacter)
{
  EXPECT_TRUE(same_central_character(Weight::from_ints({0, -1}), Weight::from_ints({0, 0})));
  EXPECT_TRUE(same_central_character(Weight::from_ints({1, 1}), Weight::from_ints({1, 1})));
  EXPECT_FALSE(same_central_character(Weight::from_ints({1, 0}), Weight::from_ints({0, 0})));
}
