#pragma once

// Formal characters: Verma multiplicities, irreducible characters through the
// so(2n+1) identification (Freudenthal), super-exterior powers of the
// negative nilradical and the alternating Weyl-group sum.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rootsys.hpp"
#include "weight.hpp"
#include "weyl.hpp"

namespace osp {

/// Finitely supported map Weight -> positive multiplicity.
class FormalCharacter {
 public:
  using Map = std::map<Weight, std::uint64_t>;

  FormalCharacter() = default;

  void add(const Weight& w, std::uint64_t mult = 1)
  {
    if (mult) terms_[w] += mult;
  }

  std::uint64_t operator[](const Weight& w) const
  {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  std::uint64_t dimension() const
  {
    std::uint64_t d = 0;
    for (const auto& [w, m] : terms_) d += m;
    return d;
  }

  std::size_t support_size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FormalCharacter translated(const Weight& by) const
  {
    FormalCharacter out;
    for (const auto& [w, m] : terms_) out.add(w + by, m);
    return out;
  }

  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b)
  {
    for (const auto& [w, m] : b.terms_) a.add(w, m);
    return a;
  }

  /// Product of characters (convolution of supports).
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b)
  {
    FormalCharacter out;
    for (const auto& [wa, ma] : a.terms_)
      for (const auto& [wb, mb] : b.terms_) out.add(wa + wb, ma * mb);
    return out;
  }

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  Map terms_;
};

/// Virtual character kept as positive and negative parts with no weight in
/// both.
class SignedCharacter {
 public:
  SignedCharacter() = default;
  SignedCharacter(FormalCharacter pos, FormalCharacter neg) : pos_(std::move(pos)), neg_(std::move(neg))
  {
    canonicalize();
  }

  void add(const Weight& w, std::int64_t coeff)
  {
    if (coeff > 0) pos_.add(w, static_cast<std::uint64_t>(coeff));
    if (coeff < 0) neg_.add(w, static_cast<std::uint64_t>(-coeff));
    canonicalize();
  }

  std::int64_t operator[](const Weight& w) const
  {
    return static_cast<std::int64_t>(pos_[w]) - static_cast<std::int64_t>(neg_[w]);
  }

  const FormalCharacter& positive() const { return pos_; }
  const FormalCharacter& negative() const { return neg_; }

  friend SignedCharacter operator+(const SignedCharacter& a, const SignedCharacter& b)
  {
    return SignedCharacter(a.pos_ + b.pos_, a.neg_ + b.neg_);
  }
  friend SignedCharacter operator-(const SignedCharacter& a, const SignedCharacter& b)
  {
    return SignedCharacter(a.pos_ + b.neg_, a.neg_ + b.pos_);
  }

  friend bool operator==(const SignedCharacter&, const SignedCharacter&) = default;

  /// Weights with nonzero coefficient.
  std::set<Weight> support() const
  {
    std::set<Weight> s;
    for (const auto& [w, m] : pos_) s.insert(w);
    for (const auto& [w, m] : neg_) s.insert(w);
    return s;
  }

 private:
  void canonicalize()
  {
    FormalCharacter p, n;
    std::set<Weight> keys;
    for (const auto& [w, m] : pos_) keys.insert(w);
    for (const auto& [w, m] : neg_) keys.insert(w);
    for (const auto& w : keys) {
      const auto a = pos_[w], b = neg_[w];
      if (a > b) p.add(w, a - b);
      if (b > a) n.add(w, b - a);
    }
    pos_ = std::move(p);
    neg_ = std::move(n);
  }

  FormalCharacter pos_, neg_;
};

/// dim M(lambda)^mu: PBW exponent vectors over the positive roots with odd
/// exponents in {0,1} whose weighted sum is lambda - mu.
inline std::uint64_t verma_mult(const Weight& lambda, const Weight& mu)
{
  const auto rs = build_root_system(lambda.rank());
  const Weight diff = lambda - mu;
  if (!in_positive_cone(diff)) return 0;
  const auto& roots = rs.positive();
  std::map<std::pair<std::size_t, Weight>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, const Weight&)> count = [&](std::size_t r, const Weight& rest) -> std::uint64_t {
    if (rest.is_zero()) return 1;
    if (r == roots.size()) return 0;
    auto key = std::make_pair(r, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    Weight cur = rest;
    const std::size_t cap = roots[r].parity == Parity::odd ? 1 : static_cast<std::size_t>(-1);
    for (std::size_t e = 0; e <= cap && in_positive_cone(cur); ++e) {
      total += count(r + 1, cur);
      cur -= roots[r].weight;
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return count(0, diff);
}

namespace detail {

/// Positive roots of so(2n+1): e_i - e_j, e_i + e_j (i<j) and e_i.
inline std::vector<Weight> so_odd_positive_roots(std::size_t n)
{
  std::vector<Weight> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Weight::unit(n, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(Weight::unit(n, i) - Weight::unit(n, j));
      out.push_back(Weight::unit(n, i) + Weight::unit(n, j));
    }
  }
  return out;
}

/// Dominant representative under signed permutations: |coords| sorted down.
inline Weight plain_dominant(const Weight& w)
{
  std::vector<Rational> c;
  for (std::size_t i = 0; i < w.rank(); ++i) c.push_back(w[i] < 0 ? Rational(-w[i]) : w[i]);
  std::sort(c.begin(), c.end(), std::greater<>());
  return Weight(std::move(c));
}

/// Integral dominant mu with lambda - mu in the positive cone.
inline std::vector<Weight> dominant_weights_below(const Weight& lambda)
{
  const auto n = lambda.rank();
  std::vector<Weight> out;
  std::vector<long> prefix_lambda(n);
  long acc = 0;
  for (std::size_t i = 0; i < n; ++i) prefix_lambda[i] = acc += to_long(lambda[i]);
  std::vector<long> cur(n);
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long upper, long prefix) {
    if (i == n) {
      Weight w(n);
      for (std::size_t k = 0; k < n; ++k) w[k] = cur[k];
      out.push_back(std::move(w));
      return;
    }
    for (long v = 0; v <= upper && prefix + v <= prefix_lambda[i]; ++v) {
      cur[i] = v;
      rec(i + 1, v, prefix + v);
    }
  };
  rec(0, prefix_lambda[0], 0);
  return out;
}

}  // namespace detail

/// ch L(lambda) by Freudenthal's recursion for so(2n+1), whose integral
/// dominant characters coincide with those of osp(1|2n).
inline FormalCharacter simple_character(const Weight& lambda)
{
  if (!is_integral_dominant(lambda)) throw std::invalid_argument("simple_character: weight is not integral dominant");
  const auto n = lambda.rank();
  const auto rs = build_root_system(n);
  const auto roots = detail::so_odd_positive_roots(n);
  const Weight& rho = rs.rho();  // equals rho of so(2n+1)

  auto dominants = detail::dominant_weights_below(lambda);
  std::sort(dominants.begin(), dominants.end(),
            [&](const Weight& a, const Weight& b) { return height(lambda - a) < height(lambda - b); });
  const std::set<Weight> dom_set(dominants.begin(), dominants.end());
  std::map<Weight, Rational> mult;
  const Rational top = inner(lambda + rho, lambda + rho);
  for (const auto& mu : dominants) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational num = 0;
    for (const auto& alpha : roots) {
      Weight nu = mu + alpha;
      while (true) {
        const Weight d = detail::plain_dominant(nu);
        if (!dom_set.count(d)) break;
        num += mult.at(d) * inner(nu, alpha);
        nu += alpha;
      }
    }
    const Rational den = top - inner(mu + rho, mu + rho);
    const Rational m = 2 * num / den;
    if (!is_integer(m) || m < 0) throw std::logic_error("Freudenthal produced a non-integral multiplicity");
    mult[mu] = m;
  }

  FormalCharacter ch;
  const auto weyl = enumerate_weyl(n);
  for (const auto& [mu, m] : mult) {
    if (sgn(m) == 0) continue;
    std::set<Weight> orbit;
    for (const auto& w : weyl) orbit.insert(w.act(mu));
    for (const auto& w : orbit) ch.add(w, static_cast<std::uint64_t>(to_long(m)));
  }
  return ch;
}

/// Weyl dimension formula for so(2n+1).
inline Integer weyl_dimension(const Weight& lambda)
{
  const auto rs = build_root_system(lambda.rank());
  Rational d = 1;
  for (const auto& alpha : detail::so_odd_positive_roots(lambda.rank()))
    d *= inner(lambda + rs.rho(), alpha) / inner(rs.rho(), alpha);
  if (!is_integer(d)) throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num();
}

/// Character of the degree-k super-exterior power of the negative nilradical:
/// even root vectors at most once, odd root vectors any number of times.
inline FormalCharacter exterior_character(std::size_t n, std::size_t k)
{
  const auto rs = build_root_system(n);
  const auto& roots = rs.positive();
  FormalCharacter ch;
  std::function<void(std::size_t, std::size_t, const Weight&)> rec = [&](std::size_t r, std::size_t left,
                                                                        const Weight& acc) {
    if (left == 0) {
      ch.add(acc);
      return;
    }
    if (r == roots.size()) return;
    const std::size_t cap = roots[r].parity == Parity::even ? 1 : left;
    Weight cur = acc;
    for (std::size_t e = 0; e <= cap && e <= left; ++e) {
      rec(r + 1, left - e, cur);
      cur -= roots[r].weight;
    }
  };
  rec(0, k, Weight(n));
  return ch;
}

/// sum over w in W of (-1)^{l(w)} e^{w.lambda}
inline SignedCharacter euler_rhs(const Weight& lambda)
{
  const auto rs = build_root_system(lambda.rank());
  SignedCharacter out;
  for (const auto& w : enumerate_weyl(lambda.rank())) out.add(dot_act(w, lambda, rs), length(w) % 2 ? -1 : 1);
  return out;
}

}  // namespace osp
