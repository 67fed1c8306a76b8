#pragma once

// The Weyl group of osp(1|2n) (type C_n / B_n) as signed permutations.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootsys.hpp"
#include "weight.hpp"

namespace osp {

/// w acts by delta_i -> signs[i] * delta_{perm[i]} (0-based).
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs))
  {
    validate();
  }

  static WeylElement identity(std::size_t n)
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return WeylElement(std::move(p), std::vector<int>(n, 1));
  }

  /// s_k for k < n-1 swaps delta_k and delta_{k+1}; s_{n-1} negates delta_{n-1}.
  static WeylElement simple_reflection(std::size_t n, std::size_t k)
  {
    auto w = identity(n);
    if (k + 1 < n) std::swap(w.perm_[k], w.perm_[k + 1]);
    else if (k + 1 == n) w.signs_[k] = -1;
    else throw std::out_of_range("simple reflection index");
    return w;
  }

  /// Longest element: every delta_i -> -delta_i.
  static WeylElement longest(std::size_t n)
  {
    auto w = identity(n);
    std::fill(w.signs_.begin(), w.signs_.end(), -1);
    return w;
  }

  std::size_t rank() const { return perm_.size(); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  Weight act(const Weight& mu) const
  {
    if (mu.rank() != rank()) throw std::invalid_argument("Weyl action: rank mismatch");
    Weight out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[perm_[i]] = signs_[i] > 0 ? mu[i] : Rational(-mu[i]);
    return out;
  }

  /// (this o other)
  friend WeylElement operator*(const WeylElement& w, const WeylElement& v)
  {
    if (w.rank() != v.rank()) throw std::invalid_argument("Weyl product: rank mismatch");
    WeylElement out = v;
    for (std::size_t i = 0; i < v.rank(); ++i) {
      out.perm_[i] = w.perm_[v.perm_[i]];
      out.signs_[i] = v.signs_[i] * w.signs_[v.perm_[i]];
    }
    return out;
  }

  WeylElement inverse() const
  {
    WeylElement out = *this;
    for (std::size_t i = 0; i < rank(); ++i) {
      out.perm_[perm_[i]] = static_cast<int>(i);
      out.signs_[perm_[i]] = signs_[i];
    }
    return out;
  }

  bool is_identity() const { return *this == identity(rank()); }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  void validate() const
  {
    if (perm_.size() != signs_.size()) throw std::invalid_argument("WeylElement: size mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (perm_[i] < 0 || perm_[i] >= static_cast<int>(perm_.size()) || seen[perm_[i]])
        throw std::invalid_argument("WeylElement: not a permutation");
      seen[perm_[i]] = true;
      if (signs_[i] != 1 && signs_[i] != -1) throw std::invalid_argument("WeylElement: signs must be +-1");
    }
  }

  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// Signed one-line notation: entry i is +-(image index), e.g. "(2,-1)".
inline std::string to_string(const WeylElement& w)
{
  std::string out = "(";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.signs()[i] * (w.perm()[i] + 1));
  }
  return out + ")";
}

inline WeylElement parse_weyl_element(std::string text)
{
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("Weyl element must look like (2,-1)");
  text = text.substr(1, text.size() - 2);
  std::vector<int> perm, signs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const int v = std::stoi(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (v == 0) throw std::invalid_argument("Weyl element entries are nonzero");
    perm.push_back(std::abs(v) - 1);
    signs.push_back(v > 0 ? 1 : -1);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return WeylElement(std::move(perm), std::move(signs));
}

/// A root is positive iff its first nonzero coordinate is positive.
inline bool is_positive_root_vector(const Weight& w)
{
  for (std::size_t i = 0; i < w.rank(); ++i)
    if (sgn(w[i]) != 0) return w[i] > 0;
  return false;
}

/// Number of positive even roots sent to negative roots.
inline std::size_t length(const WeylElement& w)
{
  const auto n = w.rank();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // 2 delta_i
    if (w.signs()[i] < 0) ++count;
    for (std::size_t j = i + 1; j < n; ++j) {
      // delta_i - delta_j and delta_i + delta_j
      Weight minus(n), plus(n);
      minus[w.perm()[i]] += w.signs()[i];
      minus[w.perm()[j]] -= w.signs()[j];
      plus[w.perm()[i]] += w.signs()[i];
      plus[w.perm()[j]] += w.signs()[j];
      if (!is_positive_root_vector(minus)) ++count;
      if (!is_positive_root_vector(plus)) ++count;
    }
  }
  return count;
}

inline constexpr std::size_t kDefaultWeylBound = 5;

inline std::vector<WeylElement> enumerate_weyl(std::size_t n, std::size_t bound = kDefaultWeylBound)
{
  if (n == 0) throw std::invalid_argument("enumerate_weyl: n must be positive");
  if (n > bound) throw std::invalid_argument("enumerate_weyl: n exceeds configured bound " + std::to_string(bound));
  std::vector<WeylElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signs(n);
      for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1u ? -1 : 1;
      out.emplace_back(perm, signs);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// W(k), sorted.
inline std::vector<WeylElement> elements_of_length(std::size_t n, std::size_t k)
{
  std::vector<WeylElement> out;
  if (k > n * n) return out;
  for (auto& w : enumerate_weyl(n))
    if (length(w) == k) out.push_back(std::move(w));
  return out;
}

/// Reduced word (indices of simple reflections) with w = s_{i1} ... s_{il},
/// found by repeatedly stripping a right descent.
inline std::vector<std::size_t> reduced_word(const WeylElement& w)
{
  std::vector<std::size_t> word;
  WeylElement cur = w;
  const auto n = w.rank();
  while (!cur.is_identity()) {
    const auto l = length(cur);
    bool found = false;
    for (std::size_t k = 0; k < n; ++k) {
      auto shorter = cur * WeylElement::simple_reflection(n, k);
      if (length(shorter) < l) {
        word.push_back(k);
        cur = std::move(shorter);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// Bruhat order via the subword property: v <= w iff v is the product of a
/// subword of a reduced word of w.
inline bool bruhat_leq(const WeylElement& v, const WeylElement& w)
{
  if (v.rank() != w.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  if (length(v) > length(w)) return false;
  const auto word = reduced_word(w);
  const auto n = w.rank();
  // Products of all subwords of the first i letters, deduplicated.
  std::set<WeylElement> prefixes{WeylElement::identity(n)};
  for (auto letter : word) {
    const auto s = WeylElement::simple_reflection(n, letter);
    std::set<WeylElement> next = prefixes;
    for (const auto& p : prefixes) next.insert(p * s);
    prefixes = std::move(next);
  }
  return prefixes.count(v) > 0;
}

inline Weight dot_act(const WeylElement& w, const Weight& mu, const RootSystem& rs)
{
  if (mu.rank() != rs.rank()) throw std::invalid_argument("dot_act: rank mismatch");
  return w.act(mu + rs.rho()) - rs.rho();
}

inline Weight dot_act(const WeylElement& w, const Weight& mu) { return dot_act(w, mu, build_root_system(mu.rank())); }

struct DominantForm {
  WeylElement w;
  Weight dominant;
};

/// nullopt when mu is dot-singular; otherwise the unique w with w.mu
/// dot-dominant (w.mu + rho strictly decreasing and positive).
using DominantResult = std::optional<DominantForm>;

inline DominantResult to_dominant(const Weight& mu, const RootSystem& rs)
{
  if (!is_dot_regular(mu, rs)) return std::nullopt;
  const auto n = mu.rank();
  const Weight x = mu + rs.rho();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto absval = [&](std::size_t i) { return x[i] < 0 ? Rational(-x[i]) : x[i]; };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return absval(a) > absval(b); });
  std::vector<int> perm(n), signs(n);
  for (std::size_t p = 0; p < n; ++p) {
    perm[order[p]] = static_cast<int>(p);
    signs[order[p]] = x[order[p]] < 0 ? -1 : 1;
  }
  WeylElement w(std::move(perm), std::move(signs));
  Weight dom = dot_act(w, mu, rs);
  return DominantForm{std::move(w), std::move(dom)};
}

inline DominantResult to_dominant(const Weight& mu) { return to_dominant(mu, build_root_system(mu.rank())); }

/// Dot orbit W.lambda as a set.
inline std::set<Weight> dot_orbit(const Weight& lambda, const RootSystem& rs)
{
  std::set<Weight> orbit;
  for (const auto& w : enumerate_weyl(rs.rank())) orbit.insert(dot_act(w, lambda, rs));
  return orbit;
}

inline bool same_central_character(const Weight& mu, const Weight& lambda)
{
  if (mu.rank() != lambda.rank()) throw std::invalid_argument("same_central_character: rank mismatch");
  const auto rs = build_root_system(lambda.rank());
  return dot_orbit(lambda, rs).count(mu) > 0;
}

/// Reflections of h* in the positive roots delta_i - delta_j, delta_i + delta_j
/// and 2 delta_i (the last coincides with the reflection in the odd root delta_i).
inline std::vector<Weight> reflect_all(const Weight& x)
{
  std::vector<Weight> out;
  const auto n = x.rank();
  for (std::size_t i = 0; i < n; ++i) {
    Weight flip = x;
    flip[i] = -flip[i];
    out.push_back(std::move(flip));
    for (std::size_t j = i + 1; j < n; ++j) {
      Weight swap = x;
      std::swap(swap[i], swap[j]);
      out.push_back(std::move(swap));
      Weight swap_neg = x;
      swap_neg[i] = -x[j];
      swap_neg[j] = -x[i];
      out.push_back(std::move(swap_neg));
    }
  }
  return out;
}

/// mu is strongly linked to lambda: mu == lambda, or mu is reached from lambda
/// by a chain of dot-reflections each of which moves weakly down in the
/// dominance order.
inline bool strongly_linked(const Weight& mu, const Weight& lambda)
{
  if (mu.rank() != lambda.rank()) throw std::invalid_argument("strongly_linked: rank mismatch");
  if (mu == lambda) return true;
  const auto rs = build_root_system(lambda.rank());
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight nu = queue.front();
    queue.pop_front();
    for (auto& r : reflect_all(nu + rs.rho())) {
      Weight next = r - rs.rho();
      if (next == nu || !in_positive_cone(nu - next)) continue;
      if (next == mu) return true;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace osp
