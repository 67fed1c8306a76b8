#pragma once

// Root data of osp(1|2n) for the standard (distinguished) positive system
// with simple roots delta_1 - delta_2, ..., delta_{n-1} - delta_n, delta_n.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "weight.hpp"

namespace osp {

enum class Parity { even, odd };

inline int parity_bit(Parity p) { return p == Parity::odd ? 1 : 0; }

struct Root {
  Weight weight;
  Parity parity = Parity::even;
  bool positive = true;
};

/// Number of simple roots in the expansion of an element of the root lattice
/// (sum of the coefficients; may be negative or fractional off the lattice).
inline Rational height(const Weight& w)
{
  Rational total = 0, partial = 0;
  for (std::size_t k = 0; k < w.rank(); ++k) {
    partial += w[k];
    total += partial;
  }
  return total;
}

/// True iff w is a non-negative integer combination of the simple roots.
/// The coefficient of delta_k - delta_{k+1} (resp. delta_n) is the k-th
/// partial sum of the coordinates.
inline bool in_positive_cone(const Weight& w)
{
  Rational partial = 0;
  for (std::size_t k = 0; k < w.rank(); ++k) {
    partial += w[k];
    if (!is_integer(partial) || partial < 0) return false;
  }
  return true;
}

inline Rational inner(const Weight& mu, const Weight& nu)
{
  if (mu.rank() != nu.rank()) throw std::invalid_argument("inner: rank mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < mu.rank(); ++i) s += mu[i] * nu[i];
  return s;
}

class RootSystem {
 public:
  std::size_t rank() const { return rank_; }
  const std::vector<Root>& positive_even() const { return even_; }
  const std::vector<Root>& positive_odd() const { return odd_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  const Weight& rho() const { return rho_; }

  /// All positive roots in the fixed global order used for PBW words and
  /// chain monomials: even roots by height then lexicographically, then odd
  /// roots by height then lexicographically.
  const std::vector<Root>& positive() const { return all_; }
  std::size_t num_positive() const { return all_.size(); }

  /// Index of a positive root in positive(), or -1.
  int index_of(const Weight& w) const
  {
    for (std::size_t i = 0; i < all_.size(); ++i)
      if (all_[i].weight == w) return static_cast<int>(i);
    return -1;
  }

  /// Index in positive() of delta_i (odd) and 2 delta_i (even), 0-based i.
  int short_index(std::size_t i) const { return index_of(Weight::unit(rank_, i)); }
  int long_index(std::size_t i) const { return index_of(Rational(2) * Weight::unit(rank_, i)); }

  /// Index in positive() of the k-th simple root.
  int simple_index(std::size_t k) const { return index_of(simple_.at(k).weight); }

  friend RootSystem build_root_system(std::size_t n);

 private:
  std::size_t rank_ = 0;
  std::vector<Root> even_, odd_, simple_, all_;
  Weight rho_;
};

inline RootSystem build_root_system(std::size_t n)
{
  if (n == 0) throw std::invalid_argument("osp(1|2n) needs rank n >= 1");
  RootSystem rs;
  rs.rank_ = n;
  auto e = [n](std::size_t i) { return Weight::unit(n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rs.even_.push_back({e(i) - e(j), Parity::even, true});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) rs.even_.push_back({e(i) + e(j), Parity::even, true});
  for (std::size_t i = 0; i < n; ++i) rs.odd_.push_back({e(i), Parity::odd, true});

  auto by_height = [](const Root& a, const Root& b) {
    const auto ha = height(a.weight), hb = height(b.weight);
    if (ha != hb) return ha < hb;
    return a.weight < b.weight;
  };
  std::sort(rs.even_.begin(), rs.even_.end(), by_height);
  std::sort(rs.odd_.begin(), rs.odd_.end(), by_height);
  rs.all_ = rs.even_;
  rs.all_.insert(rs.all_.end(), rs.odd_.begin(), rs.odd_.end());

  for (std::size_t i = 0; i + 1 < n; ++i) rs.simple_.push_back({e(i) - e(i + 1), Parity::even, true});
  rs.simple_.push_back({e(n - 1), Parity::odd, true});

  Weight sum_even(n), sum_odd(n);
  for (const auto& r : rs.even_) sum_even += r.weight;
  for (const auto& r : rs.odd_) sum_odd += r.weight;
  rs.rho_ = Rational(1, 2) * (sum_even - sum_odd);
  return rs;
}

/// Integral dominant for osp(1|2n): integer coordinates with
/// lambda_1 >= ... >= lambda_n >= 0.
inline bool is_integral_dominant(const Weight& lambda)
{
  if (!lambda.is_integral()) return false;
  for (std::size_t i = 0; i + 1 < lambda.rank(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return lambda.rank() == 0 || lambda[lambda.rank() - 1] >= 0;
}

/// Trivial stabilizer of lambda + rho under signed permutations: the absolute
/// values of the shifted coordinates are nonzero and pairwise distinct.
inline bool is_dot_regular(const Weight& lambda, const RootSystem& rs)
{
  const Weight shifted = lambda + rs.rho();
  std::vector<Rational> abs;
  for (std::size_t i = 0; i < shifted.rank(); ++i) {
    if (sgn(shifted[i]) == 0) return false;
    abs.push_back(shifted[i] < 0 ? Rational(-shifted[i]) : shifted[i]);
  }
  std::sort(abs.begin(), abs.end());
  return std::adjacent_find(abs.begin(), abs.end()) == abs.end();
}

inline bool is_dot_regular(const Weight& lambda) { return is_dot_regular(lambda, build_root_system(lambda.rank())); }

/// Text label for a positive root, e.g. "d1-d2", "2d1", "d2".
inline std::string root_label(const Weight& w)
{
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (sgn(w[i]) == 0) continue;
    const std::string d = "d" + std::to_string(i + 1);
    if (w[i] == 2) out += (out.empty() ? "" : "+") + std::string("2") + d;
    else if (w[i] == 1) out += (out.empty() ? "" : "+") + d;
    else if (w[i] == -1) out += "-" + d;
    else out += (out.empty() ? "" : "+") + to_string(w[i]) + d;
  }
  return out;
}

}  // namespace osp
