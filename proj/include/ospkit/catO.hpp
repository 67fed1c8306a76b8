#pragma once

// Category-O level data: BGG resolution terms with a character-level
// exactness check, Ext^k(M(mu), L(lambda)), Bott-Borel-Weil answers and
// projective dimensions in the regular integral block.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "charlib.hpp"
#include "weyl.hpp"

namespace osp {

struct ResolutionEntry {
  WeylElement w;
  Weight weight;  // w.lambda
};

struct BGGResolution {
  Weight lambda;
  std::vector<std::vector<ResolutionEntry>> terms;  // terms[k] = {(w, w.lambda) : l(w) = k}
};

inline BGGResolution bgg_resolution(const Weight& lambda)
{
  if (!is_integral_dominant(lambda)) throw std::invalid_argument("bgg_resolution: weight is not integral dominant");
  const auto n = lambda.rank();
  const auto rs = build_root_system(n);
  BGGResolution res;
  res.lambda = lambda;
  for (std::size_t k = 0; k <= n * n; ++k) {
    std::vector<ResolutionEntry> term;
    for (auto& w : elements_of_length(n, k)) {
      Weight mu = dot_act(w, lambda, rs);
      term.push_back({std::move(w), std::move(mu)});
    }
    res.terms.push_back(std::move(term));
  }
  return res;
}

/// Weights lambda - sum c_i alpha_i with sum c_i <= bound.
inline std::vector<Weight> weights_below(const Weight& lambda, std::size_t bound)
{
  const auto rs = build_root_system(lambda.rank());
  std::vector<Weight> out;
  std::function<void(std::size_t, std::size_t, Weight)> rec = [&](std::size_t i, std::size_t left, Weight cur) {
    if (i == lambda.rank()) {
      out.push_back(std::move(cur));
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      rec(i + 1, left - c, cur);
      cur -= rs.simple_roots()[i].weight;
    }
  };
  rec(0, bound, lambda);
  return out;
}

/// sum_k (-1)^k sum_{w in W(k)} ch M(w.lambda) == ch L(lambda) at every weight
/// mu with height(lambda - mu) <= height_bound.
inline bool verify_resolution_characters(const Weight& lambda, std::size_t height_bound)
{
  const auto res = bgg_resolution(lambda);
  const auto ch = simple_character(lambda);
  for (const auto& mu : weights_below(lambda, height_bound)) {
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < res.terms.size(); ++k)
      for (const auto& e : res.terms[k]) {
        const auto m = static_cast<std::int64_t>(verma_mult(e.weight, mu));
        alt += k % 2 ? -m : m;
      }
    if (alt != static_cast<std::int64_t>(ch[mu])) return false;
  }
  return true;
}

/// dim Ext^k_O(M(mu), L(lambda)): 1 iff mu = w.lambda with l(w) = k.
inline std::size_t ext_dim(const Weight& mu, const Weight& lambda, std::size_t k)
{
  if (!is_integral_dominant(lambda)) throw std::invalid_argument("ext_dim: lambda is not integral dominant");
  const auto rs = build_root_system(lambda.rank());
  for (const auto& w : elements_of_length(lambda.rank(), k))
    if (dot_act(w, lambda, rs) == mu) return 1;
  return 0;
}

/// Sheaf cohomology of the line bundle attached to lambda: zero when lambda
/// is dot-singular, otherwise L(Lambda) in the single degree l(w).
struct BBWAnswer {
  bool zero = true;
  std::size_t k = 0;
  Weight highest_weight;
};

inline BBWAnswer bbw(const Weight& line_weight)
{
  if (!line_weight.is_integral()) throw std::invalid_argument("bbw: weight must be integral");
  const auto dom = to_dominant(line_weight);
  if (!dom) return {};
  return {false, length(dom->w), dom->dominant};
}

/// p.d. M(w.lambda) for regular integral dominant lambda.
inline std::size_t pd_verma(const WeylElement& w) { return length(w); }

/// p.d. L(w.lambda) for regular integral dominant lambda.
inline std::size_t pd_simple(const WeylElement& w) { return 2 * w.rank() * w.rank() - length(w); }

/// Global dimension of a regular integral block.
inline std::size_t global_dim(std::size_t n)
{
  if (n == 0) throw std::invalid_argument("global_dim: n must be positive");
  return 2 * n * n;
}

struct ProjectiveDimensions {
  WeylElement w;          // mu = w.Lambda with Lambda dominant
  Weight dominant;
  std::size_t verma = 0;  // p.d. M(mu)
  std::size_t simple = 0; // p.d. L(mu)
};

/// Projective dimensions of M(mu) and L(mu) for an integral mu in a regular
/// block. Singular blocks are rejected.
inline ProjectiveDimensions projective_dimensions(const Weight& mu)
{
  if (!mu.is_integral()) throw std::invalid_argument("projective_dimensions: weight must be integral");
  const auto dom = to_dominant(mu);
  if (!dom) throw std::domain_error("projective_dimensions: " + to_string(mu) + " lies in a singular block");
  const WeylElement w = dom->w.inverse();
  return {w, dom->dominant, pd_verma(w), pd_simple(w)};
}

}  // namespace osp
