#pragma once

// Full verification battery for one highest weight: every check that is
// parameterized by lambda. Shared by the CLI and the acceptance binary.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "catO.hpp"
#include "homology.hpp"
#include "oracles.hpp"
#include "serialize.hpp"

namespace osp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// delta*_{k-1} delta*_k vanishes on every weight block with k <= k_top.
inline bool boundary_squares_to_zero(const ChainComplex& C, std::size_t k_top)
{
  for (std::size_t k = 2; k <= k_top; ++k)
    for (const auto& [mu, blk] : C.blocks(k)) {
      if (!C.block(k - 1, mu) || !C.block(k - 2, mu)) continue;
      if (!(C.delta_star(k - 1, mu) * C.delta_star(k, mu)).is_zero()) return false;
    }
  return true;
}

/// Every nonzero entry of delta* maps a monomial of grading D to monomials of
/// grading at most D.
inline bool grading_never_rises(const ChainComplex& C, std::size_t k_top)
{
  for (std::size_t k = 1; k <= k_top; ++k)
    for (const auto& [mu, src] : C.blocks(k)) {
      const ChainBlock* dst = C.block(k - 1, mu);
      if (!dst) continue;
      const Matrix d = C.delta_star(k, mu);
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
          if (sgn(d(i, j)) != 0 && dst->gradings[i] > src.gradings[j]) return false;
    }
  return true;
}

/// Blockwise dim ker(Laplacian) >= dim H_k.
inline bool laplacian_contains_homology(const ChainComplex& C, const HomologyReport& rep)
{
  for (const auto& [k, h] : rep.homology) {
    const auto lap = laplacian_kernel(C, k);
    for (const auto& [mu, d] : h) {
      auto it = lap.kernel.find(mu);
      if (d > (it == lap.kernel.end() ? 0 : it->second)) return false;
    }
  }
  return true;
}

/// Height of lambda - w0.lambda plus a margin: the window checked for BGG.
inline std::size_t bgg_height_bound(const Weight& lambda)
{
  const auto n = lambda.rank();
  const Weight low = dot_act(WeylElement::longest(n), lambda);
  return static_cast<std::size_t>(to_long(height(lambda - low))) + 4;
}

inline std::vector<CheckResult> verify_weight(const Weight& lambda, const std::optional<std::filesystem::path>& cache_dir = {},
                                              bool with_oracles = true)
{
  if (!is_integral_dominant(lambda)) throw std::invalid_argument("verify_weight: weight is not integral dominant");
  const std::size_t n = lambda.rank();
  const std::size_t k_max = n * n + 1;
  std::vector<CheckResult> out;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };

  auto L = std::make_shared<const SimpleModule>(cached_simple_quotient(cache_dir, lambda));
  ChainComplex C(L);

  const auto rep = homology_dims(C, k_max);
  check("homology equals the dot orbit by length", rep.match);
  check("delta* squares to zero", boundary_squares_to_zero(C, k_max + 1));

  bool reduced_equal = false;
  std::string reduced_detail;
  try {
    const auto red = reduced_homology_dims(C, k_max);
    reduced_equal = red.homology == rep.homology;
  } catch (const std::exception& e) {
    reduced_detail = e.what();
  }
  check("reduced complex has the same homology", reduced_equal, reduced_detail);

  bool dec_ok = true;
  std::string dec_detail;
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (!verify_decomposition(C, k).ok) {
      dec_ok = false;
      dec_detail += "decomposition fails at k=" + std::to_string(k) + "; ";
    }
    if (k >= 1 && !verify_phi_iso(C, k)) {
      dec_ok = false;
      dec_detail += "phi fails at k=" + std::to_string(k) + "; ";
    }
  }
  check("A + delta*A + R splitting and phi isomorphism", dec_ok, dec_detail);

  check("Laplacian kernel contains homology", laplacian_contains_homology(C, rep));

  const auto freud = simple_character(lambda);
  check("Verma quotient character equals Freudenthal", L->character() == freud,
        "dim " + std::to_string(L->dimension()) + " vs " + std::to_string(freud.dimension()));

  check("Euler characteristic identity", euler_characteristic(rep) == euler_rhs(lambda));

  const auto bound = bgg_height_bound(lambda);
  check("BGG resolution exact on characters (height <= " + std::to_string(bound) + ")",
        verify_resolution_characters(lambda, bound));

  check("delta* never raises the grading", grading_never_rises(C, k_max + 1));

  if (with_oracles && n <= 2) {
    std::size_t failed = 0;
    std::string first;
    const auto results = oracle_suite(n, lambda);
    for (const auto& r : results)
      if (!r.pass) {
        if (!failed) first = r.name + ": expected " + r.expected + ", got " + r.actual;
        ++failed;
      }
    check("oracle suite (" + std::to_string(results.size()) + " checks)", failed == 0, first);
  }
  return out;
}

}  // namespace osp
