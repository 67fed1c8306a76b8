#pragma once

// Exact homology of the chain complex per weight block, the Laplacian-kernel
// weights, the A + delta*A + R splitting, the isomorphism A_k -> B_{k-1}
// induced by delta*, and homology recomputed on the reduced complex R.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chains.hpp"
#include "charlib.hpp"
#include "weyl.hpp"

namespace osp {

struct HomologyBlock {
  std::size_t k = 0;
  Weight mu;
  std::size_t dim_c = 0;
  std::size_t rank_out = 0;  // rank delta*_k
  std::size_t rank_in = 0;   // rank delta*_{k+1}
  std::size_t dim_h = 0;
};

struct HomologyReport {
  Weight lambda;
  std::size_t k_max = 0;
  std::vector<HomologyBlock> blocks;
  std::map<std::size_t, FormalCharacter> homology;   // per degree
  std::map<std::size_t, FormalCharacter> predicted;  // {w.lambda : w in W(k)}
  bool match = false;
};

/// Predicted homology: C_{w.lambda} for each w of length k.
inline FormalCharacter predicted_homology(const Weight& lambda, std::size_t k)
{
  const auto rs = build_root_system(lambda.rank());
  FormalCharacter ch;
  for (const auto& w : elements_of_length(lambda.rank(), k)) ch.add(dot_act(w, lambda, rs));
  return ch;
}

/// Ranks of delta* per (k, mu), memoized across calls.
class BoundaryRanks {
 public:
  explicit BoundaryRanks(const ChainComplex& C) : C_(C) {}

  std::size_t operator()(std::size_t k, const Weight& mu)
  {
    if (k == 0) return 0;
    auto key = std::make_pair(k, mu);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const std::size_t r = rank(C_.delta_star(k, mu));
    cache_.emplace(std::move(key), r);
    return r;
  }

 private:
  const ChainComplex& C_;
  std::map<std::pair<std::size_t, Weight>, std::size_t> cache_;
};

inline HomologyReport homology_dims(const ChainComplex& C, std::size_t k_max)
{
  if (k_max < 1) throw std::invalid_argument("homology_dims: k_max must be at least 1");
  HomologyReport rep;
  rep.lambda = C.module().highest_weight();
  rep.k_max = k_max;
  BoundaryRanks ranks(C);
  rep.match = true;
  for (std::size_t k = 0; k <= k_max; ++k) {
    FormalCharacter h;
    for (const auto& [mu, blk] : C.blocks(k)) {
      HomologyBlock hb{k, mu, blk.dim(), ranks(k, mu), C.block(k + 1, mu) ? ranks(k + 1, mu) : 0, 0};
      if (hb.rank_out + hb.rank_in > hb.dim_c) throw std::logic_error("homology: ranks exceed block dimension");
      hb.dim_h = hb.dim_c - hb.rank_out - hb.rank_in;
      h.add(mu, hb.dim_h);
      rep.blocks.push_back(std::move(hb));
    }
    rep.predicted[k] = predicted_homology(rep.lambda, k);
    if (!(h == rep.predicted[k])) rep.match = false;
    rep.homology[k] = std::move(h);
  }
  return rep;
}

struct LaplacianReport {
  std::size_t k = 0;
  std::map<Weight, std::size_t> kernel;  // only blocks meeting the norm condition
  std::size_t total = 0;
};

/// Blocks with <mu+rho, mu+rho> = <lambda+rho, lambda+rho>.
inline LaplacianReport laplacian_kernel(const ChainComplex& C, std::size_t k)
{
  const auto& rs = C.roots();
  const Weight& lambda = C.module().highest_weight();
  const Rational target = inner(lambda + rs.rho(), lambda + rs.rho());
  LaplacianReport rep;
  rep.k = k;
  for (const auto& [mu, blk] : C.blocks(k))
    if (inner(mu + rs.rho(), mu + rs.rho()) == target) {
      rep.kernel[mu] = blk.dim();
      rep.total += blk.dim();
    }
  return rep;
}

struct DecompositionBlock {
  Weight mu;
  std::size_t dim_c = 0, dim_a = 0, dim_delta_a = 0, dim_r = 0;
  std::size_t dim_b = 0;         // B_k monomials
  std::size_t dim_a_next = 0;    // A_{k+1} monomials
  bool a_meets_kernel = false;   // A_k intersects ker delta*
  bool direct_and_spanning = false;
};

struct DecompositionReport {
  std::size_t k = 0;
  std::vector<DecompositionBlock> blocks;
  bool ok = false;
};

namespace detail {

/// delta* applied to the A-monomials of C_{k+1}^mu, as columns in C_k^mu.
inline Matrix delta_of_a(const ChainComplex& C, std::size_t k, const Weight& mu)
{
  const ChainBlock* up = C.block(k + 1, mu);
  const ChainBlock* here = C.block(k, mu);
  if (!up || !here) return Matrix(here ? here->dim() : 0, 0);
  return C.delta_star(k + 1, mu).select_cols(up->indices(TagKind::A));
}

/// Matrix with a unit column for every index in `which`.
inline Matrix coordinate_columns(std::size_t dim, const std::vector<std::size_t>& which)
{
  Matrix m(dim, which.size());
  for (std::size_t j = 0; j < which.size(); ++j) m(which[j], j) = 1;
  return m;
}

/// phi_k on the weight-mu block: delta* on A_k followed by the projection to
/// the B-coordinates of C_{k-1}.
inline Matrix phi_matrix(const ChainComplex& C, std::size_t k, const Weight& mu)
{
  const ChainBlock* src = C.block(k, mu);
  const ChainBlock* dst = C.block(k - 1, mu);
  const auto a = src ? src->indices(TagKind::A) : std::vector<std::size_t>{};
  const auto b = dst ? dst->indices(TagKind::B) : std::vector<std::size_t>{};
  if (!src || !dst) return Matrix(b.size(), a.size());
  return C.delta_star(k, mu).select_cols(a).select_rows(b);
}

}  // namespace detail

/// Checks A_k meets ker delta* trivially and C_k = A_k + delta*A_{k+1} + R_k
/// is direct, by exact rank arithmetic on every weight block of C_k.
inline DecompositionReport verify_decomposition(const ChainComplex& C, std::size_t k)
{
  DecompositionReport rep;
  rep.k = k;
  rep.ok = true;
  for (const auto& [mu, blk] : C.blocks(k)) {
    DecompositionBlock d;
    d.mu = mu;
    d.dim_c = blk.dim();
    const auto a = blk.indices(TagKind::A);
    const auto r = blk.indices(TagKind::R);
    d.dim_a = a.size();
    d.dim_r = r.size();
    d.dim_b = blk.indices(TagKind::B).size();
    if (const ChainBlock* up = C.block(k + 1, mu)) d.dim_a_next = up->indices(TagKind::A).size();

    if (k == 0 || a.empty()) d.a_meets_kernel = false;
    else d.a_meets_kernel = rank(C.delta_star(k, mu).select_cols(a)) != a.size();

    const Matrix da = detail::delta_of_a(C, k, mu);
    d.dim_delta_a = rank(da);
    const Matrix all = hstack(hstack(detail::coordinate_columns(blk.dim(), a), da), detail::coordinate_columns(blk.dim(), r));
    d.direct_and_spanning = d.dim_a + d.dim_delta_a + d.dim_r == d.dim_c && rank(all) == d.dim_c;

    const bool good = !d.a_meets_kernel && d.direct_and_spanning && d.dim_delta_a == d.dim_b && d.dim_b == d.dim_a_next;
    if (!good) rep.ok = false;
    rep.blocks.push_back(std::move(d));
  }
  return rep;
}

/// phi: A_k -> C_{k-1}/(A + R) ~ B_{k-1} is bijective on every weight block.
inline bool verify_phi_iso(const ChainComplex& C, std::size_t k)
{
  if (k == 0) throw std::invalid_argument("verify_phi_iso: degree must be positive");
  std::set<Weight> weights;
  for (const auto& [mu, b] : C.blocks(k)) weights.insert(mu);
  for (const auto& [mu, b] : C.blocks(k - 1)) weights.insert(mu);
  for (const auto& mu : weights) {
    const Matrix phi = detail::phi_matrix(C, k, mu);
    if (phi.rows() != phi.cols() || rank(phi) != phi.cols()) return false;
  }
  return true;
}

/// Matrix of the induced differential d_k : R_k -> R_{k-1} on the weight-mu
/// block. C_{k-1} = A_{k-1} + delta*A_k + R_{k-1}; the delta*A_k component of
/// delta*(r) is identified through its B-coordinates and phi_k^{-1}.
inline Matrix reduced_differential(const ChainComplex& C, std::size_t k, const Weight& mu)
{
  const ChainBlock* src = C.block(k, mu);
  const ChainBlock* dst = C.block(k - 1, mu);
  const auto r_src = src ? src->indices(TagKind::R) : std::vector<std::size_t>{};
  const auto r_dst = dst ? dst->indices(TagKind::R) : std::vector<std::size_t>{};
  Matrix d(r_dst.size(), r_src.size());
  if (!src || !dst || r_src.empty() || r_dst.empty()) return d;
  const Matrix full = C.delta_star(k, mu);
  const auto a_src = src->indices(TagKind::A);
  const auto b_dst = dst->indices(TagKind::B);
  const Matrix phi = detail::phi_matrix(C, k, mu);
  if (phi.rows() != phi.cols() || rank(phi) != phi.cols())
    throw std::runtime_error("reduced complex: phi is not invertible at degree " + std::to_string(k) + ", weight " +
                             to_string(mu));
  const Matrix delta_a = full.select_cols(a_src);
  for (std::size_t j = 0; j < r_src.size(); ++j) {
    Vector v = full.col(r_src[j]);
    if (!b_dst.empty()) {
      Vector vb(b_dst.size());
      for (std::size_t i = 0; i < b_dst.size(); ++i) vb[i] = v[b_dst[i]];
      const auto coeffs = solve(phi, vb);
      if (!coeffs) throw std::runtime_error("reduced complex: B-component not in the image of phi");
      const Vector correction = delta_a.apply(*coeffs);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= correction[i];
    }
    for (std::size_t i = 0; i < r_dst.size(); ++i) d(i, j) = v[r_dst[i]];
  }
  return d;
}

/// Homology of (R, d); equal to homology_dims when A + delta*A is an exact
/// subcomplex complementary to R.
inline HomologyReport reduced_homology_dims(const ChainComplex& C, std::size_t k_max)
{
  if (k_max < 1) throw std::invalid_argument("reduced_homology_dims: k_max must be at least 1");
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto dec = verify_decomposition(C, k);
    if (!dec.ok) throw std::runtime_error("reduced complex: decomposition fails at degree " + std::to_string(k));
  }
  if (!verify_phi_iso(C, k_max + 1))
    throw std::runtime_error("reduced complex: phi fails at degree " + std::to_string(k_max + 1));
  HomologyReport rep;
  rep.lambda = C.module().highest_weight();
  rep.k_max = k_max;
  rep.match = true;
  std::map<std::pair<std::size_t, Weight>, std::size_t> ranks;
  auto rank_d = [&](std::size_t k, const Weight& mu) -> std::size_t {
    if (k == 0) return 0;
    auto key = std::make_pair(k, mu);
    if (auto it = ranks.find(key); it != ranks.end()) return it->second;
    const auto r = rank(reduced_differential(C, k, mu));
    ranks.emplace(key, r);
    return r;
  };
  for (std::size_t k = 0; k <= k_max; ++k) {
    FormalCharacter h;
    for (const auto& [mu, blk] : C.blocks(k)) {
      HomologyBlock hb{k, mu, blk.indices(TagKind::R).size(), rank_d(k, mu), rank_d(k + 1, mu), 0};
      if (hb.rank_out + hb.rank_in > hb.dim_c) throw std::logic_error("reduced homology: ranks exceed block dimension");
      hb.dim_h = hb.dim_c - hb.rank_out - hb.rank_in;
      h.add(mu, hb.dim_h);
      rep.blocks.push_back(std::move(hb));
    }
    rep.predicted[k] = predicted_homology(rep.lambda, k);
    if (!(h == rep.predicted[k])) rep.match = false;
    rep.homology[k] = std::move(h);
  }
  return rep;
}

/// sum_k (-1)^k ch H_k over the degrees in the report.
inline SignedCharacter euler_characteristic(const HomologyReport& rep)
{
  SignedCharacter out;
  for (const auto& [k, ch] : rep.homology)
    for (const auto& [w, m] : ch) out.add(w, (k % 2 ? -1 : 1) * static_cast<std::int64_t>(m));
  return out;
}

}  // namespace osp
