#pragma once

// Chain spaces C_k = Lambda^k n-bar (x) L(lambda) on monomial bases, the
// boundary operator, the R/A/B classification and the grading D.
//
// Wedge signs follow v ^ w = -(-1)^{p(v)p(w)} w ^ v: even factors anticommute
// with everything, odd factors commute with each other. A monomial stores its
// factors in the canonical order of RootSystem::positive() (even roots first,
// then odd roots) with multiplicities; only odd roots may repeat.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "liealg.hpp"
#include "verma.hpp"

namespace osp {

struct ChainMonomial {
  std::vector<int> factors;  // multiplicity per positive root
  Weight module_weight;
  std::size_t vector_index = 0;

  std::size_t degree() const
  {
    std::size_t k = 0;
    for (int e : factors) k += static_cast<std::size_t>(e);
    return k;
  }

  friend bool operator==(const ChainMonomial&, const ChainMonomial&) = default;
  friend bool operator<(const ChainMonomial& a, const ChainMonomial& b)
  {
    if (a.factors != b.factors) return a.factors < b.factors;
    if (!(a.module_weight == b.module_weight)) return a.module_weight < b.module_weight;
    return a.vector_index < b.vector_index;
  }
};

using Chain = std::map<ChainMonomial, Rational>;

inline void add_scaled(Chain& into, const Chain& c, const Rational& s)
{
  if (sgn(s) == 0) return;
  for (const auto& [m, v] : c) {
    auto& slot = into[m];
    slot += s * v;
    if (sgn(slot) == 0) into.erase(m);
  }
}

/// Total weight: module weight minus the factor roots.
inline Weight chain_weight(const RootSystem& rs, const ChainMonomial& m)
{
  Weight w = m.module_weight;
  for (std::size_t r = 0; r < m.factors.size(); ++r)
    if (m.factors[r]) w -= Rational(m.factors[r]) * rs.positive()[r].weight;
  return w;
}

/// Sorts an ordered product of root vectors into canonical order. Returns the
/// sign and multiplicity vector, or nullopt when the product vanishes (an even
/// factor repeated).
inline std::optional<std::pair<int, std::vector<int>>> canonicalize(const RootSystem& rs, std::vector<std::size_t> word)
{
  const auto& roots = rs.positive();
  int sign = 1;
  for (std::size_t i = 1; i < word.size(); ++i)
    for (std::size_t j = i; j > 0 && word[j - 1] >= word[j]; --j) {
      if (word[j - 1] == word[j]) {
        if (roots[word[j]].parity == Parity::even) return std::nullopt;
        break;
      }
      const bool both_odd = roots[word[j - 1]].parity == Parity::odd && roots[word[j]].parity == Parity::odd;
      if (!both_odd) sign = -sign;
      std::swap(word[j - 1], word[j]);
    }
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] == word[i] && roots[word[i]].parity == Parity::even) return std::nullopt;
  std::vector<int> mult(roots.size(), 0);
  for (auto r : word) ++mult[r];
  return std::make_pair(sign, std::move(mult));
}

/// Factors of a monomial as an ordered word.
inline std::vector<std::size_t> expand(const std::vector<int>& factors)
{
  std::vector<std::size_t> word;
  for (std::size_t r = 0; r < factors.size(); ++r)
    for (int e = 0; e < factors[r]; ++e) word.push_back(r);
  return word;
}

enum class TagKind { R, A, B };

struct ChainTag {
  TagKind kind = TagKind::R;
  std::size_t index = 0;  // j (0-based) for A^{(j)} / B^{(j)}

  friend bool operator==(const ChainTag&, const ChainTag&) = default;
};

inline std::string to_string(const ChainTag& t)
{
  switch (t.kind) {
    case TagKind::R: return "R";
    case TagKind::A: return "A(" + std::to_string(t.index + 1) + ")";
    case TagKind::B: return "B(" + std::to_string(t.index + 1) + ")";
  }
  return "?";
}

/// R if no Y_{2delta_i} and no Y_{delta_i}^2 occurs. Otherwise let j be the
/// smallest index where one of them occurs: B^{(j)} if Y_{2delta_j} is
/// present, else A^{(j)}.
inline ChainTag classify(const RootSystem& rs, const ChainMonomial& m)
{
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    const int longr = m.factors[static_cast<std::size_t>(rs.long_index(j))];
    const int shortr = m.factors[static_cast<std::size_t>(rs.short_index(j))];
    if (longr > 0) return {TagKind::B, j};
    if (shortr >= 2) return {TagKind::A, j};
  }
  return {TagKind::R, 0};
}

/// #(factors delta_i - delta_j) - #(factors delta_i + delta_j), i < j, plus
/// the coordinate sum of the vector weight.
inline Rational grading_D(const RootSystem& rs, const ChainMonomial& m)
{
  Rational d = 0;
  for (std::size_t r = 0; r < m.factors.size(); ++r) {
    if (!m.factors[r]) continue;
    const auto& w = rs.positive()[r].weight;
    if (rs.positive()[r].parity == Parity::odd) continue;
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < w.rank(); ++i) {
      if (w[i] == 1) ++plus;
      if (w[i] == -1) ++minus;
    }
    if (plus == 1 && minus == 1) d += m.factors[r];
    else if (plus == 2) d -= m.factors[r];
  }
  for (std::size_t i = 0; i < m.module_weight.rank(); ++i) d += m.module_weight[i];
  return d;
}

/// Fixed (k, mu) block with tags and gradings per basis monomial.
struct ChainBlock {
  std::size_t degree = 0;
  Weight weight;
  std::vector<ChainMonomial> basis;
  std::vector<ChainTag> tags;
  std::vector<Rational> gradings;
  std::map<ChainMonomial, std::size_t> position;

  std::size_t dim() const { return basis.size(); }

  std::vector<std::size_t> indices(TagKind kind) const
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < tags.size(); ++i)
      if (tags[i].kind == kind) out.push_back(i);
    return out;
  }

  Vector coordinates(const Chain& c) const
  {
    Vector v(basis.size());
    for (const auto& [m, x] : c) {
      auto it = position.find(m);
      if (it == position.end()) throw std::logic_error("chain term outside its weight block");
      v[it->second] = x;
    }
    return v;
  }
};

class ChainComplex {
 public:
  explicit ChainComplex(std::shared_ptr<const SimpleModule> L) : L_(std::move(L)), rs_(&L_->algebra().roots()) {}

  const SimpleModule& module() const { return *L_; }
  const RootSystem& roots() const { return *rs_; }

  /// Blocks of C_k keyed by total weight (built once per degree).
  const std::map<Weight, ChainBlock>& blocks(std::size_t k) const
  {
    if (auto it = blocks_.find(k); it != blocks_.end()) return it->second;
    std::map<Weight, ChainBlock> out;
    const auto n_roots = rs_->num_positive();
    std::vector<int> cur(n_roots, 0);
    std::vector<std::vector<int>> words;
    enumerate_factors(0, k, cur, words);
    for (const auto& f : words)
      for (const auto& [mu, dim] : L_->blocks())
        for (std::size_t i = 0; i < dim; ++i) {
          ChainMonomial m{f, mu, i};
          const Weight w = chain_weight(*rs_, m);
          auto& b = out[w];
          b.degree = k;
          b.weight = w;
          b.basis.push_back(std::move(m));
        }
    for (auto& [w, b] : out) {
      std::sort(b.basis.begin(), b.basis.end());
      for (std::size_t i = 0; i < b.basis.size(); ++i) {
        b.position.emplace(b.basis[i], i);
        b.tags.push_back(classify(*rs_, b.basis[i]));
        b.gradings.push_back(grading_D(*rs_, b.basis[i]));
      }
    }
    return blocks_.emplace(k, std::move(out)).first->second;
  }

  const ChainBlock* block(std::size_t k, const Weight& mu) const
  {
    const auto& bs = blocks(k);
    auto it = bs.find(mu);
    return it == bs.end() ? nullptr : &it->second;
  }

  /// Y_root ^ c
  Chain wedge(std::size_t root, const Chain& c) const
  {
    Chain out;
    for (const auto& [m, x] : c) {
      auto word = expand(m.factors);
      word.insert(word.begin(), root);
      auto canon = canonicalize(*rs_, std::move(word));
      if (!canon) continue;
      ChainMonomial t{std::move(canon->second), m.module_weight, m.vector_index};
      add_scaled(out, Chain{{t, Rational(1)}}, canon->first * x);
    }
    return out;
  }

  /// Y_root . c: adjoint action on the factors and module action on the
  /// vector, with Koszul signs from the parities passed over.
  Chain act(std::size_t root, const Chain& c) const
  {
    Chain out;
    const auto& g = L_->algebra();
    const auto& roots = rs_->positive();
    const bool y_odd = roots[root].parity == Parity::odd;
    const std::size_t y = g.lowering(root);
    for (const auto& [m, x] : c) {
      const auto word = expand(m.factors);
      int passed = 0;
      for (std::size_t j = 0; j < word.size(); ++j) {
        for (const auto& [b, coeff] : g.bracket(y, g.lowering(word[j]))) {
          auto replaced = word;
          replaced[j] = static_cast<std::size_t>(g.element(b).root);
          auto canon = canonicalize(*rs_, std::move(replaced));
          if (!canon) continue;
          const int koszul = y_odd && (passed % 2) ? -1 : 1;
          ChainMonomial t{std::move(canon->second), m.module_weight, m.vector_index};
          add_scaled(out, Chain{{t, Rational(1)}}, koszul * canon->first * coeff * x);
        }
        if (roots[word[j]].parity == Parity::odd) ++passed;
      }
      if (const Matrix* a = L_->lowering(root, m.module_weight)) {
        const int koszul = y_odd && (passed % 2) ? -1 : 1;
        const Weight target = m.module_weight - roots[root].weight;
        for (std::size_t i = 0; i < a->rows(); ++i) {
          const Rational& v = (*a)(i, m.vector_index);
          if (sgn(v) == 0) continue;
          add_scaled(out, Chain{{ChainMonomial{m.factors, target, i}, Rational(1)}}, koszul * v * x);
        }
      }
    }
    return out;
  }

  /// delta*(Y ^ f) = -Y.f - Y ^ delta*(f), peeling the canonical first factor.
  const Chain& boundary(const ChainMonomial& m) const
  {
    if (auto it = boundary_cache_.find(m); it != boundary_cache_.end()) return it->second;
    Chain out;
    const auto word = expand(m.factors);
    if (!word.empty()) {
      const std::size_t first = word.front();
      ChainMonomial rest = m;
      --rest.factors[first];
      const Chain f{{rest, Rational(1)}};
      add_scaled(out, act(first, f), -1);
      add_scaled(out, wedge(first, boundary(f)), -1);
    }
    return boundary_cache_.emplace(m, std::move(out)).first->second;
  }

  Chain boundary(const Chain& c) const
  {
    Chain out;
    for (const auto& [m, x] : c) add_scaled(out, boundary(m), x);
    return out;
  }

  /// Matrix of delta*_k on the weight-mu block: rows index C_{k-1}^mu,
  /// columns C_k^mu. Zero-sized when either block is absent.
  Matrix delta_star(std::size_t k, const Weight& mu) const
  {
    if (k == 0) throw std::invalid_argument("delta_star: degree must be positive");
    const ChainBlock* src = block(k, mu);
    const ChainBlock* dst = block(k - 1, mu);
    Matrix out(dst ? dst->dim() : 0, src ? src->dim() : 0);
    if (!src || !dst) return out;
    for (std::size_t j = 0; j < src->dim(); ++j)
      for (const auto& [t, x] : boundary(src->basis[j])) {
        auto it = dst->position.find(t);
        if (it == dst->position.end()) throw std::logic_error("delta* left its weight block");
        out(it->second, j) = x;
      }
    return out;
  }

  std::string describe(const ChainMonomial& m) const
  {
    std::string out;
    for (std::size_t r = 0; r < m.factors.size(); ++r)
      if (m.factors[r]) out += "Y[" + root_label(rs_->positive()[r].weight) + "]^" + std::to_string(m.factors[r]) + " ";
    return out + "(x) v(" + to_string(m.module_weight) + ")[" + std::to_string(m.vector_index) + "]";
  }

 private:
  void enumerate_factors(std::size_t r, std::size_t left, std::vector<int>& cur, std::vector<std::vector<int>>& out) const
  {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (r == cur.size()) return;
    const std::size_t cap = rs_->positive()[r].parity == Parity::even ? 1 : left;
    for (std::size_t e = 0; e <= cap && e <= left; ++e) {
      cur[r] = static_cast<int>(e);
      enumerate_factors(r + 1, left - e, cur, out);
    }
    cur[r] = 0;
  }

  std::shared_ptr<const SimpleModule> L_;
  const RootSystem* rs_;
  mutable std::map<std::size_t, std::map<Weight, ChainBlock>> blocks_;
  mutable std::map<ChainMonomial, Chain> boundary_cache_;
};

/// Full monomial basis of C_k organized by weight.
inline const std::map<Weight, ChainBlock>& chain_basis(const ChainComplex& C, std::size_t k) { return C.blocks(k); }

}  // namespace osp
