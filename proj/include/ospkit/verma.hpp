#pragma once

// Verma modules M(lambda) on the PBW basis of U(n-bar), straightening of
// products into normal order, the maximal submodule computed top-down from
// the simple raising operators, and the simple quotient L(lambda) with exact
// matrices for every negative root vector.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "charlib.hpp"
#include "liealg.hpp"
#include "linalg.hpp"

namespace osp {

/// Exponent per positive root in RootSystem::positive() order; odd entries
/// are 0 or 1. Represents Y_{b_1}^{e_1} ... Y_{b_N}^{e_N} v_lambda.
using PBWMonomial = std::vector<int>;
using VermaVector = std::map<PBWMonomial, Rational>;

inline void add_scaled(VermaVector& into, const VermaVector& v, const Rational& s)
{
  if (sgn(s) == 0) return;
  for (const auto& [m, c] : v) {
    auto& slot = into[m];
    slot += s * c;
    if (sgn(slot) == 0) into.erase(m);
  }
}

class VermaModule {
 public:
  VermaModule(std::shared_ptr<const Realization> g, Weight lambda) : g_(std::move(g)), lambda_(std::move(lambda))
  {
    if (lambda_.rank() != g_->rank()) throw std::invalid_argument("VermaModule: rank mismatch");
  }

  const Realization& algebra() const { return *g_; }
  std::shared_ptr<const Realization> algebra_ptr() const { return g_; }
  const Weight& highest_weight() const { return lambda_; }

  Weight weight_of(const PBWMonomial& m) const
  {
    Weight w = lambda_;
    const auto& roots = g_->roots().positive();
    for (std::size_t r = 0; r < m.size(); ++r)
      if (m[r]) w -= Rational(m[r]) * roots[r].weight;
    return w;
  }

  /// PBW basis of M(lambda)^mu in lexicographic exponent order.
  std::vector<PBWMonomial> basis(const Weight& mu) const
  {
    if (auto it = basis_cache_.find(mu); it != basis_cache_.end()) return it->second;
    std::vector<PBWMonomial> out;
    const auto& roots = g_->roots().positive();
    const Weight diff = lambda_ - mu;
    if (in_positive_cone(diff)) {
      PBWMonomial cur(roots.size(), 0);
      enumerate(0, diff, cur, out);
    }
    std::sort(out.begin(), out.end());
    basis_cache_.emplace(mu, out);
    return out;
  }

  /// Action of the basis element `x` of g on the PBW monomial m v_lambda,
  /// reduced to normal order.
  const VermaVector& act(std::size_t x, const PBWMonomial& m) const
  {
    auto key = std::make_pair(x, m);
    if (auto it = act_cache_.find(key); it != act_cache_.end()) return it->second;
    VermaVector result = compute_act(x, m);
    return act_cache_.emplace(std::move(key), std::move(result)).first->second;
  }

  VermaVector act(std::size_t x, const VermaVector& v) const
  {
    VermaVector out;
    for (const auto& [m, c] : v) add_scaled(out, act(x, m), c);
    return out;
  }

  VermaVector act(const LieElement& x, const VermaVector& v) const
  {
    VermaVector out;
    for (const auto& [b, c] : x) add_scaled(out, act(b, v), c);
    return out;
  }

  /// Matrix of the basis element x from M^mu to M^{mu + weight(x)}.
  Matrix matrix(std::size_t x, const Weight& mu) const
  {
    const auto src = basis(mu);
    const auto dst = basis(mu + g_->element(x).weight);
    std::map<PBWMonomial, std::size_t> row;
    for (std::size_t i = 0; i < dst.size(); ++i) row.emplace(dst[i], i);
    Matrix out(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [m, c] : act(x, src[j])) out(row.at(m), j) = c;
    return out;
  }

  /// Simple raising generator X_{alpha_i}: M^mu -> M^{mu + alpha_i}.
  Matrix raising_matrix(std::size_t simple, const Weight& mu) const
  {
    return matrix(g_->raising(static_cast<std::size_t>(g_->roots().simple_index(simple))), mu);
  }

 private:
  void enumerate(std::size_t r, const Weight& rest, PBWMonomial& cur, std::vector<PBWMonomial>& out) const
  {
    const auto& roots = g_->roots().positive();
    if (rest.is_zero()) {
      out.push_back(cur);
      return;
    }
    if (r == roots.size()) return;
    Weight left = rest;
    const int cap = roots[r].parity == Parity::odd ? 1 : -1;
    for (int e = 0; (cap < 0 || e <= cap) && in_positive_cone(left); ++e) {
      cur[r] = e;
      enumerate(r + 1, left, cur, out);
      left -= roots[r].weight;
    }
    cur[r] = 0;
  }

  static int first_factor(const PBWMonomial& m)
  {
    for (std::size_t r = 0; r < m.size(); ++r)
      if (m[r]) return static_cast<int>(r);
    return -1;
  }

  VermaVector compute_act(std::size_t x, const PBWMonomial& m) const
  {
    const auto& ex = g_->element(x);
    const auto& roots = g_->roots().positive();
    VermaVector out;
    if (ex.kind == ElementKind::cartan) {
      const Rational c = weight_of(m)[x];
      if (sgn(c) != 0) out[m] = c;
      return out;
    }
    const int f = first_factor(m);
    if (f < 0) {
      if (ex.kind == ElementKind::lowering) {
        PBWMonomial u(roots.size(), 0);
        u[ex.root] = 1;
        out[u] = 1;
      }
      return out;
    }
    PBWMonomial rest = m;
    --rest[f];
    if (ex.kind == ElementKind::lowering && ex.root <= f) {
      if (ex.root < f || roots[f].parity == Parity::even) {
        PBWMonomial u = m;
        ++u[ex.root];
        out[u] = 1;
        return out;
      }
      // Y_g Y_g = 1/2 [Y_g, Y_g] for odd g.
      for (const auto& [b, c] : g_->bracket(x, x)) add_scaled(out, act(b, rest), c / 2);
      return out;
    }
    // x Y_f rest = (-1)^{|x||f|} Y_f (x rest) + [x, Y_f] rest
    const std::size_t yf = g_->lowering(static_cast<std::size_t>(f));
    const int sign = parity_bit(ex.parity) * parity_bit(roots[f].parity) ? -1 : 1;
    for (const auto& [u, c] : VermaVector(act(x, rest))) add_scaled(out, act(yf, u), sign * c);
    for (const auto& [b, c] : g_->bracket(x, yf)) add_scaled(out, act(b, rest), c);
    return out;
  }

  std::shared_ptr<const Realization> g_;
  Weight lambda_;
  mutable std::map<Weight, std::vector<PBWMonomial>> basis_cache_;
  mutable std::map<std::pair<std::size_t, PBWMonomial>, VermaVector> act_cache_;
};

/// PBW basis of M(lambda)^mu.
inline std::vector<PBWMonomial> pbw_basis(const Weight& lambda, const Weight& mu)
{
  return VermaModule(realize(lambda.rank()), lambda).basis(mu);
}

/// Matrix of X_{alpha_i} from M(lambda)^mu to M(lambda)^{mu + alpha_i}.
inline Matrix raising_action(std::size_t simple, const Weight& lambda, const Weight& mu)
{
  return VermaModule(realize(lambda.rank()), lambda).raising_matrix(simple, mu);
}

/// One weight space of the quotient M/N: the submodule N^mu in reduced row
/// echelon form and the PBW monomials whose cosets form a basis of L^mu.
struct QuotientBlock {
  std::vector<PBWMonomial> verma_basis;
  Matrix submodule;  // rows span N^mu, RREF
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> representatives;

  std::size_t verma_dim() const { return verma_basis.size(); }
  std::size_t quotient_dim() const { return representatives.size(); }

  /// Coordinates in the quotient basis of a vector of M^mu.
  Vector project(Vector v) const
  {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Rational c = v[pivots[r]];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(submodule(r, j)) != 0) v[j] -= c * submodule(r, j);
    }
    Vector out(representatives.size());
    for (std::size_t i = 0; i < representatives.size(); ++i) out[i] = v[representatives[i]];
    return out;
  }

  Vector coordinates(const VermaVector& v) const
  {
    Vector dense(verma_basis.size());
    for (const auto& [m, c] : v) {
      auto it = std::lower_bound(verma_basis.begin(), verma_basis.end(), m);
      if (it == verma_basis.end() || *it != m) throw std::logic_error("vector outside the weight space");
      dense[static_cast<std::size_t>(it - verma_basis.begin())] = c;
    }
    return dense;
  }
};

namespace detail {

/// N^mu = { x in M^mu : X_{alpha_i} x in N^{mu + alpha_i} for all i }, given
/// the already computed blocks above mu. A weight above mu that is absent
/// from `above` contributes no condition (its quotient is zero).
inline QuotientBlock quotient_block(const VermaModule& M, const Weight& mu, const std::map<Weight, QuotientBlock>& above)
{
  QuotientBlock qb;
  qb.verma_basis = M.basis(mu);
  const std::size_t dim = qb.verma_basis.size();
  const auto& rs = M.algebra().roots();
  Matrix constraints(0, dim);
  if (!(mu == M.highest_weight())) {
    for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) {
      const Weight up = mu + rs.simple_roots()[i].weight;
      auto it = above.find(up);
      if (it == above.end() || it->second.quotient_dim() == 0) continue;
      const Matrix x = M.raising_matrix(i, mu);
      Matrix projected(it->second.quotient_dim(), dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const Vector col = it->second.project(x.col(j));
        for (std::size_t r = 0; r < col.size(); ++r) projected(r, j) = col[r];
      }
      constraints = vstack(constraints, projected);
    }
  }
  const auto null = nullspace(constraints.rows() ? constraints : Matrix(0, dim));
  std::vector<Vector> rows;
  if (mu == M.highest_weight()) {
    // N^lambda = 0
  } else if (constraints.rows() == 0) {
    for (std::size_t j = 0; j < dim; ++j) {
      Vector e(dim);
      e[j] = 1;
      rows.push_back(std::move(e));
    }
  } else {
    rows = null;
  }
  auto ech = row_echelon(Matrix::from_rows(rows, dim));
  qb.submodule = std::move(ech.rref);
  qb.pivots = std::move(ech.pivots);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : qb.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < dim; ++j)
    if (!is_pivot[j]) qb.representatives.push_back(j);
  return qb;
}

}  // namespace detail

/// Maximal submodule weight spaces on an explicit support. The support must
/// contain every mu + alpha_i (alpha_i simple) that is still below lambda for
/// each of its elements. Returns a basis (rows) of N^mu for every mu.
inline std::map<Weight, Matrix> maximal_submodule_blocks(const Weight& lambda, const std::set<Weight>& support)
{
  if (!is_integral_dominant(lambda)) throw std::invalid_argument("maximal_submodule_blocks: weight is not integral dominant");
  VermaModule M(realize(lambda.rank()), lambda);
  const auto& rs = M.algebra().roots();
  for (const auto& mu : support) {
    if (!in_positive_cone(lambda - mu)) throw std::invalid_argument("support weight " + to_string(mu) + " is not below lambda");
    for (const auto& a : rs.simple_roots()) {
      const Weight up = mu + a.weight;
      if (in_positive_cone(lambda - up) && !support.count(up))
        throw std::invalid_argument("support is not closed: missing " + to_string(up));
    }
  }
  std::vector<Weight> order(support.begin(), support.end());
  std::sort(order.begin(), order.end(),
            [&](const Weight& a, const Weight& b) { return height(lambda - a) < height(lambda - b); });
  std::map<Weight, QuotientBlock> blocks;
  std::map<Weight, Matrix> out;
  for (const auto& mu : order) {
    auto qb = detail::quotient_block(M, mu, blocks);
    out.emplace(mu, qb.submodule);
    blocks.emplace(mu, std::move(qb));
  }
  return out;
}

/// L(lambda): weight-block dimensions and exact matrices of every Y_alpha.
class SimpleModule {
 public:
  SimpleModule(std::shared_ptr<const Realization> g, Weight lambda) : g_(std::move(g)), lambda_(std::move(lambda)) {}

  const Realization& algebra() const { return *g_; }
  std::shared_ptr<const Realization> algebra_ptr() const { return g_; }
  const Weight& highest_weight() const { return lambda_; }

  const std::map<Weight, std::size_t>& blocks() const { return dims_; }
  std::size_t block_dim(const Weight& mu) const
  {
    auto it = dims_.find(mu);
    return it == dims_.end() ? 0 : it->second;
  }
  std::size_t dimension() const
  {
    std::size_t d = 0;
    for (const auto& [w, k] : dims_) d += k;
    return d;
  }

  FormalCharacter character() const
  {
    FormalCharacter ch;
    for (const auto& [w, k] : dims_) ch.add(w, k);
    return ch;
  }

  /// Y_alpha : L^mu -> L^{mu - alpha}; nullptr when either block is zero.
  const Matrix* lowering(std::size_t root, const Weight& mu) const
  {
    auto it = actions_.find({root, mu});
    return it == actions_.end() ? nullptr : &it->second;
  }

  const std::map<std::pair<std::size_t, Weight>, Matrix>& actions() const { return actions_; }

  void set_block(const Weight& mu, std::size_t dim) { dims_[mu] = dim; }
  void set_action(std::size_t root, const Weight& mu, Matrix m) { actions_[{root, mu}] = std::move(m); }

 private:
  std::shared_ptr<const Realization> g_;
  Weight lambda_;
  std::map<Weight, std::size_t> dims_;
  std::map<std::pair<std::size_t, Weight>, Matrix> actions_;
};

/// Builds L(lambda) = M(lambda)/N(lambda). Weight spaces are discovered
/// downward from lambda along simple roots; a weight is visited only when it
/// sits one simple root below a nonzero block, which reaches every nonzero
/// weight space because n-bar is generated by the simple lowering vectors.
inline SimpleModule simple_quotient(std::shared_ptr<const Realization> g, const Weight& lambda)
{
  if (!is_integral_dominant(lambda)) throw std::invalid_argument("simple_quotient: weight is not integral dominant");
  VermaModule M(g, lambda);
  const auto& rs = g->roots();
  std::map<Weight, QuotientBlock> blocks;
  std::vector<Weight> level{lambda};
  while (!level.empty()) {
    std::set<Weight> next;
    for (const auto& mu : level) {
      auto qb = detail::quotient_block(M, mu, blocks);
      if (qb.quotient_dim() == 0) continue;
      for (const auto& a : rs.simple_roots()) next.insert(mu - a.weight);
      blocks.emplace(mu, std::move(qb));
    }
    level.assign(next.begin(), next.end());
  }

  SimpleModule L(g, lambda);
  for (const auto& [mu, qb] : blocks) L.set_block(mu, qb.quotient_dim());
  for (const auto& [mu, qb] : blocks) {
    for (std::size_t r = 0; r < rs.num_positive(); ++r) {
      const Weight target = mu - rs.positive()[r].weight;
      auto it = blocks.find(target);
      if (it == blocks.end()) continue;
      Matrix m(it->second.quotient_dim(), qb.quotient_dim());
      for (std::size_t j = 0; j < qb.quotient_dim(); ++j) {
        const auto& image = M.act(g->lowering(r), qb.verma_basis[qb.representatives[j]]);
        const Vector col = it->second.project(it->second.coordinates(image));
        for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
      }
      L.set_action(r, mu, std::move(m));
    }
  }
  return L;
}

inline SimpleModule simple_quotient(const Weight& lambda) { return simple_quotient(realize(lambda.rank()), lambda); }

}  // namespace osp
