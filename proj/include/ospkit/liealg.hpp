#pragma once

// osp(1|2n) realized inside gl(1|2n). Structure constants are read off from
// supercommutators of explicit supermatrices, so every sign downstream is
// inherited from matrix multiplication rather than entered by hand.
//
// Defining space C^{1|2n}: index 0 is the even vector e_0, indices 1..n are
// the odd vectors e_i of weight delta_i and n+1..2n the odd vectors e_{-i}
// of weight -delta_i. The preserved form is (e_0,e_0) = 1,
// (e_i,e_{-i}) = 1 = -(e_{-i},e_i).

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rootsys.hpp"
#include "weight.hpp"

namespace osp {

enum class ElementKind { cartan, lowering, raising };

struct BasisElement {
  ElementKind kind = ElementKind::cartan;
  int root = -1;  // index into RootSystem::positive(), -1 for cartan
  std::size_t index = 0;
  Parity parity = Parity::even;
  Weight weight;  // +alpha for raising, -alpha for lowering, 0 for cartan
};

/// Sparse linear combination of basis elements.
using LieElement = std::map<std::size_t, Rational>;

class Realization {
 public:
  explicit Realization(std::size_t n) : roots_(build_root_system(n)), n_(n)
  {
    const std::size_t np = roots_.num_positive();
    for (std::size_t i = 0; i < n; ++i) {
      BasisElement b{ElementKind::cartan, -1, elements_.size(), Parity::even, Weight(n)};
      Matrix h(size(), size());
      h(1 + i, 1 + i) = 1;
      h(1 + n + i, 1 + n + i) = -1;
      push(b, std::move(h));
    }
    for (std::size_t r = 0; r < np; ++r) {
      const auto& root = roots_.positive()[r];
      push({ElementKind::lowering, static_cast<int>(r), elements_.size(), root.parity, -root.weight},
           root_matrix(root, false));
    }
    for (std::size_t r = 0; r < np; ++r) {
      const auto& root = roots_.positive()[r];
      push({ElementKind::raising, static_cast<int>(r), elements_.size(), root.parity, root.weight},
           root_matrix(root, true));
    }
    for (const auto& m : matrices_)
      if (!preserves_form(m.second, elements_[m.first].parity))
        throw std::logic_error("realization: matrix outside osp(1|2n)");
    build_table();
  }

  const RootSystem& roots() const { return roots_; }
  std::size_t rank() const { return n_; }
  std::size_t dimension() const { return elements_.size(); }
  /// Size of the defining supermatrices (1 + 2n).
  std::size_t size() const { return 1 + 2 * n_; }

  const BasisElement& element(std::size_t i) const { return elements_.at(i); }
  std::size_t cartan(std::size_t i) const { return i; }
  std::size_t lowering(std::size_t root) const { return n_ + root; }
  std::size_t raising(std::size_t root) const { return n_ + roots_.num_positive() + root; }

  const Matrix& matrix(std::size_t i) const { return matrices_.at(i); }

  /// Parity of the defining-space basis vector with the given index.
  Parity vector_parity(std::size_t idx) const { return idx == 0 ? Parity::even : Parity::odd; }
  Weight vector_weight(std::size_t idx) const
  {
    Weight w(n_);
    if (idx == 0) return w;
    if (idx <= n_) w[idx - 1] = 1;
    else w[idx - 1 - n_] = -1;
    return w;
  }

  /// Structure constant table entry [b_a, b_b].
  const LieElement& bracket(std::size_t a, std::size_t b) const { return table_.at(a * dimension() + b); }

  LieElement bracket(const LieElement& x, const LieElement& y) const
  {
    LieElement out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y)
        for (const auto& [c, cc] : bracket(a, b)) out[c] += ca * cb * cc;
    prune(out);
    return out;
  }

  /// Supercommutator of two homogeneous supermatrices.
  static Matrix supercommutator(const Matrix& a, Parity pa, const Matrix& b, Parity pb)
  {
    const Matrix ab = a * b, ba = b * a;
    return parity_bit(pa) * parity_bit(pb) ? ab + ba : ab - ba;
  }

  /// Matrix of a linear combination.
  Matrix to_matrix(const LieElement& x) const
  {
    Matrix m(size(), size());
    for (const auto& [a, c] : x) m = m + c * matrix(a);
    return m;
  }

  /// Checks B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0 for all basis vectors.
  bool preserves_form(const Matrix& x, Parity px) const
  {
    const std::size_t d = size();
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = 0; v < d; ++v) {
        Rational lhs = 0;
        for (std::size_t k = 0; k < d; ++k) {
          lhs += x(k, u) * form(k, v);
          const int sign = parity_bit(px) * parity_bit(vector_parity(u)) ? -1 : 1;
          lhs += sign * form(u, k) * x(k, v);
        }
        if (sgn(lhs) != 0) return false;
      }
    return true;
  }

  Rational form(std::size_t a, std::size_t b) const
  {
    if (a == 0 && b == 0) return 1;
    if (a >= 1 && a <= n_ && b == a + n_) return 1;
    if (b >= 1 && b <= n_ && a == b + n_) return -1;
    return 0;
  }

  static void prune(LieElement& x)
  {
    for (auto it = x.begin(); it != x.end();)
      it = sgn(it->second) == 0 ? x.erase(it) : std::next(it);
  }

 private:
  void push(BasisElement b, Matrix m)
  {
    matrices_.emplace(elements_.size(), std::move(m));
    elements_.push_back(std::move(b));
  }

  Matrix root_matrix(const Root& root, bool raise) const
  {
    Matrix m(size(), size());
    auto E = [&](std::size_t a, std::size_t b, const Rational& c) { m(a, b) += c; };
    const auto& w = root.weight;
    std::vector<std::size_t> plus, two;
    int minus = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (w[i] == 1) plus.push_back(i);
      if (w[i] == 2) two.push_back(i);
      if (w[i] == -1) minus = static_cast<int>(i);
    }
    auto pos = [](std::size_t i) { return 1 + i; };
    auto neg = [this](std::size_t i) { return 1 + n_ + i; };
    if (root.parity == Parity::odd) {
      const auto i = plus.at(0);
      if (raise) {
        E(pos(i), 0, 1);
        E(0, neg(i), -1);
      } else {
        E(neg(i), 0, 1);
        E(0, pos(i), 1);
      }
    } else if (!two.empty()) {
      // 2 delta_i; the lowering vector carries the factor 2 so that
      // [Y_{delta_i}, Y_{delta_i}] = Y_{2 delta_i}.
      const auto i = two[0];
      if (raise) E(pos(i), neg(i), 1);
      else E(neg(i), pos(i), 2);
    } else if (minus >= 0) {
      const auto i = plus.at(0), j = static_cast<std::size_t>(minus);
      if (raise) {
        E(pos(i), pos(j), 1);
        E(neg(j), neg(i), -1);
      } else {
        E(pos(j), pos(i), 1);
        E(neg(i), neg(j), -1);
      }
    } else {
      const auto i = plus.at(0), j = plus.at(1);
      if (raise) {
        E(pos(i), neg(j), 1);
        E(pos(j), neg(i), 1);
      } else {
        E(neg(j), pos(i), 1);
        E(neg(i), pos(j), 1);
      }
    }
    return m;
  }

  /// Express a matrix of known weight in the basis.
  LieElement decompose(const Matrix& m, const Weight& weight) const
  {
    LieElement out;
    if (m.is_zero()) return out;
    if (weight.is_zero()) {
      for (std::size_t i = 0; i < n_; ++i)
        if (sgn(m(1 + i, 1 + i)) != 0) out[cartan(i)] = m(1 + i, 1 + i);
    } else {
      for (std::size_t e = 0; e < elements_.size(); ++e) {
        if (elements_[e].kind == ElementKind::cartan || !(elements_[e].weight == weight)) continue;
        const Matrix& b = matrices_.at(e);
        for (std::size_t i = 0; i < size() && out.empty(); ++i)
          for (std::size_t j = 0; j < size(); ++j)
            if (sgn(b(i, j)) != 0) {
              out[e] = m(i, j) / b(i, j);
              break;
            }
      }
    }
    if (!(to_matrix(out) == m)) throw std::logic_error("realization: bracket left the basis span");
    return out;
  }

  void build_table()
  {
    const std::size_t d = dimension();
    table_.resize(d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const auto& ea = elements_[a];
        const auto& eb = elements_[b];
        const Matrix c = supercommutator(matrices_.at(a), ea.parity, matrices_.at(b), eb.parity);
        table_[a * d + b] = decompose(c, ea.weight + eb.weight);
      }
  }

  RootSystem roots_;
  std::size_t n_;
  std::vector<BasisElement> elements_;
  std::map<std::size_t, Matrix> matrices_;
  std::vector<LieElement> table_;
};

inline std::shared_ptr<const Realization> realize(std::size_t n) { return std::make_shared<const Realization>(n); }

/// Human-readable name of a basis element: "Y[d1-d2]", "X[2d1]", "h1".
inline std::string element_name(const Realization& g, std::size_t i)
{
  const auto& e = g.element(i);
  if (e.kind == ElementKind::cartan) return "h" + std::to_string(i + 1);
  const auto label = root_label(g.roots().positive()[e.root].weight);
  return (e.kind == ElementKind::lowering ? "Y[" : "X[") + label + "]";
}

}  // namespace osp
