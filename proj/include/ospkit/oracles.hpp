#pragma once

// Brute-force cross-checks of the main computations. Each oracle rebuilds its
// quantity from scratch, sharing only the root data and the matrix
// realization with the code under test:
//   * L(lambda) as the submodule of a tensor power of the defining
//     representation generated by a singular vector of weight lambda;
//   * chains with their own canonical order and the closed-form boundary
//     formula, assembled into one dense matrix per degree;
//   * Weyl-group lengths as distances in the Cayley graph;
//   * Verma multiplicities by unbounded enumeration of exponent vectors.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catO.hpp"
#include "charlib.hpp"
#include "homology.hpp"
#include "liealg.hpp"
#include "rootsys.hpp"
#include "verma.hpp"
#include "weyl.hpp"

namespace osp {

struct OracleResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

namespace oracle {

using Row = std::vector<Rational>;
using Sparse = std::map<std::size_t, Rational>;

inline void axpy(Sparse& into, const Sparse& v, const Rational& s)
{
  for (const auto& [i, x] : v) {
    auto& slot = into[i];
    slot += s * x;
    if (sgn(slot) == 0) into.erase(i);
  }
}

/// Rank by plain Gaussian elimination over Q.
inline std::size_t dense_rank(std::vector<Row> a)
{
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Row-reduced spanning set kept in reduced echelon form.
class Span {
 public:
  /// Adds v if independent; returns whether it was added.
  bool insert(Sparse v)
  {
    reduce(v);
    if (v.empty()) return false;
    const auto [pivot, lead] = *v.begin();
    const Rational inv = 1 / lead;
    for (auto& [i, x] : v) x *= inv;
    for (auto& row : rows_) {
      auto it = row.second.find(pivot);
      if (it == row.second.end()) continue;
      const Rational c = it->second;
      axpy(row.second, v, -c);
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  /// Coordinates in the stored basis; throws when v is outside the span.
  Row coordinates(const Sparse& v) const
  {
    Row out(rows_.size());
    Sparse rest = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto it = v.find(rows_[r].first);
      if (it == v.end()) continue;
      out[r] = it->second;
      axpy(rest, rows_[r].second, -it->second);
    }
    if (!rest.empty()) throw std::logic_error("oracle: vector outside the span");
    return out;
  }

  std::size_t size() const { return rows_.size(); }
  const Sparse& vector(std::size_t r) const { return rows_[r].second; }

 private:
  void reduce(Sparse& v) const
  {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Rational c = it->second;
      axpy(v, row, -c);
    }
  }

  std::vector<std::pair<std::size_t, Sparse>> rows_;
};

/// L(lambda) inside V^{(x) m}, m = sum of the coordinates of lambda.
class TensorModule {
 public:
  TensorModule(std::shared_ptr<const Realization> g, const Weight& lambda) : g_(std::move(g)), lambda_(lambda)
  {
    const std::size_t n = lambda.rank();
    m_ = 0;
    for (std::size_t i = 0; i < n; ++i) m_ += static_cast<std::size_t>(to_long(lambda[i]));
    d_ = g_->size();
    total_ = 1;
    for (std::size_t i = 0; i < m_; ++i) total_ *= d_;

    Sparse top = singular_vector();
    build(std::move(top));
  }

  const std::map<Weight, Span>& spaces() const { return spaces_; }
  std::size_t dimension() const
  {
    std::size_t s = 0;
    for (const auto& [w, sp] : spaces_) s += sp.size();
    return s;
  }

  /// Y_root applied to basis vector `idx` of the weight-mu space, in
  /// coordinates of the weight (mu - root) space (empty when that is zero).
  Row lower(std::size_t root, const Weight& mu, std::size_t idx) const
  {
    const Weight target = mu - g_->roots().positive()[root].weight;
    const Sparse image = apply(g_->lowering(root), spaces_.at(mu).vector(idx));
    auto it = spaces_.find(target);
    if (it == spaces_.end()) {
      if (!image.empty()) throw std::logic_error("oracle: lowering left the module");
      return {};
    }
    return it->second.coordinates(image);
  }

 private:
  std::vector<std::size_t> digits(std::size_t code) const
  {
    std::vector<std::size_t> out(m_);
    for (std::size_t i = m_; i-- > 0;) {
      out[i] = code % d_;
      code /= d_;
    }
    return out;
  }

  std::size_t encode(const std::vector<std::size_t>& dg) const
  {
    std::size_t c = 0;
    for (auto x : dg) c = c * d_ + x;
    return c;
  }

  Weight weight_of(std::size_t code) const
  {
    Weight w(lambda_.rank());
    for (auto x : digits(code)) w += g_->vector_weight(x);
    return w;
  }

  /// x . (u_1 (x) ... (x) u_m) with the Koszul rule.
  Sparse apply(std::size_t x, const Sparse& v) const
  {
    Sparse out;
    const Matrix& mx = g_->matrix(x);
    const bool x_odd = g_->element(x).parity == Parity::odd;
    for (const auto& [code, c] : v) {
      auto dg = digits(code);
      int passed = 0;
      for (std::size_t pos = 0; pos < m_; ++pos) {
        const std::size_t u = dg[pos];
        for (std::size_t a = 0; a < d_; ++a) {
          if (sgn(mx(a, u)) == 0) continue;
          auto e = dg;
          e[pos] = a;
          const Rational s = (x_odd && passed % 2) ? Rational(-1) : Rational(1);
          axpy(out, Sparse{{encode(e), Rational(1)}}, s * mx(a, u) * c);
        }
        if (g_->vector_parity(u) == Parity::odd) ++passed;
      }
    }
    return out;
  }

  Sparse singular_vector() const
  {
    std::vector<std::size_t> codes;
    for (std::size_t c = 0; c < total_; ++c)
      if (weight_of(c) == lambda_) codes.push_back(c);
    if (m_ == 0) return Sparse{{0, Rational(1)}};
    // Columns: candidate basis tensors; rows: all coordinates of every X_alpha_i image.
    std::map<std::size_t, std::size_t> row_of;
    std::vector<std::vector<Sparse>> images(codes.size());
    const auto& rs = g_->roots();
    for (std::size_t j = 0; j < codes.size(); ++j)
      for (std::size_t k = 0; k < rs.rank(); ++k) {
        const auto x = g_->raising(static_cast<std::size_t>(rs.simple_index(k)));
        Sparse img = apply(x, Sparse{{codes[j], Rational(1)}});
        Sparse tagged;
        for (const auto& [code, c] : img) tagged[k * total_ + code] = c;
        images[j].push_back(std::move(tagged));
      }
    for (const auto& imgs : images)
      for (const auto& img : imgs)
        for (const auto& [i, c] : img) row_of.emplace(i, row_of.size());
    // Nullspace of the system by elimination on the transposed problem.
    std::vector<Row> a(row_of.size(), Row(codes.size()));
    for (std::size_t j = 0; j < codes.size(); ++j)
      for (const auto& img : images[j])
        for (const auto& [i, c] : img) a[row_of.at(i)][j] += c;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < codes.size() && r < a.size(); ++c) {
      std::size_t p = r;
      while (p < a.size() && sgn(a[p][c]) == 0) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[r]);
      const Rational inv = 1 / a[r][c];
      for (auto& x : a[r]) x *= inv;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r || sgn(a[i][c]) == 0) continue;
        const Rational f = a[i][c];
        for (std::size_t jj = 0; jj < codes.size(); ++jj) a[i][jj] -= f * a[r][jj];
      }
      pivot_cols.push_back(c);
      ++r;
    }
    for (std::size_t free = 0; free < codes.size(); ++free) {
      if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
      Sparse v{{codes[free], Rational(1)}};
      for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        if (sgn(a[i][free]) != 0) v[codes[pivot_cols[i]]] = -a[i][free];
      return v;
    }
    throw std::logic_error("oracle: no singular vector of weight " + to_string(lambda_));
  }

  void build(Sparse top)
  {
    const auto& rs = g_->roots();
    auto key = [](const Weight& w) { return std::make_pair(-height(w), w); };
    std::map<std::pair<Rational, Weight>, std::vector<Sparse>> pending;
    pending[key(lambda_)].push_back(std::move(top));
    while (!pending.empty()) {
      auto node = pending.extract(pending.begin());
      const Weight mu = node.key().second;
      Span& sp = spaces_[mu];
      for (auto& v : node.mapped()) sp.insert(std::move(v));
      if (sp.size() == 0) {
        spaces_.erase(mu);
        continue;
      }
      for (std::size_t r = 0; r < rs.num_positive(); ++r)
        for (std::size_t i = 0; i < sp.size(); ++i) {
          Sparse w = apply(g_->lowering(r), sp.vector(i));
          if (!w.empty()) pending[key(mu - rs.positive()[r].weight)].push_back(std::move(w));
        }
    }
  }

  std::shared_ptr<const Realization> g_;
  Weight lambda_;
  std::size_t m_ = 0, d_ = 0, total_ = 1;
  std::map<Weight, Span> spaces_;
};

/// Dense chain spaces of an independently built module, with factors stored
/// as words sorted by decreasing root index.
class DenseComplex {
 public:
  struct Basis {
    std::vector<std::size_t> word;
    Weight mu;  // module weight
    std::size_t index;
    friend bool operator<(const Basis& a, const Basis& b)
    {
      if (a.word != b.word) return a.word < b.word;
      if (!(a.mu == b.mu)) return a.mu < b.mu;
      return a.index < b.index;
    }
  };

  DenseComplex(std::shared_ptr<const Realization> g, const TensorModule& L) : g_(std::move(g)), L_(L) {}

  const std::vector<Basis>& basis(std::size_t k)
  {
    if (auto it = basis_.find(k); it != basis_.end()) return it->second;
    std::vector<Basis> out;
    const auto& roots = g_->roots().positive();
    std::vector<std::size_t> word;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t bound, std::size_t left) {
      if (left == 0) {
        for (const auto& [mu, sp] : L_.spaces())
          for (std::size_t i = 0; i < sp.size(); ++i) out.push_back({word, mu, i});
        return;
      }
      for (std::size_t r = bound; r-- > 0;) {
        // words are non-increasing; even roots appear at most once
        if (!word.empty() && word.back() == r && roots[r].parity == Parity::even) continue;
        word.push_back(r);
        rec(roots[r].parity == Parity::odd ? r + 1 : r, left - 1);
        word.pop_back();
      }
    };
    rec(roots.size(), k);
    std::sort(out.begin(), out.end());
    return basis_.emplace(k, std::move(out)).first->second;
  }

  Weight weight(const Basis& b) const
  {
    Weight w = b.mu;
    for (auto r : b.word) w -= g_->roots().positive()[r].weight;
    return w;
  }

  /// delta*_k as a dense matrix C_k -> C_{k-1} from the closed formula
  /// sum_i (-1)^i [ sum_{j>i} eps_ij x_1..^x_i..[x_i,x_j]..x_k (x) v
  ///               + eps_i x_1..^x_i..x_k (x) x_i v ].
  std::vector<Row> boundary(std::size_t k)
  {
    const auto& src = basis(k);
    const auto& dst = basis(k - 1);
    std::map<Basis, std::size_t> pos;
    for (std::size_t i = 0; i < dst.size(); ++i) pos.emplace(dst[i], i);
    std::vector<Row> m(dst.size(), Row(src.size()));
    const auto& roots = g_->roots().positive();
    auto odd = [&](std::size_t r) { return roots[r].parity == Parity::odd ? 1 : 0; };
    auto put = [&](std::vector<std::size_t> w, const Weight& mu, std::size_t idx, const Rational& c, std::size_t col) {
      int sign = 1;
      if (!sort_word(w, sign)) return;
      auto it = pos.find({w, mu, idx});
      if (it == pos.end()) throw std::logic_error("oracle: boundary term outside C_{k-1}");
      m[it->second][col] += sign * c;
    };
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& b = src[col];
      const auto& x = b.word;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const int outer = (i + 1) % 2 ? -1 : 1;
        int between = 0;
        for (std::size_t j = i + 1; j < x.size(); ++j) {
          const int eps = odd(x[i]) && between % 2 ? -1 : 1;
          for (const auto& [e, c] : g_->bracket(g_->lowering(x[i]), g_->lowering(x[j]))) {
            std::vector<std::size_t> w;
            for (std::size_t l = 0; l < x.size(); ++l)
              if (l == j) w.push_back(static_cast<std::size_t>(g_->element(e).root));
              else if (l != i) w.push_back(x[l]);
            put(std::move(w), b.mu, b.index, outer * eps * c, col);
          }
          between += odd(x[j]);
        }
        int after = 0;
        for (std::size_t l = i + 1; l < x.size(); ++l) after += odd(x[l]);
        const int eps = odd(x[i]) && after % 2 ? -1 : 1;
        std::vector<std::size_t> w;
        for (std::size_t l = 0; l < x.size(); ++l)
          if (l != i) w.push_back(x[l]);
        const Row image = L_.lower(x[i], b.mu, b.index);
        const Weight target = b.mu - roots[x[i]].weight;
        for (std::size_t t = 0; t < image.size(); ++t)
          if (sgn(image[t]) != 0) put(w, target, t, outer * eps * image[t], col);
      }
    }
    return m;
  }

 private:
  /// Sorts into non-increasing order, tracking v^w = -(-1)^{p(v)p(w)} w^v.
  /// False when an even factor repeats.
  bool sort_word(std::vector<std::size_t>& w, int& sign) const
  {
    const auto& roots = g_->roots().positive();
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
        if (w[j] < w[j + 1]) {
          const bool both_odd = roots[w[j]].parity == Parity::odd && roots[w[j + 1]].parity == Parity::odd;
          if (!both_odd) sign = -sign;
          std::swap(w[j], w[j + 1]);
        }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == w[i + 1] && roots[w[i]].parity == Parity::even) return false;
    return true;
  }

  std::shared_ptr<const Realization> g_;
  const TensorModule& L_;
  std::map<std::size_t, std::vector<Basis>> basis_;
};

/// Rank of the submatrix of `m` on rows and columns of weight mu.
inline std::size_t block_rank(const std::vector<Row>& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols)
{
  std::vector<Row> sub(rows.size(), Row(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[rows[i]][cols[j]];
  return dense_rank(std::move(sub));
}

/// Elements reached from a generic point by simple reflections, with their
/// Cayley-graph distance. The point is (n, n-1, ..., 1).
inline std::map<std::vector<long>, std::size_t> cayley_lengths(std::size_t n)
{
  std::vector<long> start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = static_cast<long>(n - i);
  std::map<std::vector<long>, std::size_t> dist{{start, 0}};
  std::deque<std::vector<long>> queue{start};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) {
      auto y = x;
      if (k + 1 < n) std::swap(y[k], y[k + 1]);
      else y[n - 1] = -y[n - 1];
      if (dist.emplace(y, dist.at(x) + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

/// Dot orbit of lambda grouped by length, from the Cayley-graph search.
inline std::map<std::size_t, std::multiset<Weight>> orbit_by_length(const Weight& lambda)
{
  const std::size_t n = lambda.rank();
  const auto rs = build_root_system(n);
  const Weight x0 = lambda + rs.rho();
  std::map<std::size_t, std::multiset<Weight>> out;
  // Left action: s(w(x)). The coordinates of a point p = w(start) determine w:
  // |p_i| = n - j means w sends delta_j to sign(p_i) delta_i.
  for (const auto& [p, len] : cayley_lengths(n)) {
    Weight y(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = n - static_cast<std::size_t>(std::labs(p[i]));
      y[i] = p[i] < 0 ? Rational(-x0[j]) : x0[j];
    }
    out[len].insert(y - rs.rho());
  }
  return out;
}

/// Verma multiplicity by enumerating every exponent vector whose total height
/// is at most the height of lambda - mu.
inline std::uint64_t brute_verma_mult(const Weight& lambda, const Weight& mu)
{
  const auto rs = build_root_system(lambda.rank());
  const Weight diff = lambda - mu;
  const Rational h = height(diff);
  if (h < 0 || !is_integer(h)) return 0;
  const long cap = to_long(h);
  const auto& roots = rs.positive();
  std::vector<long> e(roots.size(), 0);
  std::uint64_t count = 0;
  // budget: height still available; every positive root has height >= 1
  std::function<void(std::size_t, long)> rec = [&](std::size_t r, long budget) {
    if (r == roots.size()) {
      Weight s(lambda.rank());
      for (std::size_t i = 0; i < roots.size(); ++i) s += Rational(e[i]) * roots[i].weight;
      if (s == diff) ++count;
      return;
    }
    const long ht = to_long(height(roots[r].weight));
    const long top = roots[r].parity == Parity::odd ? std::min(1L, budget / ht) : budget / ht;
    for (e[r] = 0; e[r] <= top; ++e[r]) rec(r + 1, budget - e[r] * ht);
    e[r] = 0;
  };
  rec(0, cap);
  return count;
}

/// Bott-Borel-Weil answer by searching the orbit of lambda + rho for a
/// strictly dominant point.
inline BBWAnswer brute_bbw(const Weight& lambda)
{
  const std::size_t n = lambda.rank();
  const auto rs = build_root_system(n);
  for (const auto& [len, ws] : orbit_by_length(lambda))
    for (const auto& w : ws) {
      const Weight x = w + rs.rho();
      bool strict = true;
      for (std::size_t i = 0; i < n; ++i)
        if (!(x[i] > (i + 1 < n ? x[i + 1] : Rational(0)))) strict = false;
      if (strict) return {false, len, w};
    }
  return {};
}

inline std::string show(const std::map<Weight, std::size_t>& m)
{
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, d] : m) {
    if (!d) continue;
    os << (first ? "" : ", ") << '(' << to_string(w) << "):" << d;
    first = false;
  }
  return os.str() + '}';
}

inline std::map<Weight, std::size_t> nonzero(const FormalCharacter& ch)
{
  std::map<Weight, std::size_t> out;
  for (const auto& [w, m] : ch) out[w] = m;
  return out;
}

}  // namespace oracle

/// Runs every brute-force oracle for (n, lambda) against the main path.
/// Homology oracles require n <= 2; lighter checks run for any n they can.
inline std::vector<OracleResult> oracle_suite(std::size_t n, const Weight& lambda)
{
  using namespace oracle;
  if (lambda.rank() != n) throw std::invalid_argument("oracle_suite: weight rank differs from n");
  if (!is_integral_dominant(lambda)) throw std::invalid_argument("oracle_suite: weight is not integral dominant");
  std::vector<OracleResult> out;
  auto record = [&](std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    out.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  };
  const std::string tag = "n=" + std::to_string(n) + " lambda=" + to_string(lambda) + ": ";

  // Weyl group: Cayley-graph distance against inversion length.
  {
    const auto rs = build_root_system(n);
    Weight generic(n);
    for (std::size_t i = 0; i < n; ++i) generic[i] = static_cast<long>(n - i);
    std::map<std::vector<long>, std::size_t> main_len;
    std::map<std::size_t, std::size_t> main_sizes, oracle_sizes;
    for (const auto& w : enumerate_weyl(n)) {
      const Weight p = w.act(generic);
      std::vector<long> key(n);
      for (std::size_t i = 0; i < n; ++i) key[i] = to_long(p[i]);
      main_len[key] = length(w);
    }
    for (std::size_t k = 0; k <= n * n; ++k) main_sizes[k] = elements_of_length(n, k).size();
    const auto bfs = cayley_lengths(n);
    for (const auto& [p, d] : bfs) ++oracle_sizes[d];
    record(tag + "Weyl lengths agree with Cayley distance", "true", bfs == main_len ? "true" : "false");
    auto show_sizes = [](const std::map<std::size_t, std::size_t>& s) {
      std::string t;
      for (const auto& [k, c] : s) t += (t.empty() ? "" : ",") + std::to_string(c);
      return t;
    };
    record(tag + "|W(k)| sizes", show_sizes(oracle_sizes), show_sizes(main_sizes));
  }

  // Verma multiplicities on a window below lambda.
  {
    bool ok = true;
    std::string first_bad;
    for (const auto& mu : weights_below(lambda, 4)) {
      const auto a = brute_verma_mult(lambda, mu), b = verma_mult(lambda, mu);
      if (a != b && ok) {
        ok = false;
        first_bad = to_string(mu) + ": " + std::to_string(a) + " vs " + std::to_string(b);
      }
    }
    record(tag + "Verma multiplicities by enumeration", "", first_bad);
  }

  // BBW on a box of integral weights.
  {
    std::string bad;
    std::vector<long> c(n, -3);
    while (true) {
      Weight w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = c[i];
      const auto a = brute_bbw(w), b = bbw(w);
      if (bad.empty() && (a.zero != b.zero || (!a.zero && (a.k != b.k || !(a.highest_weight == b.highest_weight)))))
        bad = to_string(w);
      std::size_t i = 0;
      while (i < n && ++c[i] > 3) c[i++] = -3;
      if (i == n) break;
    }
    record(tag + "BBW by orbit search on [-3,3]^n", "", bad);
  }

  // Independent module and character.
  auto g = realize(n);
  const TensorModule T(g, lambda);
  std::map<Weight, std::size_t> oracle_dims;
  for (const auto& [mu, sp] : T.spaces()) oracle_dims[mu] = sp.size();
  const auto freud = nonzero(simple_character(lambda));
  record(tag + "tensor-power L(lambda) vs Freudenthal", show(freud), show(oracle_dims));
  record(tag + "dim L(lambda) vs Weyl dimension", weyl_dimension(lambda).get_str(), std::to_string(T.dimension()));
  const auto L = std::make_shared<const SimpleModule>(simple_quotient(g, lambda));
  record(tag + "tensor-power L(lambda) vs Verma quotient", show(oracle_dims), show(L->blocks()));

  if (n > 2) return out;

  // Dense homology.
  const std::size_t k_max = n * n + 1;
  DenseComplex D(g, T);
  std::map<std::size_t, std::vector<Row>> mats;
  for (std::size_t k = 1; k <= k_max + 1; ++k) mats[k] = D.boundary(k);
  auto rows_of = [&](std::size_t k) {
    std::map<Weight, std::vector<std::size_t>> by;
    const auto& b = D.basis(k);
    for (std::size_t i = 0; i < b.size(); ++i) by[D.weight(b[i])].push_back(i);
    return by;
  };

  bool preserves = true, squares = true;
  for (std::size_t k = 1; k <= k_max + 1; ++k) {
    const auto& m = mats[k];
    const auto& src = D.basis(k);
    const auto& dst = D.basis(k - 1);
    for (std::size_t i = 0; i < dst.size(); ++i)
      for (std::size_t j = 0; j < src.size(); ++j)
        if (sgn(m[i][j]) != 0 && !(D.weight(dst[i]) == D.weight(src[j]))) preserves = false;
    if (k >= 2) {
      const auto& p = mats[k - 1];
      for (std::size_t j = 0; j < src.size() && squares; ++j) {
        Row s(p.size());
        for (std::size_t l = 0; l < dst.size(); ++l) {
          if (sgn(m[l][j]) == 0) continue;
          for (std::size_t i = 0; i < p.size(); ++i)
            if (sgn(p[i][l]) != 0) s[i] += p[i][l] * m[l][j];
        }
        for (const auto& x : s)
          if (sgn(x) != 0) squares = false;
      }
    }
  }
  record(tag + "dense boundary preserves weight", "true", preserves ? "true" : "false");
  record(tag + "dense boundary squares to zero", "true", squares ? "true" : "false");

  ChainComplex C(L);
  const auto rep = homology_dims(C, k_max);
  const auto orbit = orbit_by_length(lambda);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto here = rows_of(k);
    const auto below = k ? rows_of(k - 1) : std::map<Weight, std::vector<std::size_t>>{};
    const auto above = rows_of(k + 1);
    std::map<Weight, std::size_t> dense_h, chain_dims;
    for (const auto& [mu, idx] : here) {
      std::size_t r_out = 0, r_in = 0;
      if (k && below.count(mu)) r_out = block_rank(mats[k], below.at(mu), idx);
      if (above.count(mu)) r_in = block_rank(mats[k + 1], idx, above.at(mu));
      dense_h[mu] = idx.size() - r_out - r_in;
      chain_dims[mu] = idx.size();
    }
    std::map<Weight, std::size_t> main_dims;
    for (const auto& [mu, blk] : C.blocks(k)) main_dims[mu] = blk.dim();
    record(tag + "dim C_" + std::to_string(k) + " per weight", show(chain_dims), show(main_dims));
    record(tag + "dense H_" + std::to_string(k) + " vs main path", show(dense_h), show(nonzero(rep.homology.at(k))));
    std::map<Weight, std::size_t> expected;
    if (auto it = orbit.find(k); it != orbit.end())
      for (const auto& w : it->second) ++expected[w];
    record(tag + "dense H_" + std::to_string(k) + " vs dot orbit", show(expected), show(dense_h));

    // Laplacian kernel: blocks on the Casimir level of lambda.
    const auto rs = build_root_system(n);
    const Rational level = inner(lambda + rs.rho(), lambda + rs.rho());
    std::map<Weight, std::size_t> kernel;
    for (const auto& [mu, idx] : here)
      if (inner(mu + rs.rho(), mu + rs.rho()) == level) kernel[mu] = idx.size();
    const auto lap = laplacian_kernel(C, k);
    record(tag + "Laplacian kernel in degree " + std::to_string(k), show(kernel), show(lap.kernel));
    bool contains = true;
    for (const auto& [mu, h] : dense_h)
      if (h > (kernel.count(mu) ? kernel.at(mu) : 0)) contains = false;
    record(tag + "Laplacian kernel contains H_" + std::to_string(k), "true", contains ? "true" : "false");
  }
  return out;
}

}  // namespace osp
