#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace osp {

/// Element of h* written in the basis delta_1..delta_n.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight from_ints(std::initializer_list<long> values)
  {
    Weight w(values.size());
    std::size_t i = 0;
    for (long v : values) w.coords_[i++] = v;
    return w;
  }

  /// delta_i, 0-based.
  static Weight unit(std::size_t rank, std::size_t i)
  {
    Weight w(rank);
    w.coords_.at(i) = 1;
    return w;
  }

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const
  {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  bool is_integral() const
  {
    for (const auto& c : coords_)
      if (c.get_den() != 1) return false;
    return true;
  }

  Weight& operator+=(const Weight& o)
  {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o)
  {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Weight& operator*=(const Rational& s)
  {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a)
  {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Weight& a, const Weight& b)
  {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (a.coords_[i] < b.coords_[i]) return true;
      if (b.coords_[i] < a.coords_[i]) return false;
    }
    return false;
  }
  friend bool operator>(const Weight& a, const Weight& b) { return b < a; }

 private:
  void check_rank(const Weight& o) const
  {
    if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  }

  std::vector<Rational> coords_;
};

/// "3/2,1/2"
inline std::string to_string(const Weight& w)
{
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  return out;
}

inline Weight parse_weight(std::string_view text)
{
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coords.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(coords));
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << to_string(w) << ')'; }

}  // namespace osp
