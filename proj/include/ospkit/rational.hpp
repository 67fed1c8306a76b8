#pragma once

// Exact rational scalars. Every number in ospkit is a Rational; there are no
// floating point tolerances anywhere in the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace osp {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rational& q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view text)
{
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Rational q;
  q.get_num() = Integer(num, 10);
  q.get_den() = Integer(den, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

/// p/q in lowest terms. Rational(p, q) alone keeps p and q as given, and
/// equality assumes lowest terms.
inline Rational ratio(long p, long q)
{
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Value of an integral rational as a machine integer.
inline long to_long(const Rational& q)
{
  if (!is_integer(q)) throw std::domain_error("rational " + to_string(q) + " is not an integer");
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
  return q.get_num().get_si();
}

}  // namespace osp
