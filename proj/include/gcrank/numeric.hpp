#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcrank/error.hpp"

namespace gcrank {

using Integer = boost::multiprecision::mpz_int;
// mpq_rational is kept canonical by GMP: lowest terms, positive denominator.
using Rational = boost::multiprecision::mpq_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Largest integer <= r.
inline Integer floor(const Rational& r) {
  Integer q, rem;
  const Integer n = numer(r), d = denom(r);
  boost::multiprecision::divide_qr(n, d, q, rem);
  if (rem < 0) --q;
  return q;
}

/// Smallest integer >= r.
inline Integer ceil(const Rational& r) { return -floor(-r); }

/// floor(a / b) for integers with b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) { return floor(Rational(a, b)); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }
inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

inline Integer pow2(unsigned k) {
  Integer r = 1;
  r <<= k;
  return r;
}

/// Number of bits needed to write a nonnegative integer (0 for 0).
inline unsigned bit_length(const Integer& a) {
  if (a <= 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(a)) + 1;
}

inline bool fits_int64(const Integer& a) {
  return a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Integer& a) {
  if (!fits_int64(a)) throw Error(ErrorCode::kTooLarge, "integer does not fit in 64 bits: " + a.str());
  return a.convert_to<std::int64_t>();
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorCode::kParse, "bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::kParse, "bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

/// Accepts "p/q" or a plain integer "p".
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer p = parse_integer(text.substr(0, slash));
  const Integer q = parse_integer(text.substr(slash + 1));
  if (q == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

inline std::string to_string(const Integer& a) { return a.str(); }

/// "p/q" in lowest terms, or "p" when the value is an integer.
inline std::string to_string(const Rational& r) {
  if (denom(r) == 1) return numer(r).str();
  return numer(r).str() + "/" + denom(r).str();
}

/// Decimal rendering for human-facing fields; `digits` after the point, truncated toward -inf.
inline std::string to_decimal(const Rational& r, unsigned digits = 12) {
  const Integer scale = boost::multiprecision::pow(Integer(10), digits);
  Integer scaled = floor(r * scale);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

inline Integer sum(const std::vector<Integer>& v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

inline Integer l1_norm(const std::vector<Integer>& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

inline Integer linf_norm(const std::vector<Integer>& v) {
  Integer m = 0;
  for (const auto& x : v) {
    const Integer a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

/// gcd of all entries (0 for the zero vector).
inline Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, abs(x));
    if (g == 1) break;
  }
  return g;
}

/// Subset sum of v over sorted index list.
inline Integer sum_over(const std::vector<Integer>& v, const std::vector<std::size_t>& idx) {
  Integer s = 0;
  for (auto i : idx) s += v.at(i);
  return s;
}

}  // namespace gcrank
