#pragma once

// Exact arithmetic vocabulary shared by every module. Everything is backed
// by GMP; there is no floating point in the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kernelcut/errors.hpp"

namespace kernelcut {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact rational vector; entries are kept canonical (GMP normalizes).
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// Number of bits of |x|; zero has length 0.
inline std::size_t bit_length(const Integer& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

/// Bits of numerator plus bits of denominator.
inline std::size_t bit_length(const Rational& x) {
  return bit_length(Integer(x.get_num())) + bit_length(Integer(x.get_den()));
}

inline Integer pow2(std::uint64_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

inline Integer power(const Integer& base, std::uint64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational power(const Rational& base, std::uint64_t e) {
  Rational out(power(Integer(base.get_num()), e), power(Integer(base.get_den()), e));
  out.canonicalize();
  return out;
}

inline Integer floor_of(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

/// Nearest integer, halves rounded up.
inline Integer round_of(const Rational& x) { return floor_of(x + Rational(1, 2)); }

inline Integer abs_of(const Integer& x) { return abs(x); }

/// Smallest e with 2^e >= x, for x >= 1.
inline std::uint64_t ceil_log2(const Integer& x) {
  if (x <= 1) return 0;
  return bit_length(Integer(x - 1));
}

inline Integer gcd_of(std::span<const Integer> xs) {
  Integer g = 0;
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

inline Integer lcm_of_denominators(std::span<const Rational> xs) {
  Integer l = 1;
  for (const auto& x : xs) l = lcm(l, Integer(x.get_den()));
  return l;
}

inline Integer max_abs(std::span<const Integer> xs) {
  Integer m = 0;
  for (const auto& x : xs)
    if (abs(x) > m) m = abs(x);
  return m;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') return false;
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

/// Accepts "p", "p/q" with q != 0. Result is canonical.
inline bool parse_rational(std::string_view text, Rational& out) {
  auto slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return false;
  } else {
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) return false;
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(den_text, den)) return false;
    if (den == 0) return false;
  }
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RationalVector to_rational(std::span<const Integer> xs) {
  return RationalVector(xs.begin(), xs.end());
}

}  // namespace kernelcut
