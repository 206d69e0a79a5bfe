#pragma once

// Checked 64-bit integer helpers. Every product and sum that can grow with n
// or with a Chern number goes through these so that wraparound surfaces as an
// exception instead of a wrong gcd.

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace howestrata {

using Integer = std::int64_t;

struct OverflowError : std::overflow_error {
  explicit OverflowError(const std::string& what)
      : std::overflow_error("integer overflow in " + what) {}
};

inline Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("addition");
  return out;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("subtraction");
  return out;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("multiplication");
  return out;
}

inline Integer checked_neg(Integer a) { return checked_sub(0, a); }

inline Integer abs_value(Integer a) { return a < 0 ? checked_neg(a) : a; }

/// Nonnegative gcd; gcd(0, 0) = 0.
inline Integer gcd(Integer a, Integer b) { return std::gcd(abs_value(a), abs_value(b)); }

/// gcd of a sequence, with the empty sequence mapping to 0.
inline Integer gcd_seq(std::span<const Integer> values) {
  Integer g = 0;
  for (Integer v : values) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

/// `d | c` with the convention that 0 divides only 0.
inline bool divides(Integer d, Integer c) {
  if (d == 0) return c == 0;
  return c % d == 0;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer mod_floor(Integer a, Integer m) {
  Integer r = a % m;
  return r < 0 ? r + m : r;
}

/// (a * b) mod m for 0 <= a, b < m without intermediate overflow.
inline Integer mul_mod(Integer a, Integer b, Integer m) {
  return static_cast<Integer>((static_cast<__int128>(a) * b) % m);
}

/// floor(sqrt(x)) for x >= 0.
inline Integer isqrt(Integer x) {
  if (x < 0) throw std::domain_error("isqrt of negative value");
  auto r = static_cast<Integer>(__builtin_sqrtl(static_cast<long double>(x)));
  while (r > 0 && static_cast<__int128>(r) * r > x) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace howestrata
