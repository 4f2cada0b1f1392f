#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace orbitcensus {

/// Arbitrary-precision signed integer. All arithmetic in this project is
/// exact; nothing is ever rounded or allowed to overflow.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline std::string to_decimal(const BigInt& n) { return n.get_str(10); }

/// floor(sqrt(n)); rejects negative input.
BigInt isqrt_floor(const BigInt& n);

/// Smallest r with r*r >= n; rejects negative input.
BigInt isqrt_ceil(const BigInt& n);

/// floor(n^(1/k)) for k >= 1, n >= 0.
BigInt iroot_floor(const BigInt& n, unsigned long k);

/// Smallest r with r^k >= n.
BigInt iroot_ceil(const BigInt& n, unsigned long k);

/// A non-negative half-integer, stored as twice its value.
struct HalfInt {
  long numerator = 0;  // value = numerator / 2

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(long twice) : numerator(twice) {}
  static constexpr HalfInt whole(long v) { return HalfInt(2 * v); }
  static constexpr HalfInt halves(long twice) { return HalfInt(twice); }

  constexpr bool is_integer() const { return numerator % 2 == 0; }
  constexpr long floor() const {
    return numerator >= 0 ? numerator / 2 : (numerator - 1) / 2;
  }
  std::string str() const;

  friend constexpr bool operator==(HalfInt a, HalfInt b) {
    return a.numerator == b.numerator;
  }
  friend constexpr bool operator<(HalfInt a, HalfInt b) {
    return a.numerator < b.numerator;
  }
};

enum class RoundMode { lower, upper };

/// base^exp bracketed to an integer. For integral exp both modes return the
/// exact power; for an odd half the sqrt factor is floored (lower) or
/// ceiled (upper), so lower <= base^exp <= upper always.
BigInt pow_half(const BigInt& base, HalfInt exp, RoundMode mode);

/// Decomposes n = r^m with r prime, m >= 1, or nothing if n is not a
/// prime power. Requires n >= 2.
std::optional<std::pair<BigInt, unsigned long>> prime_power(const BigInt& n);

bool is_prime(const BigInt& n);

/// Number of distinct prime divisors; div_count(1) == 0.
unsigned div_count(std::uint64_t n);

/// p if p divides n, else 0. p must be prime.
std::uint64_t d_p(std::uint64_t n, std::uint64_t p);

}  // namespace orbitcensus
