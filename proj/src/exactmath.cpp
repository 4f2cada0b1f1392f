#include "orbitcensus/exactmath.hpp"

namespace orbitcensus {

BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative input");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt isqrt_ceil(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt_ceil: negative input");
  BigInt r = isqrt_floor(n);
  if (r * r < n) r += 1;
  return r;
}

BigInt iroot_floor(const BigInt& n, unsigned long k) {
  if (n < 0) throw std::domain_error("iroot_floor: negative input");
  if (k == 0) throw std::domain_error("iroot_floor: k must be >= 1");
  BigInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt iroot_ceil(const BigInt& n, unsigned long k) {
  BigInt r = iroot_floor(n, k);
  if (bigint_pow(r, k) < n) r += 1;
  return r;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(numerator / 2);
  return std::to_string(numerator) + "/2";
}

BigInt pow_half(const BigInt& base, HalfInt exp, RoundMode mode) {
  if (base < 1) throw std::domain_error("pow_half: base must be >= 1");
  if (exp.numerator < 0) throw std::domain_error("pow_half: negative exponent");
  BigInt whole = bigint_pow(base, static_cast<unsigned long>(exp.floor()));
  if (exp.is_integer()) return whole;
  BigInt s = mode == RoundMode::lower ? isqrt_floor(base) : isqrt_ceil(base);
  return whole * s;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<std::pair<BigInt, unsigned long>> prime_power(const BigInt& n) {
  if (n < 2) throw std::domain_error("prime_power: n must be >= 2");
  // n = r^m forces m <= log2(n); try the largest exponent first so the
  // base found is the (unique) prime.
  unsigned long maxm = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long m = maxm; m >= 1; --m) {
    BigInt r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), m);
    if (exact && is_prime(r)) return std::make_pair(r, m);
  }
  return std::nullopt;
}

unsigned div_count(std::uint64_t n) {
  if (n == 0) throw std::domain_error("div_count: n must be >= 1");
  unsigned count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++count;
  return count;
}

std::uint64_t d_p(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("d_p: n must be >= 1");
  if (!is_prime(BigInt(static_cast<unsigned long>(p))))
    throw std::domain_error("d_p: p must be prime");
  return n % p == 0 ? p : 0;
}

}  // namespace orbitcensus
