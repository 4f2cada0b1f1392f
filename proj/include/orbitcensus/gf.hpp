#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbitcensus {

/// GF(p^k) with elements encoded as integers in [0, p^k): the code's base-p
/// digits are the coefficients of the polynomial representative, lowest
/// degree first. For k == 1 the code is just the residue.
///
/// Fields are immutable and interned: Field::get(p, k) returns a pointer
/// that is stable for the lifetime of the process, so fields compare by
/// pointer identity.
class Field {
 public:
  static const Field* get(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Modulus coefficients, lowest degree first, length k+1; empty for k == 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Frobenius a^p.
  std::uint32_t frobenius(std::uint32_t a) const;
  std::uint32_t from_int(std::int64_t v) const;  // image of v*1

  std::string to_string(std::uint32_t a) const;

 private:
  Field(std::uint32_t p, std::uint32_t k);

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^0..p^k for digit extraction
};

bool is_small_prime(std::uint32_t p);

}  // namespace orbitcensus
