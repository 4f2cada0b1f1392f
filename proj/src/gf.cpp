#include "orbitcensus/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace orbitcensus {

namespace {

constexpr std::uint64_t kFieldCap = 1u << 20;

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  return r;
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  poly_trim(a);
  while (a.size() >= f.size()) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - f.size();
    if (c != 0) {
      for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        std::uint64_t sub = static_cast<std::uint64_t>(c) * f[i] % p;
        a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
      }
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // make b monic before reducing
    std::uint32_t lead = b.back();
    if (lead != 1) {
      // lead^-1 mod p by Fermat
      std::uint64_t inv = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
    }
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Rabin irreducibility test for monic f of degree k over GF(p).
bool poly_irreducible(const Poly& f, std::uint32_t p) {
  std::uint32_t k = static_cast<std::uint32_t>(f.size()) - 1;
  Poly x{0, 1};
  // x^(p^k) == x mod f
  Poly t = x;
  for (std::uint32_t i = 0; i < k; ++i) t = poly_powmod(t, p, f, p);
  Poly diff = t;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  poly_trim(diff);
  if (!diff.empty()) return false;
  // gcd(x^(p^(k/t)) - x, f) == 1 for every prime t | k
  for (std::uint32_t t2 = 2; t2 <= k; ++t2) {
    if (k % t2 != 0) continue;
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= t2; ++d)
      if (t2 % d == 0) prime = false;
    if (!prime) continue;
    Poly u = x;
    for (std::uint32_t i = 0; i < k / t2; ++i) u = poly_powmod(u, p, f, p);
    Poly d2 = u;
    d2.resize(std::max<std::size_t>(d2.size(), 2), 0);
    d2[1] = (d2[1] + p - 1) % p;
    poly_trim(d2);
    Poly g = poly_gcd(f, d2, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_small_prime(p)) throw std::invalid_argument("Field: p not prime");
  if (k < 1) throw std::invalid_argument("Field: degree must be >= 1");
  std::uint64_t q = ipow(p, k);
  if (q > kFieldCap) throw std::invalid_argument("Field: size over 2^20 cap");
  q_ = static_cast<std::uint32_t>(q);
  pow_p_.resize(k + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * p;
  if (k == 1) return;
  // Lexicographically least monic irreducible, coefficients compared
  // low-degree-first: candidate t carries c_0 in its most significant
  // base-p digit, so counting order equals lex order on (c_0, .., c_{k-1}).
  for (std::uint64_t t = 0; t < q; ++t) {
    Poly f(k + 1, 0);
    f[k] = 1;
    std::uint64_t rest = t;
    for (std::uint32_t j = 0; j < k; ++j) {
      f[k - 1 - j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (poly_irreducible(f, p)) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw std::logic_error("Field: no irreducible polynomial found");
}

const Field* Field::get(std::uint32_t p, std::uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::unique_ptr<Field>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, k))).first;
  return it->second.get();
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t da = a / pow_p_[i] % p_;
    std::uint32_t db = b / pow_p_[i] % p_;
    r += (da + db) % p_ * pow_p_[i];
  }
  return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t da = a / pow_p_[i] % p_;
    r += (da == 0 ? 0 : p_ - da) * pow_p_[i];
  }
  return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1)
    return static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a) * b % p_);
  Poly pa(k_), pb(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    pa[i] = a / pow_p_[i] % p_;
    pb[i] = b / pow_p_[i] % p_;
  }
  Poly pr = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < pr.size(); ++i) r += pr[i] * pow_p_[i];
  return r;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("Field::inv: zero");
  return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

std::uint32_t Field::frobenius(std::uint32_t a) const { return pow(a, p_); }

std::uint32_t Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::string Field::to_string(std::uint32_t a) const {
  if (k_ == 1) return std::to_string(a);
  std::string s;
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (i) s += ',';
    s += std::to_string(a / pow_p_[i] % p_);
  }
  return s;
}

}  // namespace orbitcensus
