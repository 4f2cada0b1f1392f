#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "orbitcensus/exactmath.hpp"
#include "orbitcensus/gf.hpp"
#include "orbitcensus/mat.hpp"

using namespace orbitcensus;

TEST_CASE("isqrt floor and ceil") {
  CHECK(isqrt_floor(BigInt(0)) == 0);
  CHECK(isqrt_floor(BigInt(49)) == 7);
  CHECK(isqrt_ceil(BigInt(49)) == 7);
  CHECK(isqrt_floor(BigInt(23)) == 4);
  CHECK(isqrt_ceil(BigInt(23)) == 5);
  CHECK_THROWS_AS(isqrt_floor(BigInt(-1)), std::domain_error);

  std::mt19937_64 rng(12345);
  for (int i = 0; i < 2000; ++i) {
    BigInt n(static_cast<unsigned long>(rng() % 1000000000000000000ull));
    BigInt r = isqrt_floor(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    BigInt rc = isqrt_ceil(n);
    CHECK(rc * rc >= n);
    if (rc > 0) CHECK((rc - 1) * (rc - 1) < n);
  }
}

TEST_CASE("iroot") {
  CHECK(iroot_floor(BigInt(342), 3) == 6);  // 7^3 - 1
  CHECK(iroot_ceil(BigInt(342), 3) == 7);
  CHECK(iroot_floor(BigInt(343), 3) == 7);
  CHECK(iroot_ceil(BigInt(343), 3) == 7);
}

TEST_CASE("pow_half brackets the true value") {
  // integral exponent: exact in both modes
  CHECK(pow_half(BigInt(9), HalfInt::whole(3), RoundMode::lower) == 729);
  CHECK(pow_half(BigInt(9), HalfInt::whole(3), RoundMode::upper) == 729);
  // odd half: 7^(9/2) between 7^4*2 and 7^4*3
  BigInt lo = pow_half(BigInt(7), HalfInt::halves(9), RoundMode::lower);
  BigInt hi = pow_half(BigInt(7), HalfInt::halves(9), RoundMode::upper);
  CHECK(lo == 4802);
  CHECK(hi == 7203);
  CHECK(lo * lo <= bigint_pow(BigInt(7), 9));
  CHECK(hi * hi >= bigint_pow(BigInt(7), 9));

  for (long base = 2; base <= 50; ++base)
    for (long num = 0; num <= 9; ++num) {
      BigInt l = pow_half(BigInt(base), HalfInt::halves(num), RoundMode::lower);
      BigInt h = pow_half(BigInt(base), HalfInt::halves(num), RoundMode::upper);
      CHECK(l <= h);
      bool integral = num % 2 == 0;
      BigInt s = isqrt_floor(BigInt(base));
      bool square = s * s == base;
      CHECK((l == h) == (integral || square));
    }
}

TEST_CASE("prime_power") {
  auto pp = prime_power(BigInt(121));
  REQUIRE(pp.has_value());
  CHECK(pp->first == 11);
  CHECK(pp->second == 2);
  CHECK(!prime_power(BigInt(12)).has_value());
  auto p7 = prime_power(BigInt(7));
  REQUIRE(p7.has_value());
  CHECK(p7->first == 7);
  CHECK(p7->second == 1);
  CHECK_THROWS_AS(prime_power(BigInt(1)), std::domain_error);

  // round trip r^m for every prime r <= 100, m <= 10
  for (unsigned long r = 2; r <= 100; ++r) {
    if (!is_prime(BigInt(r))) continue;
    for (unsigned long m = 1; m <= 10; ++m) {
      auto back = prime_power(bigint_pow(BigInt(r), m));
      REQUIRE(back.has_value());
      CHECK(back->first == BigInt(r));
      CHECK(back->second == m);
    }
  }
}

TEST_CASE("div_count and d_p") {
  CHECK(div_count(1) == 0);
  CHECK(div_count(12) == 2);
  CHECK(div_count(30) == 3);
  CHECK(d_p(10, 3) == 0);
  CHECK(d_p(9, 3) == 3);
  CHECK(d_p(10, 2) == 2);
  CHECK_THROWS_AS(d_p(10, 4), std::domain_error);
}

TEST_CASE("field construction") {
  const Field* f2 = Field::get(2, 1);
  CHECK(f2->size() == 2);
  const Field* f7 = Field::get(7, 1);
  CHECK(f7->size() == 7);
  CHECK(f7->mul(3, 5) == 1);
  CHECK(f7->inv(3) == 5);

  const Field* f9 = Field::get(3, 2);
  CHECK(f9->size() == 9);
  // modulus is x^2 + 1: irreducible, and lexicographically least since
  // every earlier candidate has constant term 0
  REQUIRE(f9->modulus().size() == 3);
  CHECK(f9->modulus()[0] == 1);
  CHECK(f9->modulus()[1] == 0);
  CHECK(f9->modulus()[2] == 1);
  for (std::uint32_t a = 0; a < 3; ++a)
    CHECK(f9->add(f9->mul(a, a), 1) != 0);  // no root in GF(3)

  CHECK_THROWS_AS(Field::get(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 21), std::invalid_argument);
}

TEST_CASE("field axioms on GF(9) and GF(8)") {
  for (const Field* f : {Field::get(3, 2), Field::get(2, 3)}) {
    std::uint32_t q = f->size();
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->add(a, f->neg(a)) == 0);
    }
  }
}

TEST_CASE("frobenius has order exactly k") {
  struct Case {
    std::uint32_t p, k;
  };
  for (Case c : {Case{2, 1}, Case{2, 4}, Case{3, 2}, Case{5, 2}, Case{7, 2},
                 Case{3, 4}}) {
    const Field* f = Field::get(c.p, c.k);
    for (std::uint32_t iter = 1; iter <= c.k; ++iter) {
      bool fixes_all = true;
      for (std::uint32_t a = 0; a < f->size(); ++a) {
        std::uint32_t x = a;
        for (std::uint32_t j = 0; j < iter; ++j) x = f->frobenius(x);
        if (x != a) fixes_all = false;
      }
      CHECK(fixes_all == (iter == c.k));
    }
  }
}

TEST_CASE("matrix basics") {
  const Field* f3 = Field::get(3, 1);
  Mat id = Mat::identity(f3, 2);
  CHECK(id.is_identity());
  Mat c = Mat::from_ints(f3, 2, 2, {0, -1, 1, 0});  // companion of x^2+1
  CHECK(element_order(c, 10) == 4);
  CHECK(c.mul(c.inverse()).is_identity());

  const Field* f2 = Field::get(2, 1);
  Mat jordan = Mat::from_ints(f2, 2, 2, {1, 1, 0, 1});
  CHECK(element_order(jordan, 10) == 2);
  Mat idm = Mat::identity(f2, 4);
  CHECK(element_order(idm, 10) == 1);
}

TEST_CASE("fixed_space") {
  const Field* f2 = Field::get(2, 1);
  CHECK(fixed_space(Mat::identity(f2, 4)).dimension == 4);
  Mat swap = Mat::from_ints(f2, 2, 2, {0, 1, 1, 0});
  CHECK(fixed_space(swap).dimension == 1);

  const Field* f3 = Field::get(3, 1);
  Mat refl = Mat::from_ints(f3, 2, 2, {1, 0, 0, -1});
  FixedSpace fs = fixed_space(refl);
  CHECK(fs.dimension == 1);
  // the basis vector is genuinely fixed
  CHECK(refl.apply(fs.basis[0]) == fs.basis[0]);

  Mat sing = Mat::from_ints(f3, 2, 2, {1, 0, 0, 0});
  CHECK_THROWS(fixed_space(sing));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(987);
  for (const Field* f : {Field::get(2, 1), Field::get(5, 1), Field::get(3, 2)}) {
    for (int iter = 0; iter < 60; ++iter) {
      std::uint32_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      Mat m(f, rows, cols);
      for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j)
          m.at(i, j) = rng() % f->size();
      CHECK(m.rank() + m.kernel().size() == cols);
      // kernel vectors are genuinely in the kernel
      for (const auto& v : m.kernel()) {
        auto image = m.apply(v);
        for (std::uint32_t x : image) CHECK(x == 0);
      }
    }
  }
}

TEST_CASE("fixed space dimension is conjugation invariant") {
  const Field* f3 = Field::get(3, 1);
  std::mt19937 rng(55);
  Mat g = Mat::from_ints(f3, 3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 2});
  std::uint32_t d = fixed_space(g).dimension;
  int done = 0;
  while (done < 20) {
    Mat h(f3, 3, 3);
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j) h.at(i, j) = rng() % 3;
    if (h.det() == 0) continue;
    ++done;
    Mat conj = h.mul(g).mul(h.inverse());
    CHECK(fixed_space(conj).dimension == d);
  }
}
