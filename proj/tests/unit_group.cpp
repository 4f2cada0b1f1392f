#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "orbitcensus/group.hpp"
#include "orbitcensus/models.hpp"

using namespace orbitcensus;

namespace {

Module f2_dim2() { return Module{Field::get(2, 1), 2, nullptr}; }

std::vector<GroupElement> gl22_gens() {
  const Field* f = Field::get(2, 1);
  return {GroupElement(Mat::from_ints(f, 2, 2, {0, 1, 1, 0})),
          GroupElement(Mat::from_ints(f, 2, 2, {0, 1, 1, 1}))};
}

std::vector<GroupElement> sl23_gens() {
  const Field* f = Field::get(3, 1);
  return {GroupElement(Mat::from_ints(f, 2, 2, {0, -1, 1, 0})),
          GroupElement(Mat::from_ints(f, 2, 2, {1, 1, 0, 1}))};
}

BigInt gl_order(std::uint32_t q, std::uint32_t n) {
  BigInt order = 1;
  BigInt qn = bigint_pow(BigInt(q), n);
  BigInt qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

}  // namespace

TEST_CASE("closure basics") {
  Module mod = f2_dim2();
  FiniteGroup trivial = FiniteGroup::closure(
      mod, {GroupElement(Mat::identity(mod.ground, 2))}, 4);
  CHECK(trivial.size() == 1);

  FiniteGroup gl22 = FiniteGroup::closure(mod, gl22_gens(), 16);
  CHECK(gl22.size() == 6);

  Module mod3{Field::get(3, 1), 2, nullptr};
  FiniteGroup sl23 = FiniteGroup::closure(mod3, sl23_gens(), 32);
  CHECK(sl23.size() == 24);

  CHECK_THROWS_AS(FiniteGroup::closure(mod3, sl23_gens(), 23),
                  std::runtime_error);
}

TEST_CASE("closure is independent of generator order") {
  Module mod3{Field::get(3, 1), 2, nullptr};
  std::vector<GroupElement> gens = sl23_gens();
  FiniteGroup a = FiniteGroup::closure(mod3, gens, 32);
  std::reverse(gens.begin(), gens.end());
  FiniteGroup b = FiniteGroup::closure(mod3, gens, 32);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a.element(i) == b.element(i));
}

TEST_CASE("mixed modules rejected") {
  Module mod = f2_dim2();
  std::vector<GroupElement> gens = gl22_gens();
  gens.push_back(GroupElement(Mat::identity(Field::get(3, 1), 2)));
  CHECK_THROWS_AS(FiniteGroup::closure(mod, gens, 100),
                  std::invalid_argument);
}

TEST_CASE("closure order divides the ambient GL order") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 10; ++iter) {
    std::uint32_t q = iter % 2 == 0 ? 2 : 3;
    std::uint32_t n = 2 + iter % 2;
    Module mod{Field::get(q, 1), n, nullptr};
    std::vector<GroupElement> gens;
    while (gens.size() < 2) {
      Mat m(mod.ground, n, n);
      for (std::uint32_t i = 0; i < n * n; ++i)
        m.at(i / n, i % n) = rng() % q;
      if (m.det() != 0) gens.emplace_back(std::move(m));
    }
    FiniteGroup g = FiniteGroup::closure(mod, gens, 1u << 16);
    BigInt ambient = gl_order(q, n);
    CHECK(ambient % BigInt(static_cast<unsigned long>(g.size())) == 0);
    // Lagrange spot check
    for (std::size_t i = 0; i < g.size(); i += 7)
      CHECK(g.size() % g.element(i).order(1u << 16) == 0);
  }
}

TEST_CASE("wreath products") {
  Model s3 = make_model("s3_f2");
  FiniteGroup w2 = wreath(s3.group, perm_group_gens("s2"), 100);
  CHECK(w2.size() == 72);
  CHECK(w2.module().dim == 4);

  FiniteGroup w3 = wreath(s3.group, perm_group_gens("s3"), 1300);
  CHECK(w3.size() == 1296);
  CHECK(w3.module().dim == 6);

  Model sl = make_model("sl23_f3");
  FiniteGroup wsl = wreath(sl.group, perm_group_gens("s2"), 1200);
  CHECK(wsl.size() == 1152);
  CHECK(wsl.module().dim == 4);

  // diagonal copy of the base and the block-permutation complement
  for (const GroupElement& h : s3.group.elements()) {
    Mat diag = Mat::identity(w2.module().ground, 4);
    for (std::uint32_t blk = 0; blk < 2; ++blk)
      for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j)
          diag.at(blk * 2 + i, blk * 2 + j) = h.matrix().at(i, j);
    CHECK(w2.contains(GroupElement(std::move(diag))));
  }
  Mat blockswap(w2.module().ground, 4, 4);
  blockswap.at(2, 0) = blockswap.at(3, 1) = 1;
  blockswap.at(0, 2) = blockswap.at(1, 3) = 1;
  CHECK(w2.contains(GroupElement(std::move(blockswap))));

  // base subgroup S3 x S3 is normal in the wreath product
  std::vector<GroupElement> base_gens;
  for (std::uint32_t blk = 0; blk < 2; ++blk)
    for (const GroupElement& h : s3.group.generators()) {
      Mat big = Mat::identity(w2.module().ground, 4);
      for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j)
          big.at(blk * 2 + i, blk * 2 + j) = h.matrix().at(i, j);
      base_gens.emplace_back(std::move(big));
    }
  FiniteGroup base = FiniteGroup::closure(w2.module(), base_gens, 40);
  CHECK(base.size() == 36);
  CHECK(normal_test(w2, base.elements()));

  // cap is enforced
  CHECK_THROWS_AS(wreath(s3.group, perm_group_gens("s2"), 71),
                  std::runtime_error);
}

TEST_CASE("F20 is the order-20 Frobenius group") {
  std::vector<Perm> gens = perm_group_gens("f20");
  // embed as permutation matrices over GF(2) and close
  Module mod{Field::get(2, 1), 5, nullptr};
  std::vector<GroupElement> mats;
  for (const Perm& s : gens) {
    Mat m(mod.ground, 5, 5);
    for (std::uint32_t i = 0; i < 5; ++i) m.at(s[i], i) = 1;
    mats.emplace_back(std::move(m));
  }
  CHECK(FiniteGroup::closure(mod, mats, 32).size() == 20);
}

TEST_CASE("semilinear groups") {
  FiniteGroup g92 = semilinear_group(3, 2);
  CHECK(g92.size() == 16);
  FiniteGroup g7 = semilinear_group(7, 1);
  CHECK(g7.size() == 6);
  for (const GroupElement& x : g7.elements())
    CHECK(x.semilinear().i == 0);
  FiniteGroup g34 = semilinear_group(3, 4);
  CHECK(g34.size() == 320);
  CHECK(semilinear_scalar_group(3, 4).size() == 80);

  // exhaustive associativity over Gamma(3^2)
  for (const GroupElement& a : g92.elements())
    for (const GroupElement& b : g92.elements())
      for (const GroupElement& c : g92.elements())
        CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));

  // inverse really inverts
  for (const GroupElement& a : g34.elements())
    CHECK(a.mul(a.inverse()).is_identity());
}

TEST_CASE("semilinear matrix form is a homomorphism") {
  FiniteGroup g = semilinear_group(3, 2);
  const Module& mod = g.module();
  for (const GroupElement& a : g.elements())
    for (const GroupElement& b : g.elements()) {
      Mat lhs = a.mul(b).matrix_form(mod);
      Mat rhs = a.matrix_form(mod).mul(b.matrix_form(mod));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("centralizer, center, normality") {
  Model q8 = make_model("q8_normalizer", {5, 0});
  CHECK(center(*q8.E).size() == 2);  // Z(Q8) = <-I>

  Model w = make_model("s3_wr_s2");
  CHECK(center(w.group).size() == 1);

  // centralizer of the center is everything
  CHECK(centralizer(w.group, center(w.group)).size() == w.group.size());
}

TEST_CASE("generator file round trip") {
  Model sl = make_model("sl23_f3");
  std::ostringstream out;
  save_generators(out, sl.group.module(), sl.group.generators());
  std::istringstream in(out.str());
  GeneratorFile gf = load_generators(in);
  CHECK(gf.mod == sl.group.module());
  REQUIRE(gf.generators.size() == sl.group.generators().size());
  FiniteGroup g = FiniteGroup::closure(gf.mod, gf.generators, 32);
  CHECK(g.size() == 24);
}

TEST_CASE("generator file with extension-field tuples") {
  std::istringstream in(
      "# GF(9) scalars acting on a line\n"
      "field 3 2 / dim 1\n"
      "\n"
      "0,1\n");
  GeneratorFile gf = load_generators(in);
  CHECK(gf.mod.ground->size() == 9);
  CHECK(gf.mod.dim == 1);
  // x has multiplicative order 4 in GF(9) with modulus x^2+1
  FiniteGroup g = FiniteGroup::closure(gf.mod, gf.generators, 16);
  CHECK(g.size() == 4);
}

TEST_CASE("generator file rejects bad input") {
  {
    std::istringstream in("dim 2 field 2 1\n");
    CHECK_THROWS(load_generators(in));
  }
  {
    std::istringstream in("field 2 1 / dim 2\n\n1 0\n");
    CHECK_THROWS(load_generators(in));  // wrong row count
  }
  {
    std::istringstream in("field 2 1 / dim 2\n\n1 0 1\n0 1\n");
    CHECK_THROWS(load_generators(in));  // wrong entry count
  }
  {
    std::istringstream in("field 2 1 / dim 2\n\n0 0\n0 0\n");
    CHECK_THROWS(load_generators(in));  // singular
  }
}
