#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "orbitcensus/census.hpp"
#include "orbitcensus/models.hpp"
#include "orbitcensus/orbitscan.hpp"

using namespace orbitcensus;

namespace {

// independent oracle: free vectors found by direct stabilizer test,
// applying every group element to every vector
BigInt free_count_oracle(const FiniteGroup& g) {
  const Module& mod = g.module();
  std::uint64_t q = mod.ground->size();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < mod.dim; ++i) total *= q;
  std::vector<Mat> prime_order;
  for (const GroupElement& x : g.elements()) {
    std::uint32_t o = x.order(1u << 16);
    if (o >= 2 && is_small_prime(o)) prime_order.push_back(x.matrix_form(mod));
  }
  std::uint64_t free = 0;
  std::vector<std::uint32_t> v(mod.dim);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::uint32_t i = 0; i < mod.dim; ++i) {
      v[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    bool fixed = false;
    for (const Mat& m : prime_order)
      if (m.apply(v) == v) {
        fixed = true;
        break;
      }
    if (!fixed) ++free;
  }
  return BigInt(static_cast<unsigned long>(free));
}

}  // namespace

TEST_CASE("golden censuses: S3 and SL(2,3)") {
  CensusReport s3 = census(make_model("s3_f2").group);
  CHECK(s3.order == 6);
  CHECK(s3.nep_p(2) == 3);
  CHECK(s3.nep_p(3) == 2);
  CHECK(s3.npc_at(2, 1) == 3);
  CHECK(s3.npc_at(3, 0) == 2);
  CHECK(s3.sp_p(3) == 1);

  CensusReport sl = census(make_model("sl23_f3").group);
  CHECK(sl.order == 24);
  CHECK(sl.nep_p(2) == 1);
  CHECK(sl.nep_p(3) == 8);
}

TEST_CASE("census invariants on small models") {
  for (const char* name : {"s3_f2", "sl23_f3", "s3_wr_s2", "sl23_wr_s2"}) {
    CensusReport r = census(make_model(name).group);
    std::uint64_t total = 0;
    for (const auto& [p, n] : r.nep) {
      CHECK(n % (p - 1) == 0);  // (p-1) | NEP_p
      std::uint64_t hist_sum = 0;
      for (const auto& [dim, c] : r.npc.at(p)) hist_sum += c;
      CHECK(hist_sum == n);  // sum_i NPC(p,i) = NEP_p
      total += n;
      // order-p elements fix a proper subspace
      CHECK(r.npc_at(p, make_model(name).group.module().dim) == 0);
    }
    CHECK(total == r.total_nep);
  }
}

TEST_CASE("census is invariant under module-basis conjugation") {
  std::mt19937 rng(2024);
  for (const char* name : {"s3_f2", "sl23_f3"}) {
    Model m = make_model(name);
    const Module& mod = m.group.module();
    Mat h(mod.ground, mod.dim, mod.dim);
    do {
      for (std::uint32_t i = 0; i < mod.dim * mod.dim; ++i)
        h.at(i / mod.dim, i % mod.dim) = rng() % mod.ground->size();
    } while (h.det() == 0);
    Mat hi = h.inverse();
    std::vector<GroupElement> conj_gens;
    for (const GroupElement& g : m.group.generators())
      conj_gens.emplace_back(h.mul(g.matrix()).mul(hi));
    FiniteGroup conj =
        FiniteGroup::closure(mod, conj_gens, m.group.size() + 1);
    CensusReport a = census(m.group);
    CensusReport b = census(conj);
    CHECK(a.order == b.order);
    CHECK(a.nep == b.nep);
    CHECK(a.npc == b.npc);
  }
}

TEST_CASE("census JSON envelope") {
  CensusReport r = census(make_model("s3_f2").group);
  auto j = r.to_json();
  CHECK(j["order"] == "6");
  CHECK(j["primes"]["2"]["nep"] == "3");
  CHECK(j["primes"]["2"]["sp"] == "3");
  CHECK(j["primes"]["3"]["nep"] == "2");
  CHECK(j["primes"]["3"]["sp"] == "1");
  CHECK(j["primes"]["2"]["npc"]["1"] == "3");
  CHECK(j["total_nep"] == "5");
  // numeric key order
  std::string dumped = j.dump();
  CHECK(dumped.find("\"2\"") < dumped.find("\"3\""));
}

TEST_CASE("coset census in GL(2,3)") {
  Model sl = make_model("sl23_f3");
  std::vector<GroupElement> gens = sl.group.generators();
  gens.emplace_back(Mat::from_ints(sl.group.module().ground, 2, 2,
                                   {1, 0, 0, -1}));
  FiniteGroup gl = FiniteGroup::closure(sl.group.module(), gens, 64);
  REQUIRE(gl.size() == 48);
  // the nontrivial coset holds exactly the 12 reflections of GL(2,3)
  for (const GroupElement& a : gl.elements()) {
    if (sl.group.contains(a)) continue;
    CHECK(coset_census(a, sl.group, 2) == 12);
  }
}

TEST_CASE("coset census requires normalization") {
  Model q8 = make_model("q8_normalizer", {5, 0});
  // a generic GL(2,5) element does not normalize the scalar-free A4-part;
  // use E and an element outside N: everything in N normalizes E, so build
  // a non-normalizing element by hand.
  const Field* f = q8.group.module().ground;
  GroupElement shear(Mat::from_ints(f, 2, 2, {1, 1, 0, 1}));
  CHECK(!q8.group.contains(shear));
  CHECK_THROWS_AS(coset_census(shear, *q8.E, 2), std::invalid_argument);
}

TEST_CASE("coset census in Gamma(3^2): Frobenius coset") {
  FiniteGroup gamma = semilinear_group(3, 2);
  FiniteGroup gamma0 = semilinear_scalar_group(3, 2);
  GroupElement frob(Semilinear{gamma.module().ext, 1, 1});
  CHECK(coset_census(frob, gamma0, 2) == 4);  // q^n + 1 attained
  CHECK(coset_census(Coset{frob, &gamma0}, 2) == 4);
}

TEST_CASE("speciale2-type coset: S3 x <-I> in GL(2,3)") {
  const Field* f = Field::get(3, 1);
  Module mod{f, 2, nullptr};
  std::vector<GroupElement> s3gens{
      GroupElement(Mat::from_ints(f, 2, 2, {0, 1, 1, 0})),
      GroupElement(Mat::from_ints(f, 2, 2, {0, -1, 1, -1}))};
  FiniteGroup k = FiniteGroup::closure(mod, s3gens, 12);
  REQUIRE(k.size() == 6);
  GroupElement minus(Mat::from_ints(f, 2, 2, {-1, 0, 0, -1}));
  CHECK(!k.contains(minus));
  // the coset -K holds 4 involutions: -I itself and the three -tau
  CHECK(coset_census(minus, k, 2) == 4);
}

TEST_CASE("good/bad classification") {
  Model q8 = make_model("q8_normalizer", {13, 0});
  // central omega*I of order 3 centralizes everything: good, |C| = |E/Z| = 4
  const Field* f = q8.group.module().ground;
  std::uint32_t omega = 3;  // 3^3 = 27 = 1 mod 13
  REQUIRE(f->pow(omega, 3) == 1);
  GroupElement wI(Mat::from_ints(f, 2, 2, {omega, 0, 0, omega}));
  REQUIRE(q8.group.contains(wI));
  GoodBadTag tag = classify_good_bad(wI, *q8.E, *q8.Z);
  CHECK(tag.status == GoodBadStatus::good);
  CHECK(tag.centralizer_size == 4);

  // non-prime order is refused
  std::uint32_t i5 = 5;  // 5^2 = 25 = -1 mod 13
  REQUIRE(f->mul(i5, i5) == 12);
  GoodBadTag t4 = classify_good_bad(
      GroupElement(Mat::from_ints(f, 2, 2, {5, 0, 0, 8})), *q8.E, *q8.Z);
  CHECK(t4.status == GoodBadStatus::not_applicable);

  // order equal to the characteristic is refused
  Model d83 = make_model("d8_normalizer", {3, 0});
  const Field* f3 = d83.group.module().ground;
  GroupElement unip(Mat::from_ints(f3, 2, 2, {1, 1, 0, 1}));
  GoodBadTag t3 = classify_good_bad(unip, *d83.E, *d83.Z);
  CHECK(t3.status == GoodBadStatus::not_applicable);

  // x moving Z is refused: E = <sigma> = Z3 normal in S3, Z = E, x = tau
  Module mod{f3, 2, nullptr};
  GroupElement sigma(Mat::from_ints(f3, 2, 2, {0, -1, 1, -1}));
  GroupElement tau(Mat::from_ints(f3, 2, 2, {0, 1, 1, 0}));
  FiniteGroup e3 = FiniteGroup::closure(mod, {sigma}, 4);
  GoodBadTag tz = classify_good_bad(tau, e3, e3);
  CHECK(tz.status == GoodBadStatus::not_applicable);
}

TEST_CASE("good/bad tallies on q8_normalizer(5)") {
  Model m = make_model("q8_normalizer", {5, 0});
  unsigned good = 0, bad = 0;
  std::uint32_t cap = static_cast<std::uint32_t>(m.group.size()) + 1;
  for (const GroupElement& x : m.group.elements()) {
    if (m.E->contains(x)) continue;
    std::uint32_t o = x.order(cap);
    if (!is_small_prime(o) || o == 5) continue;
    GoodBadTag tag = classify_good_bad(x, *m.E, *m.Z);
    if (tag.status == GoodBadStatus::good) {
      ++good;
      if (o == 2) {
        // parity law: |C| is the square of an even integer
        CHECK(tag.centralizer_size == 4);
      }
    } else if (tag.status == GoodBadStatus::bad) {
      ++bad;
    }
  }
  // frozen brute-force tallies over N_GL(2,5)(Q8) \ Q8: the 8 order-3
  // elements rotate E/Z freely (good, |C|=1); the 6 involutions of
  // (Q8 o Z4) \ Q8 move E itself (bad, |C|=4)
  CHECK(good == 8);
  CHECK(bad == 6);
}

TEST_CASE("orbit scans") {
  // scalar groups: every nonzero vector is free
  Model g0 = make_model("gamma0", {3, 2});
  OrbitVerdict v0 = regular_orbit_scan(g0.group);
  CHECK(v0.has_regular_orbit);
  CHECK(v0.free_vector_count == 8);
  CHECK(v0.covered_count == 1);  // only the origin

  // S3 wr S2 on GF(2)^4: |G| = 72 > 16 = |V|
  OrbitVerdict vw = regular_orbit_scan(make_model("s3_wr_s2").group);
  CHECK(!vw.has_regular_orbit);
  CHECK(vw.free_vector_count == 0);
  CHECK(vw.covered_count == 16);

  // full Gamma(3^2) on GF(9): derived by brute force
  Model g = make_model("gamma", {3, 2});
  OrbitVerdict vg = regular_orbit_scan(g.group);
  CHECK(!vg.has_regular_orbit);
  CHECK(vg.covered_count == 9);
  CHECK(union_fixed_size(g.group) == 9);

  // trivial group: union over an empty set of prime-order subgroups
  Module mod{Field::get(3, 1), 2, nullptr};
  FiniteGroup trivial =
      FiniteGroup::closure(mod, {GroupElement(Mat::identity(mod.ground, 2))}, 2);
  CHECK(union_fixed_size(trivial) == 0);
  OrbitVerdict vt = regular_orbit_scan(trivial);
  CHECK(vt.has_regular_orbit);
  CHECK(vt.free_vector_count == 9);

  // single reflection on GF(3)^2: union is its fixed line
  FiniteGroup refl = FiniteGroup::closure(
      mod, {GroupElement(Mat::from_ints(mod.ground, 2, 2, {1, 0, 0, -1}))}, 4);
  CHECK(union_fixed_size(refl) == 3);

  // S3 on GF(2)^2: all four vectors covered
  Model s3 = make_model("s3_f2");
  CHECK(union_fixed_size(s3.group) == 4);
  CHECK(!regular_orbit_scan(s3.group).has_regular_orbit);
}

TEST_CASE("orbit scan agrees with the per-vector oracle") {
  for (const char* name : {"s3_f2", "sl23_f3", "s3_wr_s2"}) {
    Model m = make_model(name);
    CHECK(regular_orbit_scan(m.group).free_vector_count ==
          free_count_oracle(m.group));
  }
  Model g = make_model("gamma", {3, 2});
  CHECK(regular_orbit_scan(g.group).free_vector_count ==
        free_count_oracle(g.group));
}

TEST_CASE("adding generators never increases the free count") {
  Model small = make_model("gamma0", {3, 2});
  Model big = make_model("gamma", {3, 2});
  CHECK(regular_orbit_scan(big.group).free_vector_count <=
        regular_orbit_scan(small.group).free_vector_count);
}

TEST_CASE("fixed-space law in the D8 model") {
  // every order-2 x in E \ Z fixes exactly a line: |C_V(x)| = q
  Model m = make_model("d8_normalizer", {7, 0});
  unsigned checked = 0;
  for (const GroupElement& x : m.E->elements()) {
    if (m.Z->contains(x)) continue;
    if (x.order(16) != 2) continue;
    ++checked;
    CHECK(fixed_space(x.matrix()).dimension == 1);
  }
  CHECK(checked == 4);
}

TEST_CASE("model registry basics") {
  Model q8 = make_model("q8_normalizer", {5, 0});
  CHECK(q8.group.size() == 96);
  CHECK(q8.E->size() == 8);
  CHECK(q8.Z->size() == 2);
  // E/Z is elementary abelian of order 4: squares land in Z
  for (const GroupElement& e : q8.E->elements())
    CHECK(q8.Z->contains(e.mul(e)));

  Model z4 = make_model("q8_central_z4", {5, 0});
  CHECK(z4.group.size() == 16);
  CHECK(center(z4.group).size() == 4);

  // scan-derived orders: |N(D8)| = 8(q-1) over GF(q)
  CHECK(make_model("d8_normalizer", {3, 0}).group.size() == 16);
  CHECK(make_model("d8_normalizer", {7, 0}).group.size() == 48);

  Model e27 = make_model("e27_normalizer", {7, 0});
  CHECK(e27.group.size() == 1296);  // |ZE| * |Sp(2,3)| = 54 * 24
  CHECK(e27.E->size() == 27);
  CHECK(e27.Z->size() == 3);
  CHECK(center(*e27.E).size() == 3);
  for (const GroupElement& e : e27.E->elements())
    CHECK((e.is_identity() || e.order(30) == 3));  // exponent 3

  // the extraspecial coset bound NEP_2(alpha E) <= p^(n+1) = 9 is attained
  // by the involutions inverting E/Z pointwise
  std::uint64_t worst = 0;
  for (const GroupElement& a : e27.group.elements()) {
    if (e27.E->contains(a) || a.order(2000) != 2) continue;
    worst = std::max(worst, coset_census(a, *e27.E, 2));
  }
  CHECK(worst == 9);

  CHECK_THROWS_AS(make_model("nonexistent"), std::invalid_argument);
  CHECK_THROWS_AS(make_model("q8_normalizer", {7, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_model("e27_normalizer", {13, 0}),
                  std::invalid_argument);
}

TEST_CASE("subgroup sweeps match the small symplectic tables") {
  SweepResult s22 = sp_subgroup_sweep(2, 2);
  CHECK(s22.entries.size() == 6);  // subgroup count of S3
  CHECK(s22.max_order == 6);
  CHECK(s22.max_nep[2] == 3);
  CHECK(s22.max_nep[3] == 2);
  CHECK(s22.max_npc[2][1] == 3);

  SweepResult s23 = sp_subgroup_sweep(2, 3);
  CHECK(s23.entries.size() == 15);  // subgroup count of SL(2,3)
  CHECK(s23.max_order == 24);
  CHECK(s23.max_nep[2] == 1);
  CHECK(s23.max_nep[3] == 8);
}

TEST_CASE("group order bound dominates constructed normalizers") {
  // dim(W) * |A/F| * e^2 * (|W|-1) with dim W = 1, |A/F| <= 6, e = 2
  for (std::uint32_t q : {5u, 13u}) {
    Model m = make_model("q8_normalizer", {q, 0});
    BigInt bound = BigInt(1) * 6 * 4 * (q - 1);
    CHECK(BigInt(static_cast<unsigned long>(m.group.size())) <= bound);
  }
  for (std::uint32_t q : {3u, 7u, 11u}) {
    Model m = make_model("d8_normalizer", {q, 0});
    BigInt bound = BigInt(1) * 6 * 4 * (q - 1);
    CHECK(BigInt(static_cast<unsigned long>(m.group.size())) <= bound);
  }
}
