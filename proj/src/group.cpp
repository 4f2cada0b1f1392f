#include "orbitcensus/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace orbitcensus {

BigInt Module::vector_count() const {
  return bigint_pow(BigInt(ground->size()), dim);
}

GroupElement GroupElement::identity(const Module& mod) {
  if (mod.ext) return GroupElement(Semilinear{mod.ext, 1, 0});
  return GroupElement(Mat::identity(mod.ground, mod.dim));
}

GroupElement GroupElement::mul(const GroupElement& o) const {
  if (is_matrix() != o.is_matrix())
    throw std::invalid_argument("GroupElement::mul: mixed element kinds");
  if (is_matrix()) return GroupElement(matrix().mul(o.matrix()));
  const Semilinear& x = semilinear();
  const Semilinear& y = o.semilinear();
  if (x.ext != y.ext)
    throw std::invalid_argument("GroupElement::mul: mixed modules");
  const Field& F = *x.ext;
  std::uint32_t m = F.degree();
  std::uint64_t rpow = 1;
  for (std::uint32_t t = 0; t < x.i; ++t) rpow *= F.characteristic();
  Semilinear z;
  z.ext = x.ext;
  z.a = F.mul(x.a, F.pow(y.a, rpow));
  z.i = (x.i + y.i) % m;
  return GroupElement(z);
}

GroupElement GroupElement::inverse() const {
  if (is_matrix()) return GroupElement(matrix().inverse());
  const Semilinear& x = semilinear();
  const Field& F = *x.ext;
  std::uint32_t m = F.degree();
  std::uint32_t j = (m - x.i) % m;
  std::uint64_t rpow = 1;
  for (std::uint32_t t = 0; t < j; ++t) rpow *= F.characteristic();
  Semilinear z;
  z.ext = x.ext;
  z.a = F.pow(F.inv(x.a), rpow);
  z.i = j;
  return GroupElement(z);
}

bool GroupElement::is_identity() const {
  if (is_matrix()) return matrix().is_identity();
  const Semilinear& x = semilinear();
  return x.a == 1 && x.i == 0;
}

Mat GroupElement::matrix_form(const Module& mod) const {
  if (is_matrix()) return matrix();
  const Semilinear& x = semilinear();
  const Field& E = *x.ext;
  std::uint32_t p = E.characteristic();
  std::uint32_t m = E.degree();
  std::uint64_t rpow = 1;
  for (std::uint32_t t = 0; t < x.i; ++t) rpow *= p;
  Mat g(mod.ground, m, m);
  std::uint32_t basis = 1;  // code of x^j
  std::vector<std::uint32_t> powp(m);
  powp[0] = 1;
  for (std::uint32_t i = 1; i < m; ++i) powp[i] = powp[i - 1] * p;
  for (std::uint32_t j = 0; j < m; ++j) {
    std::uint32_t img = E.mul(x.a, E.pow(basis, rpow));
    for (std::uint32_t i = 0; i < m; ++i) g.at(i, j) = img / powp[i] % p;
    basis = basis * p;  // code of x^(j+1): still a pure power for j+1 < m
  }
  return g;
}

std::uint32_t GroupElement::order(std::uint32_t cap) const {
  if (order_cache_ != 0) return order_cache_;
  GroupElement g = *this;
  for (std::uint32_t n = 1; n <= cap; ++n) {
    if (g.is_identity()) {
      order_cache_ = n;
      return n;
    }
    g = g.mul(*this);
  }
  throw std::runtime_error("GroupElement::order: cap exceeded");
}

void GroupElement::encode_into(std::string& out) const {
  if (is_matrix()) {
    out.push_back('M');
    matrix().encode_into(out);
  } else {
    const Semilinear& x = semilinear();
    out.push_back('S');
    for (int b = 0; b < 4; ++b)
      out.push_back(static_cast<char>((x.a >> (8 * b)) & 0xff));
    out.push_back(static_cast<char>(x.i & 0xff));
  }
}

std::string GroupElement::key() const {
  std::string s;
  encode_into(s);
  return s;
}

std::string GroupElement::to_string() const {
  if (is_matrix()) return matrix().to_string();
  const Semilinear& x = semilinear();
  return "(a=" + x.ext->to_string(x.a) + ", frob^" + std::to_string(x.i) + ")";
}

bool GroupElement::operator==(const GroupElement& o) const {
  if (is_matrix() != o.is_matrix()) return false;
  if (is_matrix()) return matrix() == o.matrix();
  const Semilinear& x = semilinear();
  const Semilinear& y = o.semilinear();
  return x.ext == y.ext && x.a == y.a && x.i == y.i;
}

void FiniteGroup::build_index() {
  std::sort(elems_.begin(), elems_.end(),
            [](const GroupElement& a, const GroupElement& b) {
              return a.key() < b.key();
            });
  index_.clear();
  index_.reserve(elems_.size() * 2);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    index_.emplace(elems_[i].key(), static_cast<std::uint32_t>(i));
}

FiniteGroup FiniteGroup::closure(Module mod, std::vector<GroupElement> gens,
                                 std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("closure: cap must be >= 1");
  for (const GroupElement& g : gens) {
    if (g.is_matrix()) {
      if (mod.ext || g.matrix().field() != mod.ground ||
          g.matrix().rows() != mod.dim || g.matrix().cols() != mod.dim)
        throw std::invalid_argument("closure: generator off-module");
      if (g.matrix().det() == 0)
        throw std::invalid_argument("closure: singular generator");
    } else {
      if (!mod.ext || g.semilinear().ext != mod.ext)
        throw std::invalid_argument("closure: generator off-module");
      if (g.semilinear().a == 0)
        throw std::invalid_argument("closure: singular generator");
    }
  }
  FiniteGroup G;
  G.mod_ = mod;
  G.gens_ = gens;
  std::unordered_map<std::string, std::uint32_t> seen;
  std::deque<GroupElement> todo;
  GroupElement id = GroupElement::identity(mod);
  seen.emplace(id.key(), 0);
  G.elems_.push_back(id);
  todo.push_back(id);
  while (!todo.empty()) {
    GroupElement cur = todo.front();
    todo.pop_front();
    for (const GroupElement& g : gens) {
      GroupElement next = cur.mul(g);
      std::string k = next.key();
      if (seen.emplace(std::move(k), 0).second) {
        if (G.elems_.size() + 1 > cap)
          throw std::runtime_error("closure: cap exceeded");
        G.elems_.push_back(next);
        todo.push_back(std::move(next));
      }
    }
  }
  G.build_index();
  return G;
}

FiniteGroup FiniteGroup::from_element_set(Module mod,
                                          std::vector<GroupElement> gens,
                                          std::vector<GroupElement> elems) {
  FiniteGroup G;
  G.mod_ = mod;
  G.gens_ = std::move(gens);
  G.elems_ = std::move(elems);
  G.build_index();
  // spot-verify closure: every elem * gen stays inside
  for (const GroupElement& g : G.gens_)
    for (const GroupElement& e : G.elems_)
      if (!G.contains(e.mul(g)))
        throw std::invalid_argument("from_element_set: set not closed");
  return G;
}

bool FiniteGroup::contains(const GroupElement& g) const {
  return index_.count(g.key()) != 0;
}

FiniteGroup wreath(const FiniteGroup& base, const std::vector<Perm>& top_gens,
                   std::size_t cap) {
  if (top_gens.empty()) throw std::invalid_argument("wreath: empty top group");
  std::uint32_t n = static_cast<std::uint32_t>(top_gens[0].size());
  for (const Perm& s : top_gens)
    if (s.size() != n) throw std::invalid_argument("wreath: degree mismatch");
  const Module& bm = base.module();
  if (bm.ext) throw std::invalid_argument("wreath: base must be a matrix group");
  std::uint32_t d = bm.dim;
  Module mod{bm.ground, d * n, nullptr};

  // orbit representatives of the top group on blocks
  std::vector<std::uint32_t> orbit_rep;
  std::vector<bool> seen(n, false);
  for (std::uint32_t s0 = 0; s0 < n; ++s0) {
    if (seen[s0]) continue;
    orbit_rep.push_back(s0);
    std::deque<std::uint32_t> q{s0};
    seen[s0] = true;
    while (!q.empty()) {
      std::uint32_t x = q.front();
      q.pop_front();
      for (const Perm& s : top_gens)
        if (!seen[s[x]]) {
          seen[s[x]] = true;
          q.push_back(s[x]);
        }
    }
  }

  std::vector<GroupElement> gens;
  for (std::uint32_t blk : orbit_rep) {
    for (const GroupElement& h : base.generators()) {
      Mat big = Mat::identity(mod.ground, mod.dim);
      const Mat& hm = h.matrix();
      for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c)
          big.at(blk * d + r, blk * d + c) = hm.at(r, c);
      gens.emplace_back(std::move(big));
    }
  }
  for (const Perm& s : top_gens) {
    Mat big(mod.ground, mod.dim, mod.dim);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t r = 0; r < d; ++r) big.at(s[i] * d + r, i * d + r) = 1;
    gens.emplace_back(std::move(big));
  }
  return FiniteGroup::closure(mod, std::move(gens), cap);
}

std::uint32_t primitive_element(const Field* f) {
  std::uint32_t q = f->size();
  std::uint64_t n = q - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);
  for (std::uint32_t a = 1; a < q; ++a) {
    bool ok = true;
    for (std::uint64_t p : primes)
      if (f->pow(a, n / p) == 1) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  throw std::logic_error("primitive_element: none found");
}

namespace {

Module gamma_module(std::uint32_t r, std::uint32_t m) {
  if (!is_small_prime(r))
    throw std::invalid_argument("semilinear_group: r must be prime");
  const Field* ext = Field::get(r, m);
  const Field* ground = Field::get(r, 1);
  return Module{ground, m, ext};
}

}  // namespace

FiniteGroup semilinear_group(std::uint32_t r, std::uint32_t m) {
  Module mod = gamma_module(r, m);
  std::vector<GroupElement> gens;
  gens.emplace_back(Semilinear{mod.ext, primitive_element(mod.ext), 0});
  if (m > 1) gens.emplace_back(Semilinear{mod.ext, 1, 1});
  std::size_t cap =
      static_cast<std::size_t>(mod.ext->size() - 1) * m + 1;
  return FiniteGroup::closure(mod, std::move(gens), cap);
}

FiniteGroup semilinear_scalar_group(std::uint32_t r, std::uint32_t m) {
  Module mod = gamma_module(r, m);
  std::vector<GroupElement> gens;
  gens.emplace_back(Semilinear{mod.ext, primitive_element(mod.ext), 0});
  return FiniteGroup::closure(mod, std::move(gens), mod.ext->size());
}

std::vector<GroupElement> centralizer(
    const FiniteGroup& group, const std::vector<GroupElement>& subset) {
  std::vector<GroupElement> out;
  for (const GroupElement& g : group.elements()) {
    bool commutes = true;
    for (const GroupElement& s : subset)
      if (!(g.mul(s) == s.mul(g))) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(g);
  }
  return out;
}

std::vector<GroupElement> center(const FiniteGroup& group) {
  return centralizer(group, group.elements());
}

bool normal_test(const FiniteGroup& group,
                 const std::vector<GroupElement>& subset) {
  std::set<std::string> keys;
  for (const GroupElement& s : subset) keys.insert(s.key());
  for (const GroupElement& g : group.generators()) {
    GroupElement gi = g.inverse();
    for (const GroupElement& s : subset)
      if (!keys.count(g.mul(s).mul(gi).key())) return false;
  }
  return true;
}

}  // namespace orbitcensus
