#include "orbitcensus/models.hpp"

#include <algorithm>
#include <cstring>
#include <mutex>
#include <set>
#include <stdexcept>

#include "orbitcensus/util.hpp"

namespace orbitcensus {

namespace {

Module matrix_module(std::uint32_t p, std::uint32_t dim) {
  return Module{Field::get(p, 1), dim, nullptr};
}

FiniteGroup s3_on_f2() {
  Module mod = matrix_module(2, 2);
  std::vector<GroupElement> gens{
      GroupElement(Mat::from_ints(mod.ground, 2, 2, {0, 1, 1, 0})),
      GroupElement(Mat::from_ints(mod.ground, 2, 2, {0, 1, 1, 1}))};
  return FiniteGroup::closure(mod, std::move(gens), 8);
}

FiniteGroup sl23_on_f3() {
  Module mod = matrix_module(3, 2);
  std::vector<GroupElement> gens{
      GroupElement(Mat::from_ints(mod.ground, 2, 2, {0, -1, 1, 0})),
      GroupElement(Mat::from_ints(mod.ground, 2, 2, {1, 1, 0, 1}))};
  return FiniteGroup::closure(mod, std::move(gens), 32);
}

std::uint32_t sqrt_minus_one(const Field* f) {
  for (std::uint32_t i = 2; i < f->size(); ++i)
    if (f->mul(i, i) == f->size() - 1) return i;
  throw std::invalid_argument("no square root of -1 in GF(q)");
}

std::vector<GroupElement> q8_gens(const Field* f) {
  std::uint32_t i = sqrt_minus_one(f);
  return {GroupElement(Mat::from_ints(f, 2, 2, {0, 1, -1, 0})),
          GroupElement(
              Mat::from_ints(f, 2, 2,
                             {static_cast<std::int64_t>(i), 0, 0,
                              -static_cast<std::int64_t>(i)}))};
}

std::vector<GroupElement> d8_gens(const Field* f) {
  return {GroupElement(Mat::from_ints(f, 2, 2, {0, 1, -1, 0})),
          GroupElement(Mat::from_ints(f, 2, 2, {1, 0, 0, -1}))};
}

std::vector<GroupElement> e27_gens(const Field* f) {
  std::uint32_t omega = 0;
  for (std::uint32_t a = 2; a < f->size(); ++a)
    if (f->pow(a, 3) == 1 && a != 1) {
      omega = a;
      break;
    }
  if (omega == 0) throw std::invalid_argument("GF(q) has no cube root of 1");
  std::uint32_t omega2 = f->mul(omega, omega);
  Mat d(f, 3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = omega;
  d.at(2, 2) = omega2;
  Mat s(f, 3, 3);
  s.at(1, 0) = 1;
  s.at(2, 1) = 1;
  s.at(0, 2) = 1;
  return {GroupElement(std::move(d)), GroupElement(std::move(s))};
}

FiniteGroup scalar_subgroup(const Module& mod) {
  std::uint32_t g = primitive_element(mod.ground);
  Mat m = Mat::identity(mod.ground, mod.dim);
  for (std::uint32_t i = 0; i < mod.dim; ++i) m.at(i, i) = g;
  return FiniteGroup::closure(mod, {GroupElement(std::move(m))},
                              mod.ground->size());
}

FiniteGroup minus_identity_group(const Module& mod) {
  Mat m(mod.ground, mod.dim, mod.dim);
  for (std::uint32_t i = 0; i < mod.dim; ++i)
    m.at(i, i) = mod.ground->from_int(-1);
  return FiniteGroup::closure(mod, {GroupElement(std::move(m))}, 4);
}

void require_q(const ModelParams& p, const char* model) {
  if (p.q == 0)
    throw std::invalid_argument(std::string(model) + ": needs --q");
}

}  // namespace

std::vector<Perm> perm_group_gens(const std::string& name) {
  if (name == "s2") return {{1, 0}};
  if (name == "s3") return {{1, 0, 2}, {1, 2, 0}};
  if (name == "s4") return {{1, 0, 2, 3}, {1, 2, 3, 0}};
  // F20 = <(1 2 3 4 5), (2 3 5 4)> on 5 points
  if (name == "f20") return {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}};
  throw std::invalid_argument("unknown permutation group: " + name);
}

const std::vector<ModelInfo>& model_registry() {
  static const std::vector<ModelInfo> registry = {
      {"s3_f2", false, "", "6"},
      {"sl23_f3", false, "", "24"},
      {"s3_wr_s2", false, "", "72"},
      {"s3_wr_s3", false, "", "1296"},
      {"s3_wr_s4", false, "", "31104"},
      {"s3_wr_f20", false, "", "155520"},
      {"sl23_wr_s2", false, "", "1152"},
      {"gamma", true, "--q prime --m deg", "(q^m-1)*m"},
      {"gamma0", true, "--q prime --m deg", "q^m-1"},
      {"q8_normalizer", true, "--q (1 mod 4, <= 13)", "24*(q-1)"},
      {"d8_normalizer", true, "--q (odd, <= 13)", "scan"},
      {"e27_normalizer", true, "--q 7", "scan"},
      {"q8_central_z4", true, "--q (1 mod 4, <= 13)", "16"},
  };
  return registry;
}

Model make_model(const std::string& name, const ModelParams& params) {
  Model model;
  model.name = name;

  auto wreath_model = [&](const FiniteGroup& base, const std::string& top,
                          std::size_t order) {
    model.group = wreath(base, perm_group_gens(top), order);
    model.expected_order = static_cast<unsigned long>(order);
  };

  if (name == "s3_f2") {
    model.group = s3_on_f2();
    model.expected_order = 6;
  } else if (name == "sl23_f3") {
    model.group = sl23_on_f3();
    model.expected_order = 24;
  } else if (name == "s3_wr_s2") {
    wreath_model(s3_on_f2(), "s2", 72);
  } else if (name == "s3_wr_s3") {
    wreath_model(s3_on_f2(), "s3", 1296);
  } else if (name == "s3_wr_s4") {
    wreath_model(s3_on_f2(), "s4", 31104);
  } else if (name == "s3_wr_f20") {
    wreath_model(s3_on_f2(), "f20", 155520);
  } else if (name == "sl23_wr_s2") {
    wreath_model(sl23_on_f3(), "s2", 1152);
  } else if (name == "gamma" || name == "gamma0") {
    require_q(params, name.c_str());
    std::uint32_t m = params.m == 0 ? 1 : params.m;
    if (name == "gamma") {
      model.group = semilinear_group(params.q, m);
      model.expected_order =
          (bigint_pow(BigInt(params.q), m) - 1) * m;
      model.U = semilinear_scalar_group(params.q, m);
    } else {
      model.group = semilinear_scalar_group(params.q, m);
      model.expected_order = bigint_pow(BigInt(params.q), m) - 1;
    }
    model.name = name + "(q=" + std::to_string(params.q) +
                 ",m=" + std::to_string(m) + ")";
    return model;
  } else if (name == "q8_normalizer" || name == "d8_normalizer") {
    require_q(params, name.c_str());
    if (params.q > 13 || params.q % 2 == 0)
      throw std::invalid_argument(name + ": q must be odd and <= 13");
    if (name == "q8_normalizer" && params.q % 4 != 1)
      throw std::invalid_argument(
          "q8_normalizer: q must be 1 mod 4 (faithful Q8 needs i)");
    Module mod = matrix_module(params.q, 2);
    std::vector<GroupElement> egens =
        name == "q8_normalizer" ? q8_gens(mod.ground) : d8_gens(mod.ground);
    model.E = FiniteGroup::closure(mod, egens, 16);
    model.Z = minus_identity_group(mod);
    model.U = scalar_subgroup(mod);
    model.group = gl_normalizer(mod, egens, 4096);
    if (name == "q8_normalizer")
      model.expected_order = 24 * (params.q - 1);
    model.name = name + "(q=" + std::to_string(params.q) + ")";
  } else if (name == "e27_normalizer") {
    std::uint32_t q = params.q == 0 ? 7 : params.q;
    if (q != 7)
      throw std::invalid_argument(
          "e27_normalizer: only q = 7 is within the GL(3,q) scan budget");
    Module mod = matrix_module(q, 3);
    std::vector<GroupElement> egens = e27_gens(mod.ground);
    model.E = FiniteGroup::closure(mod, egens, 32);
    model.Z = FiniteGroup::closure(
        mod, {GroupElement(Mat::from_ints(mod.ground, 3, 3,
                                          {2, 0, 0, 0, 2, 0, 0, 0, 2}))},
        4);
    model.U = scalar_subgroup(mod);
    model.group = gl_normalizer(mod, egens, 8192);
    model.name = name + "(q=" + std::to_string(q) + ")";
  } else if (name == "q8_central_z4") {
    require_q(params, name.c_str());
    if (params.q > 13 || params.q % 4 != 1)
      throw std::invalid_argument("q8_central_z4: q must be 1 mod 4, <= 13");
    Module mod = matrix_module(params.q, 2);
    std::vector<GroupElement> gens = q8_gens(mod.ground);
    model.E = FiniteGroup::closure(mod, gens, 16);
    std::uint32_t i = sqrt_minus_one(mod.ground);
    Mat scalar_i = Mat::identity(mod.ground, 2);
    scalar_i.at(0, 0) = scalar_i.at(1, 1) = i;
    gens.emplace_back(std::move(scalar_i));
    model.U = FiniteGroup::closure(mod, {gens.back()}, 4);
    model.Z = minus_identity_group(mod);
    model.group = FiniteGroup::closure(mod, gens, 32);
    model.expected_order = 16;
    model.name = name + "(q=" + std::to_string(params.q) + ")";
  } else {
    throw std::invalid_argument("unknown model: " + name);
  }

  if (model.expected_order != 0 &&
      BigInt(static_cast<unsigned long>(model.group.size())) !=
          model.expected_order)
    throw std::logic_error(model.name + ": constructed order " +
                           std::to_string(model.group.size()) +
                           " != expected " + to_decimal(model.expected_order));
  if (model.E && !normal_test(model.group, model.E->elements()))
    throw std::logic_error(model.name + ": E is not normal");
  if (model.Z && !normal_test(model.group, model.Z->elements()))
    throw std::logic_error(model.name + ": Z is not normal");
  return model;
}

std::vector<FiniteGroup> all_subgroups(const FiniteGroup& g) {
  auto signature = [](const FiniteGroup& h) {
    std::string sig;
    for (const GroupElement& e : h.elements()) sig += e.key();
    return sig;
  };
  std::vector<FiniteGroup> out;
  std::set<std::string> seen;
  FiniteGroup trivial =
      FiniteGroup::closure(g.module(), {}, 1);
  seen.insert(signature(trivial));
  out.push_back(trivial);
  std::size_t frontier_begin = 0;
  while (frontier_begin < out.size()) {
    std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const GroupElement& x : g.elements()) {
        if (out[i].contains(x)) continue;
        std::vector<GroupElement> gens = out[i].generators();
        gens.push_back(x);
        FiniteGroup h = FiniteGroup::closure(g.module(), std::move(gens),
                                             g.size());
        if (seen.insert(signature(h)).second) out.push_back(std::move(h));
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

SweepResult sp_subgroup_sweep(std::uint32_t n, std::uint32_t q) {
  if (n != 2 || (q != 2 && q != 3))
    throw std::invalid_argument("sp_subgroup_sweep: only (2,2) and (2,3)");
  FiniteGroup ambient = q == 2 ? s3_on_f2() : sl23_on_f3();
  SweepResult result;
  for (FiniteGroup& h : all_subgroups(ambient)) {
    SweepEntry entry{std::move(h), {}};
    entry.report = census(entry.subgroup);
    if (entry.report.order > result.max_order)
      result.max_order = entry.report.order;
    for (const auto& [p, c] : entry.report.nep)
      result.max_nep[p] = std::max(result.max_nep[p], c);
    for (const auto& [p, hist] : entry.report.npc)
      for (const auto& [dim, c] : hist)
        result.max_npc[p][dim] = std::max(result.max_npc[p][dim], c);
    result.entries.push_back(std::move(entry));
  }
  return result;
}

namespace {

// Raw fixed-size matrix helpers for the GL scan hot loop; entries are
// residues mod q, n <= 3.
struct RawOps {
  std::uint32_t q, n;
  std::vector<std::uint32_t> inv_table;

  explicit RawOps(std::uint32_t q_, std::uint32_t n_) : q(q_), n(n_) {
    inv_table.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b)
        if (a * b % q == 1) inv_table[a] = b;
  }

  std::uint32_t det(const std::uint32_t* a) const {
    if (n == 2) return (a[0] * a[3] % q + q - a[1] * a[2] % q) % q;
    std::uint64_t pos = static_cast<std::uint64_t>(a[0]) * a[4] % q * a[8] +
                        static_cast<std::uint64_t>(a[1]) * a[5] % q * a[6] +
                        static_cast<std::uint64_t>(a[2]) * a[3] % q * a[7];
    std::uint64_t neg = static_cast<std::uint64_t>(a[2]) * a[4] % q * a[6] +
                        static_cast<std::uint64_t>(a[0]) * a[5] % q * a[7] +
                        static_cast<std::uint64_t>(a[1]) * a[3] % q * a[8];
    return static_cast<std::uint32_t>((pos % q + q - neg % q) % q);
  }

  // inverse via adjugate; caller guarantees d = det(a) != 0
  void inverse(const std::uint32_t* a, std::uint32_t d,
               std::uint32_t* out) const {
    std::uint32_t dinv = inv_table[d];
    if (n == 2) {
      out[0] = a[3] * dinv % q;
      out[1] = (q - a[1] % q) % q * dinv % q;
      out[2] = (q - a[2] % q) % q * dinv % q;
      out[3] = a[0] * dinv % q;
      return;
    }
    auto cof = [&](int r1, int c1, int r2, int c2) {
      return (a[r1 * 3 + c1] * a[r2 * 3 + c2] % q + q -
              a[r1 * 3 + c2] * a[r2 * 3 + c1] % q) %
             q;
    };
    // adj[j][i] = cofactor(i, j)
    out[0] = cof(1, 1, 2, 2) * dinv % q;
    out[3] = (q - cof(1, 0, 2, 2) % q) % q * dinv % q;
    out[6] = cof(1, 0, 2, 1) * dinv % q;
    out[1] = (q - cof(0, 1, 2, 2) % q) % q * dinv % q;
    out[4] = cof(0, 0, 2, 2) * dinv % q;
    out[7] = (q - cof(0, 0, 2, 1) % q) % q * dinv % q;
    out[2] = cof(0, 1, 1, 2) * dinv % q;
    out[5] = (q - cof(0, 0, 1, 2) % q) % q * dinv % q;
    out[8] = cof(0, 0, 1, 1) * dinv % q;
  }

  void mul(const std::uint32_t* a, const std::uint32_t* b,
           std::uint32_t* out) const {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::uint32_t k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
        out[i * n + j] = static_cast<std::uint32_t>(s % q);
      }
  }

  std::uint64_t pack(const std::uint32_t* a) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = n * n; i-- > 0;) code = code * q + a[i];
    return code;
  }
};

}  // namespace

FiniteGroup gl_normalizer(const Module& mod,
                          const std::vector<GroupElement>& gens,
                          std::size_t cap) {
  if (mod.ext || mod.ground->degree() != 1 || mod.dim > 3)
    throw std::invalid_argument(
        "gl_normalizer: prime-field modules of dim <= 3 only");
  const std::uint32_t q = mod.ground->size();
  const std::uint32_t n = mod.dim;
  FiniteGroup E = FiniteGroup::closure(mod, gens, 256);

  RawOps ops(q, n);
  std::vector<std::uint64_t> ecodes;
  std::vector<std::vector<std::uint32_t>> egens_raw;
  for (const GroupElement& e : E.elements()) {
    std::vector<std::uint32_t> raw(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) raw[i * n + j] = e.matrix().at(i, j);
    ecodes.push_back(ops.pack(raw.data()));
  }
  std::sort(ecodes.begin(), ecodes.end());
  for (const GroupElement& g : E.generators()) {
    std::vector<std::uint32_t> raw(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) raw[i * n + j] = g.matrix().at(i, j);
    egens_raw.push_back(std::move(raw));
  }

  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) total *= q;

  unsigned workers = worker_count();
  std::vector<std::vector<std::uint64_t>> found(workers + 1);
  parallel_chunks(total, [&](std::size_t begin, std::size_t end, unsigned w) {
    std::uint32_t a[9], ginv[9], t1[9], t2[9];
    // odometer over matrix entries
    std::uint64_t rest = begin;
    for (std::uint32_t i = 0; i < n * n; ++i) {
      a[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    for (std::uint64_t code = begin; code < end; ++code) {
      std::uint32_t d = ops.det(a);
      if (d != 0) {
        ops.inverse(a, d, ginv);
        bool normalizes = true;
        for (const auto& x : egens_raw) {
          ops.mul(a, x.data(), t1);
          ops.mul(t1, ginv, t2);
          if (!std::binary_search(ecodes.begin(), ecodes.end(),
                                  ops.pack(t2))) {
            normalizes = false;
            break;
          }
        }
        if (normalizes) found[w].push_back(code);
      }
      // increment odometer
      for (std::uint32_t i = 0; i < n * n; ++i) {
        if (++a[i] < q) break;
        a[i] = 0;
      }
    }
  });

  std::vector<std::uint64_t> codes;
  for (const auto& part : found)
    codes.insert(codes.end(), part.begin(), part.end());
  if (codes.size() > cap)
    throw std::runtime_error("gl_normalizer: cap exceeded");

  std::vector<GroupElement> elems;
  for (std::uint64_t code : codes) {
    Mat m(mod.ground, n, n);
    std::uint64_t rest = code;
    for (std::uint32_t idx = 0; idx < n * n; ++idx) {
      m.at(idx / n, idx % n) = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    elems.emplace_back(std::move(m));
  }

  // Grow a small generating set until its closure covers everything the
  // scan found; the closure re-derives the normalizer independently.
  std::vector<GroupElement> small = gens;
  FiniteGroup N = FiniteGroup::closure(mod, small, cap);
  for (const GroupElement& e : elems) {
    if (N.contains(e)) continue;
    small.push_back(e);
    N = FiniteGroup::closure(mod, small, cap);
  }
  if (N.size() != elems.size())
    throw std::logic_error("gl_normalizer: closure disagrees with scan");
  return N;
}

}  // namespace orbitcensus
