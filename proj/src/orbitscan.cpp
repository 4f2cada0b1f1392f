#include "orbitcensus/orbitscan.hpp"

#include <stdexcept>

namespace orbitcensus {

nlohmann::ordered_json OrbitVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["has_regular_orbit"] = has_regular_orbit;
  if (witness)
    j["witness"] = *witness;
  else
    j["witness"] = nullptr;
  j["free_vector_count"] = to_decimal(free_vector_count);
  j["covered_count"] = to_decimal(covered_count);
  return j;
}

namespace {

// vector <-> integer code with digits base q
std::uint64_t encode_vec(const std::vector<std::uint32_t>& v,
                         std::uint64_t q) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * q + v[i];
  return code;
}

struct Scan {
  std::vector<bool> covered;
  std::uint64_t total;
};

Scan run_scan(const FiniteGroup& group, std::uint64_t budget) {
  const Module& mod = group.module();
  std::uint64_t q = mod.ground->size();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < mod.dim; ++i) {
    total *= q;
    if (total > budget) throw std::runtime_error("orbit scan: budget exceeded");
  }
  Scan scan;
  scan.total = total;
  scan.covered.assign(total, false);
  const Field& F = *mod.ground;

  std::uint32_t order_cap = static_cast<std::uint32_t>(group.size()) + 1;
  for (const GroupElement& g : group.elements()) {
    std::uint32_t o = g.order(order_cap);
    if (o < 2 || !is_small_prime(o)) continue;
    Mat m = g.matrix_form(mod);
    FixedSpace fs = fixed_space(m);
    // enumerate the whole fixed subspace from its basis
    std::uint64_t combos = 1;
    for (std::uint32_t i = 0; i < fs.dimension; ++i) combos *= q;
    std::vector<std::uint32_t> v(mod.dim, 0);
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::fill(v.begin(), v.end(), 0);
      std::uint64_t rest = c;
      for (std::uint32_t b = 0; b < fs.dimension; ++b) {
        std::uint32_t coef = static_cast<std::uint32_t>(rest % q);
        rest /= q;
        if (coef == 0) continue;
        for (std::uint32_t j = 0; j < mod.dim; ++j)
          v[j] = F.add(v[j], F.mul(coef, fs.basis[b][j]));
      }
      scan.covered[encode_vec(v, q)] = true;
    }
  }
  return scan;
}

std::vector<std::uint32_t> decode_vec(std::uint64_t code, std::uint64_t q,
                                      std::uint32_t dim) {
  std::vector<std::uint32_t> v(dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint32_t>(code % q);
    code /= q;
  }
  return v;
}

}  // namespace

OrbitVerdict regular_orbit_scan(const FiniteGroup& group,
                                std::uint64_t budget) {
  Scan scan = run_scan(group, budget);
  OrbitVerdict verdict;
  std::uint64_t covered = 0;
  std::optional<std::uint64_t> first_free;
  for (std::uint64_t i = 0; i < scan.total; ++i) {
    if (scan.covered[i])
      ++covered;
    else if (!first_free)
      first_free = i;
  }
  verdict.covered_count = BigInt(static_cast<unsigned long>(covered));
  verdict.free_vector_count =
      BigInt(static_cast<unsigned long>(scan.total - covered));
  verdict.has_regular_orbit = first_free.has_value();
  if (first_free)
    verdict.witness = decode_vec(*first_free, group.module().ground->size(),
                                 group.module().dim);
  return verdict;
}

BigInt union_fixed_size(const FiniteGroup& group, std::uint64_t budget) {
  return regular_orbit_scan(group, budget).covered_count;
}

}  // namespace orbitcensus
