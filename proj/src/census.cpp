#include "orbitcensus/census.hpp"

#include <stdexcept>

#include "orbitcensus/util.hpp"

namespace orbitcensus {

std::uint64_t CensusReport::npc_at(std::uint32_t p, std::uint32_t i) const {
  auto it = npc.find(p);
  if (it == npc.end()) return 0;
  auto jt = it->second.find(i);
  return jt == it->second.end() ? 0 : jt->second;
}

nlohmann::ordered_json CensusReport::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = to_decimal(order);
  nlohmann::ordered_json primes(nlohmann::ordered_json::value_t::object);
  for (const auto& [p, count] : nep) {
    nlohmann::ordered_json entry;
    entry["nep"] = std::to_string(count);
    entry["sp"] = std::to_string(count / (p - 1));
    nlohmann::ordered_json hist(nlohmann::ordered_json::value_t::object);
    auto it = npc.find(p);
    if (it != npc.end())
      for (const auto& [dim, c] : it->second)
        hist[std::to_string(dim)] = std::to_string(c);
    entry["npc"] = hist;
    primes[std::to_string(p)] = entry;
  }
  j["primes"] = primes;
  j["total_nep"] = std::to_string(total_nep);
  return j;
}

CensusReport census(const FiniteGroup& group) {
  const std::size_t n = group.size();
  unsigned workers = worker_count();
  std::vector<CensusReport> partial(std::max(1u, workers) + 1);
  std::uint32_t order_cap = static_cast<std::uint32_t>(n) + 1;

  parallel_chunks(n, [&](std::size_t begin, std::size_t end, unsigned w) {
    CensusReport& rep = partial[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const GroupElement& g = group.element(idx);
      std::uint32_t o = g.order(order_cap);
      if (o < 2 || !is_small_prime(o)) continue;
      rep.nep[o] += 1;
      Mat m = g.matrix_form(group.module());
      rep.npc[o][fixed_space(m).dimension] += 1;
    }
  });

  CensusReport total;
  total.order = BigInt(static_cast<unsigned long>(n));
  for (const CensusReport& rep : partial) {
    for (const auto& [p, c] : rep.nep) total.nep[p] += c;
    for (const auto& [p, hist] : rep.npc)
      for (const auto& [dim, c] : hist) total.npc[p][dim] += c;
  }
  for (const auto& [p, c] : total.nep) total.total_nep += c;
  return total;
}

std::uint64_t coset_census(const Coset& coset, std::uint32_t p) {
  return coset_census(coset.rep, *coset.subgroup, p);
}

std::uint64_t coset_census(const GroupElement& x, const FiniteGroup& H,
                           std::uint32_t p) {
  GroupElement xi = x.inverse();
  for (const GroupElement& h : H.generators())
    if (!H.contains(x.mul(h).mul(xi)))
      throw std::invalid_argument("coset_census: x does not normalize H");
  std::uint64_t count = 0;
  std::uint32_t cap = static_cast<std::uint32_t>(H.size()) * 2 + 2;
  for (const GroupElement& h : H.elements())
    if (x.mul(h).order(cap) == p) ++count;
  return count;
}

GoodBadTag classify_good_bad(const GroupElement& x, const FiniteGroup& E,
                             const FiniteGroup& Z) {
  GoodBadTag tag;
  std::uint32_t cap = 1u << 20;
  std::uint32_t o = x.order(cap);
  if (!is_small_prime(o)) {
    tag.reason = "x does not have prime order";
    return tag;
  }
  if (o == E.module().ground->characteristic()) {
    tag.reason = "order of x equals the module characteristic";
    return tag;
  }
  GroupElement xi = x.inverse();
  for (const GroupElement& z : Z.elements())
    if (!(x.mul(z).mul(xi) == z)) {
      tag.reason = "x does not centralize Z";
      return tag;
    }
  for (const GroupElement& z : Z.elements())
    if (!E.contains(z)) {
      tag.reason = "Z is not contained in E";
      return tag;
    }

  // C_{E/Z}(x): cosets eZ with x e x^-1 in eZ. Count cosets via canonical
  // representatives (smallest key in eZ).
  auto coset_key = [&](const GroupElement& e) {
    std::string best;
    for (const GroupElement& z : Z.elements()) {
      std::string k = e.mul(z).key();
      if (best.empty() || k < best) best = std::move(k);
    }
    return best;
  };
  std::map<std::string, bool> fixed_cosets;  // key -> all lifts commute
  std::vector<GroupElement> preimage;
  for (const GroupElement& e : E.elements()) {
    GroupElement conj = x.mul(e).mul(xi);
    // conj in eZ  <=>  e^-1 * conj in Z
    if (Z.contains(e.inverse().mul(conj))) {
      std::string key = coset_key(e);
      if (!fixed_cosets.count(key)) fixed_cosets[key] = true;
      preimage.push_back(e);
    }
  }
  tag.centralizer_size = fixed_cosets.size();
  tag.status = GoodBadStatus::good;
  for (const GroupElement& e : preimage)
    if (!(x.mul(e) == e.mul(x))) {
      tag.status = GoodBadStatus::bad;
      break;
    }
  return tag;
}

}  // namespace orbitcensus
