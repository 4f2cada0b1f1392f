#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "orbitcensus/group.hpp"

#include "json.hpp"

namespace orbitcensus {

/// Element-order and fixed-space statistics of a fully enumerated group:
/// NEP_p counts elements of order exactly p, SP_p = NEP_p / (p-1) counts
/// the order-p subgroups, and npc[p][i] counts order-p elements whose
/// fixed space on the module has dimension i. Dimensions are over the
/// module's ground field as constructed.
struct CensusReport {
  BigInt order = 0;
  std::map<std::uint32_t, std::uint64_t> nep;                 // p -> count
  std::map<std::uint32_t, std::map<std::uint32_t, std::uint64_t>> npc;
  std::uint64_t total_nep = 0;

  std::uint64_t nep_p(std::uint32_t p) const {
    auto it = nep.find(p);
    return it == nep.end() ? 0 : it->second;
  }
  std::uint64_t sp_p(std::uint32_t p) const { return nep_p(p) / (p - 1); }
  std::uint64_t npc_at(std::uint32_t p, std::uint32_t i) const;

  nlohmann::ordered_json to_json() const;
};

/// Exact census by scanning every element; parallel over the element list.
CensusReport census(const FiniteGroup& group);

/// Number of order-p elements in the coset x*H. x must normalize H.
std::uint64_t coset_census(const GroupElement& x, const FiniteGroup& H,
                           std::uint32_t p);
std::uint64_t coset_census(const Coset& coset, std::uint32_t p);

enum class GoodBadStatus { good, bad, not_applicable };

struct GoodBadTag {
  GoodBadStatus status = GoodBadStatus::not_applicable;
  std::uint64_t centralizer_size = 0;  // |C_{E/Z}(x)| when applicable
  std::string reason;                  // set when not_applicable
};

/// Good/bad classification of a prime-order x acting on E/Z: x must
/// centralize Z and have order coprime to the module characteristic;
/// good means x centralizes the full preimage C of C_{E/Z}(x).
GoodBadTag classify_good_bad(const GroupElement& x, const FiniteGroup& E,
                             const FiniteGroup& Z);

}  // namespace orbitcensus
