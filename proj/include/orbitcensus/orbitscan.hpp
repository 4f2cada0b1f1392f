#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitcensus/group.hpp"

#include "json.hpp"

namespace orbitcensus {

struct OrbitVerdict {
  bool has_regular_orbit = false;
  std::optional<std::vector<std::uint32_t>> witness;  // a free vector
  BigInt free_vector_count = 0;
  BigInt covered_count = 0;  // |union of C_V(P) over prime-order subgroups|

  nlohmann::ordered_json to_json() const;
};

/// Marks every vector lying in some C_V(x) for x of prime order; a vector
/// is free iff it is never marked (its stabilizer is then trivial). Exact;
/// requires |V| <= budget.
OrbitVerdict regular_orbit_scan(const FiniteGroup& group,
                                std::uint64_t budget = 1u << 24);

/// |union of C_V(P)| from the same scan (never inclusion-exclusion).
BigInt union_fixed_size(const FiniteGroup& group,
                        std::uint64_t budget = 1u << 24);

}  // namespace orbitcensus
