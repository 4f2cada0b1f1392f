#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitcensus/census.hpp"
#include "orbitcensus/group.hpp"

namespace orbitcensus {

/// A constructed group together with its designated subgroups where the
/// construction provides them (E the extraspecial layer, Z its center,
/// U a central cyclic subgroup).
struct Model {
  std::string name;
  FiniteGroup group;
  std::optional<FiniteGroup> E, Z, U;
  BigInt expected_order = 0;  // 0: order fixed by a frozen test instead
};

struct ModelParams {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
};

struct ModelInfo {
  std::string name;
  bool parameterized;
  std::string params_help;
  std::string expected_order;  // formula or number, for the listing
};

const std::vector<ModelInfo>& model_registry();

/// Builds a registry model. Names: s3_f2, sl23_f3, s3_wr_s2, s3_wr_s3,
/// s3_wr_s4, s3_wr_f20, sl23_wr_s2, gamma (q, m), gamma0 (q, m),
/// q8_normalizer (q = 1 mod 4, q <= 13), d8_normalizer (odd q <= 13),
/// e27_normalizer (q = 7), q8_central_z4 (q = 1 mod 4, q <= 13).
Model make_model(const std::string& name, const ModelParams& params = {});

/// Permutation generator sets for the wreath tops.
std::vector<Perm> perm_group_gens(const std::string& name);

/// All subgroups of the ambient symplectic group Sp(2,q) = SL(2,q) for
/// q in {2, 3}, each with its census on the natural module.
struct SweepEntry {
  FiniteGroup subgroup;
  CensusReport report;
};
struct SweepResult {
  std::vector<SweepEntry> entries;
  BigInt max_order = 0;
  std::map<std::uint32_t, std::uint64_t> max_nep;  // per prime
  std::map<std::uint32_t, std::map<std::uint32_t, std::uint64_t>> max_npc;
};
SweepResult sp_subgroup_sweep(std::uint32_t n, std::uint32_t q);

/// Every subgroup of a small group, by closure of incrementally extended
/// generating sets.
std::vector<FiniteGroup> all_subgroups(const FiniteGroup& g);

/// Normalizer of the subgroup generated by gens inside the full GL(n,q)
/// of the module, found by scanning GL(n,q). Parallel.
FiniteGroup gl_normalizer(const Module& mod,
                          const std::vector<GroupElement>& gens,
                          std::size_t cap);

}  // namespace orbitcensus
