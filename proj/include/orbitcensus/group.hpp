#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "orbitcensus/exactmath.hpp"
#include "orbitcensus/mat.hpp"

namespace orbitcensus {

/// The vector space a group acts on: dim-dimensional over the ground field.
/// Semilinear groups act on GF(r^m) viewed as an m-dimensional space over
/// GF(r); ext points at the extension field in that case.
struct Module {
  const Field* ground = nullptr;
  std::uint32_t dim = 0;
  const Field* ext = nullptr;  // null for plain matrix modules

  bool operator==(const Module& o) const {
    return ground == o.ground && dim == o.dim && ext == o.ext;
  }
  BigInt vector_count() const;
};

/// x |-> a * x^(r^i) on GF(r^m), a != 0.
struct Semilinear {
  const Field* ext = nullptr;
  std::uint32_t a = 1;
  std::uint32_t i = 0;
};

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(Mat m) : v_(std::move(m)) {}
  explicit GroupElement(Semilinear s) : v_(s) {}

  static GroupElement identity(const Module& mod);

  bool is_matrix() const { return std::holds_alternative<Mat>(v_); }
  const Mat& matrix() const { return std::get<Mat>(v_); }
  const Semilinear& semilinear() const { return std::get<Semilinear>(v_); }

  GroupElement mul(const GroupElement& o) const;
  GroupElement inverse() const;
  bool is_identity() const;

  /// Action as a matrix over the module's ground field (for semilinear
  /// elements this is the m x m matrix of x |-> a*x^(r^i) in the power
  /// basis 1, x, ..., x^(m-1)).
  Mat matrix_form(const Module& mod) const;

  /// Least n >= 1 with g^n = 1. Cached after the first call.
  std::uint32_t order(std::uint32_t cap = 1u << 20) const;

  void encode_into(std::string& out) const;
  std::string key() const;
  std::string to_string() const;

  bool operator==(const GroupElement& o) const;

 private:
  std::variant<Mat, Semilinear> v_;
  mutable std::uint32_t order_cache_ = 0;
};

/// A fully enumerated finite group of invertible transformations of a
/// module, with constant-time membership lookup. Immutable once built.
class FiniteGroup {
 public:
  /// Breadth-first closure of the generators under multiplication. Errors
  /// out (never truncates) once more than cap elements appear. The element
  /// order is canonical (sorted by encoding), so it does not depend on the
  /// generator order.
  static FiniteGroup closure(Module mod, std::vector<GroupElement> gens,
                             std::size_t cap);

  /// Wraps an already-closed element set (verified closed under product).
  static FiniteGroup from_element_set(Module mod,
                                      std::vector<GroupElement> gens,
                                      std::vector<GroupElement> elems);

  const Module& module() const { return mod_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const GroupElement& g) const;
  const GroupElement& element(std::size_t i) const { return elems_[i]; }

 private:
  Module mod_;
  std::vector<GroupElement> gens_;
  std::vector<GroupElement> elems_;
  std::unordered_map<std::string, std::uint32_t> index_;

  void build_index();
};

/// x * H for a subgroup H normalized by x.
struct Coset {
  GroupElement rep;
  const FiniteGroup* subgroup;
};

using Perm = std::vector<std::uint32_t>;  // images of 0..n-1

/// H wr S acting on F^(d*n) by block matrices: the base group is the
/// n-fold product of H in diagonal blocks, the top group permutes blocks.
FiniteGroup wreath(const FiniteGroup& base, const std::vector<Perm>& top_gens,
                   std::size_t cap);

/// Full semilinear group of GF(r^m) over GF(r): order (r^m - 1) * m.
FiniteGroup semilinear_group(std::uint32_t r, std::uint32_t m);

/// The scalar subgroup of the above: order r^m - 1.
FiniteGroup semilinear_scalar_group(std::uint32_t r, std::uint32_t m);

std::vector<GroupElement> centralizer(const FiniteGroup& group,
                                      const std::vector<GroupElement>& subset);
std::vector<GroupElement> center(const FiniteGroup& group);
bool normal_test(const FiniteGroup& group,
                 const std::vector<GroupElement>& subset);

/// A generating element of GF(q)^x (smallest code that works).
std::uint32_t primitive_element(const Field* f);

// Plain-text generator files: a header line `field p k / dim n`, then one
// matrix per blank-line-separated block, one row per line, entries as
// integers (extension-field entries as comma-separated coefficient tuples).
struct GeneratorFile {
  Module mod;
  std::vector<GroupElement> generators;
};
GeneratorFile load_generators(std::istream& in);
GeneratorFile load_generators_file(const std::string& path);
void save_generators(std::ostream& out, const Module& mod,
                     const std::vector<GroupElement>& gens);

}  // namespace orbitcensus
