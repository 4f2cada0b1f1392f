#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitcensus/gf.hpp"

namespace orbitcensus {

/// Dense matrix over a Field, row-major, entries stored as field codes.
class Mat {
 public:
  Mat() : field_(nullptr), rows_(0), cols_(0) {}
  Mat(const Field* f, std::uint32_t rows, std::uint32_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Mat identity(const Field* f, std::uint32_t n);
  static Mat from_ints(const Field* f, std::uint32_t rows, std::uint32_t cols,
                       const std::vector<std::int64_t>& entries);

  const Field* field() const { return field_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  std::uint32_t at(std::uint32_t r, std::uint32_t c) const {
    return a_[r * cols_ + c];
  }
  std::uint32_t& at(std::uint32_t r, std::uint32_t c) {
    return a_[r * cols_ + c];
  }

  Mat mul(const Mat& o) const;
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;
  std::uint32_t det() const;
  Mat inverse() const;          // throws on singular
  bool is_identity() const;
  Mat transpose() const;

  std::uint32_t rank() const;
  /// Basis of the right kernel, one vector per row of the result.
  std::vector<std::vector<std::uint32_t>> kernel() const;

  bool operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           a_ == o.a_;
  }

  /// Bit-packed canonical encoding of the entries (dims and field are fixed
  /// within a group, so they are not part of the key).
  void encode_into(std::string& out) const;

  std::string to_string() const;

 private:
  const Field* field_;
  std::uint32_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

struct FixedSpace {
  std::uint32_t dimension = 0;
  std::vector<std::vector<std::uint32_t>> basis;
};

/// ker(g - I) for square invertible g.
FixedSpace fixed_space(const Mat& g);

/// Least n >= 1 with g^n = I; throws if the order exceeds cap.
std::uint32_t element_order(const Mat& g, std::uint32_t cap);

}  // namespace orbitcensus
