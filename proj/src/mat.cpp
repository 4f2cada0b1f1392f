#include "orbitcensus/mat.hpp"

#include <stdexcept>

namespace orbitcensus {

Mat Mat::identity(const Field* f, std::uint32_t n) {
  Mat m(f, n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_ints(const Field* f, std::uint32_t rows, std::uint32_t cols,
                   const std::vector<std::int64_t>& entries) {
  if (entries.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("Mat::from_ints: entry count mismatch");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.a_[i] = f->from_int(entries[i]);
  return m;
}

Mat Mat::mul(const Mat& o) const {
  if (field_ != o.field_ || cols_ != o.rows_)
    throw std::invalid_argument("Mat::mul: shape/field mismatch");
  Mat r(field_, rows_, o.cols_);
  const Field& F = *field_;
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t k = 0; k < cols_; ++k) {
      std::uint32_t aik = at(i, k);
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < o.cols_; ++j) {
        std::uint32_t prod = F.mul(aik, o.at(k, j));
        r.at(i, j) = F.add(r.at(i, j), prod);
      }
    }
  return r;
}

std::vector<std::uint32_t> Mat::apply(
    const std::vector<std::uint32_t>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat::apply: dim");
  std::vector<std::uint32_t> r(rows_, 0);
  const Field& F = *field_;
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0)
        r[i] = F.add(r[i], F.mul(at(i, j), v[j]));
  return r;
}

namespace {

// Gaussian elimination to row echelon form; returns rank. If track is
// non-null it receives the same row operations (used for inversion).
std::uint32_t echelon(Mat& m, Mat* track) {
  const Field& F = *m.field();
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::uint32_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::uint32_t j = 0; j < m.cols(); ++j)
      std::swap(m.at(rank, j), m.at(pivot, j));
    if (track)
      for (std::uint32_t j = 0; j < track->cols(); ++j)
        std::swap(track->at(rank, j), track->at(pivot, j));
    std::uint32_t inv = F.inv(m.at(rank, col));
    for (std::uint32_t j = 0; j < m.cols(); ++j)
      m.at(rank, j) = F.mul(m.at(rank, j), inv);
    if (track)
      for (std::uint32_t j = 0; j < track->cols(); ++j)
        track->at(rank, j) = F.mul(track->at(rank, j), inv);
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      std::uint32_t c = m.at(i, col);
      for (std::uint32_t j = 0; j < m.cols(); ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(rank, j)));
      if (track)
        for (std::uint32_t j = 0; j < track->cols(); ++j)
          track->at(i, j) = F.sub(track->at(i, j), F.mul(c, track->at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::uint32_t Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::det: not square");
  const Field& F = *field_;
  Mat m = *this;
  std::uint32_t d = 1;
  for (std::uint32_t col = 0; col < cols_; ++col) {
    std::uint32_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < cols_; ++j)
        std::swap(m.at(col, j), m.at(pivot, j));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(col, col));
    std::uint32_t inv = F.inv(m.at(col, col));
    for (std::uint32_t i = col + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      std::uint32_t c = F.mul(m.at(i, col), inv);
      for (std::uint32_t j = col; j < cols_; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(col, j)));
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: not square");
  Mat m = *this;
  Mat inv = identity(field_, rows_);
  std::uint32_t rank = echelon(m, &inv);
  if (rank != rows_) throw std::domain_error("Mat::inverse: singular");
  return inv;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::uint32_t Mat::rank() const {
  Mat m = *this;
  return echelon(m, nullptr);
}

std::vector<std::vector<std::uint32_t>> Mat::kernel() const {
  const Field& F = *field_;
  Mat m = *this;
  echelon(m, nullptr);
  // locate pivot columns
  std::vector<std::int32_t> pivot_row(cols_, -1);
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < cols_ && r < rows_; ++c) {
    if (m.at(r, c) != 0) {
      pivot_row[c] = static_cast<std::int32_t>(r);
      ++r;
    }
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::uint32_t c = 0; c < cols_; ++c) {
    if (pivot_row[c] >= 0) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[c] = 1;
    for (std::uint32_t c2 = 0; c2 < c; ++c2)
      if (pivot_row[c2] >= 0)
        v[c2] = F.neg(m.at(static_cast<std::uint32_t>(pivot_row[c2]), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

void Mat::encode_into(std::string& out) const {
  std::uint32_t q = field_->size();
  std::uint32_t bits = 1;
  while ((1u << bits) < q) ++bits;
  std::uint64_t acc = 0;
  std::uint32_t nacc = 0;
  for (std::uint32_t v : a_) {
    acc |= static_cast<std::uint64_t>(v) << nacc;
    nacc += bits;
    while (nacc >= 8) {
      out.push_back(static_cast<char>(acc & 0xff));
      acc >>= 8;
      nacc -= 8;
    }
  }
  if (nacc > 0) out.push_back(static_cast<char>(acc & 0xff));
}

std::string Mat::to_string() const {
  std::string s;
  for (std::uint32_t i = 0; i < rows_; ++i) {
    for (std::uint32_t j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += field_->to_string(at(i, j));
    }
    s += '\n';
  }
  return s;
}

FixedSpace fixed_space(const Mat& g) {
  if (g.rows() != g.cols())
    throw std::invalid_argument("fixed_space: not square");
  if (g.det() == 0) throw std::invalid_argument("fixed_space: singular");
  const Field& F = *g.field();
  Mat m = g;
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    m.at(i, i) = F.sub(m.at(i, i), 1);
  FixedSpace fs;
  fs.basis = m.kernel();
  fs.dimension = static_cast<std::uint32_t>(fs.basis.size());
  return fs;
}

std::uint32_t element_order(const Mat& g, std::uint32_t cap) {
  if (g.det() == 0) throw std::invalid_argument("element_order: singular");
  Mat p = g;
  for (std::uint32_t n = 1; n <= cap; ++n) {
    if (p.is_identity()) return n;
    p = p.mul(g);
  }
  throw std::runtime_error("element_order: cap exceeded");
}

}  // namespace orbitcensus
