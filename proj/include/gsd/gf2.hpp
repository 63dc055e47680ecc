#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "gsd/errors.hpp"
#include "gsd/rational.hpp"

namespace gsd {

// Dense bit vector; indices are 0-based.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : bits_(len, 0) {}

  std::size_t size() const { return bits_.size(); }
  bool get(std::size_t i) const { return bits_.at(i) != 0; }
  void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }

  bool all_zero() const {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }

  friend bool operator==(const BitVector& a, const BitVector& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

// Dense GF(2) matrix with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() : rows_(0), cols_(0), words_(0) {}
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_(cols == 0 ? 1 : (cols + 63) / 64), data_(rows * words_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    check(r, c);
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }

  void set(std::size_t r, std::size_t c, bool v) {
    check(r, c);
    std::uint64_t& w = data_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t(1) << (c % 64);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }

  void toggle(std::size_t r, std::size_t c) { set(r, c, !get(r, c)); }

  void xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) data_[dst * words_ + w] ^= data_[src * words_ + w];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w)
      std::swap(data_[a * words_ + w], data_[b * words_ + w]);
  }

  bool row_is_zero(std::size_t r) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (data_[r * words_ + w]) return false;
    return true;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  bool is_symmetric_zero_diagonal() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (get(r, r)) return false;
      for (std::size_t c = r + 1; c < cols_; ++c)
        if (get(r, c) != get(c, r)) return false;
    }
    return true;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error("bit matrix index out of range");
  }

  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> data_;
};

// GF(2) rank by Gaussian elimination on a working copy.
inline std::size_t rank(BitMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c)) m.xor_row(i, r);
    ++r;
  }
  return r;
}

struct MinRankResult {
  std::size_t rank = 0;
  BitVector witness_diagonal;
};

// Minimum of rank(A + D) over all 2^n binary diagonals D, exhaustively.
inline MinRankResult min_rank_f2(const BitMatrix& a, std::size_t limit = 20) {
  if (!a.is_symmetric_zero_diagonal()) throw Error("min_rank_f2 expects an adjacency matrix");
  const std::size_t n = a.rows();
  if (n > limit) throw SizeLimitExceeded("min_rank_f2", n, limit);

  MinRankResult best;
  best.rank = n + 1;
  for (std::uint64_t d = 0; d < (std::uint64_t(1) << n); ++d) {
    BitMatrix m = a;
    for (std::size_t i = 0; i < n; ++i)
      if ((d >> i) & 1u) m.set(i, i, true);
    const std::size_t r = rank(std::move(m));
    if (r < best.rank) {
      best.rank = r;
      best.witness_diagonal = BitVector(n);
      for (std::size_t i = 0; i < n; ++i) best.witness_diagonal.set(i, (d >> i) & 1u);
      if (r == 0) break;
    }
  }
  return best;
}

// Cut-rank of X in a graph: GF(2) rank of the X x (V \ X) biadjacency
// matrix. Works for any graph type exposing vertices() and has_edge().
template <typename GraphT>
std::size_t cut_rank(const GraphT& g, const std::set<int>& x) {
  std::vector<int> inside, outside;
  for (int v : g.vertices()) {
    if (x.count(v))
      inside.push_back(v);
    else
      outside.push_back(v);
  }
  if (inside.size() != x.size()) throw UnknownVertex(*x.begin());
  BitMatrix m(inside.size(), outside.size());
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = 0; j < outside.size(); ++j)
      if (g.has_edge(inside[i], outside[j])) m.set(i, j, true);
  return rank(std::move(m));
}

// Exact average of cut_rank over all 2^n subsets, as a fraction with
// denominator 2^n. Equals the average Schmidt-rank of the graph state.
template <typename GraphT>
Rational expected_cut_rank(const GraphT& g, std::size_t limit = 16) {
  const auto vset = g.vertices();
  std::vector<int> verts(vset.begin(), vset.end());
  const std::size_t n = verts.size();
  if (n > limit) throw SizeLimitExceeded("expected_cut_rank", n, limit);
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::set<int> x;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) x.insert(verts[i]);
    total += static_cast<std::int64_t>(cut_rank(g, x));
  }
  return Rational(total, std::int64_t(1) << n);
}

}  // namespace gsd
