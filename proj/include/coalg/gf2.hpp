#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace coalg::gf2 {

// Dense GF(2) vector, bit-packed into 64-bit words.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  bool any() const;
  // Index of the lowest set bit, or -1 if zero.
  long first_set() const;

  bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Row-major GF(2) matrix.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c) { rows_[r].set(c); }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  void append_row(BitVector v);

private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Rank via Gaussian elimination. Pivot selection is deterministic: columns are
// processed left to right and the first remaining row with a set bit wins, so
// identical input always takes the identical elimination path.
std::size_t rank(BitMatrix m);

// Basis of the right null space {x : m x = 0}. One basis vector per free
// column, emitted in ascending column order; each has a 1 in its free column
// and 0 in every other free column.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// Solves m x = rhs. Returns the particular solution with all free variables
// set to 0, or nullopt if the system is inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& rhs);

// Incrementally maintained row space in echelon form, keyed by pivot column.
// Used for span membership and quotient dimensions.
class RowSpace {
public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return rows_.size(); }

  // Absorbs v; returns true if v enlarged the span.
  bool add(BitVector v);
  bool contains(BitVector v) const;

private:
  std::size_t cols_;
  std::map<long, BitVector> rows_;
};

// dim(ambient / span); span must live in a space of the given dimension.
std::size_t quotient_dim(std::size_t ambient_dim, const RowSpace& span);

// C(n, k) mod 2 by Lucas; false for out-of-range arguments.
inline bool binom_odd(long n, long k) {
  if (k < 0 || n < 0 || k > n) return false;
  return (n & k) == k;
}

}  // namespace coalg::gf2
