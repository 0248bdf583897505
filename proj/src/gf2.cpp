#include "coalg/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace coalg::gf2 {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (n_ != o.n_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVector::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

long BitVector::first_set() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<long>(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

void BitMatrix::append_row(BitVector v) {
  if (rows_.empty() && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix row width mismatch");
  rows_.push_back(std::move(v));
}

namespace {

// Forward elimination to row echelon form. Returns the pivot column of each
// eliminated row, in elimination order.
std::vector<std::size_t> echelonize(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::size_t r = next_row;
    while (r < m.rows() && !m.get(r, c)) ++r;
    if (r == m.rows()) continue;
    std::swap(m.row(r), m.row(next_row));
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (k != next_row && m.get(k, c)) m.row(k) ^= m.row(next_row);
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(BitMatrix m) { return echelonize(m).size(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m_in) {
  BitMatrix m = m_in;
  const auto pivots = echelonize(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    // Row i has pivot pivots[i]; its reduced form reads off the dependence.
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (m.get(i, f)) v.set(pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitVector> solve(const BitMatrix& m_in, const BitVector& rhs) {
  if (rhs.size() != m_in.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  // Augment with the rhs as an extra column and eliminate.
  BitMatrix aug(m_in.rows(), m_in.cols() + 1);
  for (std::size_t r = 0; r < m_in.rows(); ++r) {
    aug.row(r) = BitVector(m_in.cols() + 1);
    for (std::size_t c = 0; c < m_in.cols(); ++c)
      if (m_in.get(r, c)) aug.set(r, c);
    if (rhs.get(r)) aug.set(r, m_in.cols());
  }
  const auto pivots = echelonize(aug);
  for (auto c : pivots)
    if (c == m_in.cols()) return std::nullopt;  // pivot in the augmented column
  BitVector x(m_in.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (aug.get(i, m_in.cols())) x.set(pivots[i]);
  return x;
}

bool RowSpace::add(BitVector v) {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace width mismatch");
  for (;;) {
    long p = v.first_set();
    if (p < 0) return false;
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      rows_.emplace(p, std::move(v));
      return true;
    }
    v ^= it->second;
  }
}

bool RowSpace::contains(BitVector v) const {
  for (;;) {
    long p = v.first_set();
    if (p < 0) return true;
    auto it = rows_.find(p);
    if (it == rows_.end()) return false;
    v ^= it->second;
  }
}

std::size_t quotient_dim(std::size_t ambient_dim, const RowSpace& span) {
  if (span.dim() > ambient_dim) throw std::logic_error("span larger than ambient space");
  return ambient_dim - span.dim();
}

}  // namespace coalg::gf2
