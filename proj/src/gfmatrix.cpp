#include "wobetti/gfmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace wobetti {

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), p_(field.p), data_(rows * cols, 0) {
  if (p_ < 2) throw std::invalid_argument("matrix modulus must be >= 2");
}

void GfMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  std::int64_t v = value % static_cast<std::int64_t>(p_);
  if (v < 0) v += p_;
  data_[r * cols_ + c] = static_cast<std::uint32_t>(v);
}

bool GfMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint32_t v) { return v == 0; });
}

std::size_t GfMatrix::rank(const gf::RowKernel& kernel) const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint32_t> m = data_;
  auto row = [&](std::size_t r) { return m.data() + r * cols_; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && row(pivot)[col] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(row(pivot), row(pivot) + cols_, row(rank));
    }
    const std::size_t tail = cols_ - col;
    std::uint32_t pv = row(rank)[col];
    if (pv != 1) {
      kernel.scale(row(rank) + col, mod_inverse(pv, p_), p_, tail);
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint32_t c = row(r)[col];
      if (c == 0) continue;
      kernel.axpy(row(r) + col, row(rank) + col, p_ - c, p_, tail);
    }
    ++rank;
  }
  return rank;
}

GfMatrix GfMatrix::multiply(const GfMatrix& a, const GfMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) {
    throw std::invalid_argument("incompatible matrices");
  }
  GfMatrix out(a.rows_, b.cols_, FieldSpec{a.p_});
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::uint64_t aik = a.get(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        std::uint64_t v = out.get(i, j) + aik * b.get(k, j) % a.p_;
        out.data_[i * out.cols_ + j] = static_cast<std::uint32_t>(v % a.p_);
      }
    }
  }
  return out;
}

}  // namespace wobetti
