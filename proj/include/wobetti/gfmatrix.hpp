#pragma once

#include <cstdint>
#include <vector>

#include "wobetti/field.hpp"
#include "wobetti/rowkernel.hpp"

namespace wobetti {

// Dense matrix over GF(p), row-major. Entries are always reduced to [0, p).
class GfMatrix {
 public:
  GfMatrix(std::size_t rows, std::size_t cols, FieldSpec field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }

  std::uint32_t get(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t value);

  bool is_zero() const;

  // Rank by Gaussian elimination with first-nonzero pivoting per column.
  std::size_t rank() const { return rank(gf::select_kernel(p_)); }
  std::size_t rank(const gf::RowKernel& kernel) const;

  static GfMatrix multiply(const GfMatrix& a, const GfMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

}  // namespace wobetti
