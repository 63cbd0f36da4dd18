#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reptqft/laurent_poly.hpp"

namespace reptqft {

using PolyVector = std::vector<LaurentPoly>;

/// Dense row-major matrix over the Laurent ring. Column j holds the image of
/// basis vector j, so a tube acts on column vectors by left multiplication.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix from_rows(const std::vector<std::vector<LaurentPoly>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyVector operator*(const PolyVector& v) const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Binary powering; requires a square matrix.
PolyMatrix pow(const PolyMatrix& m, std::uint64_t k);

/// Covector times vector.
LaurentPoly dot(const PolyVector& row, const PolyVector& col);

}  // namespace reptqft
