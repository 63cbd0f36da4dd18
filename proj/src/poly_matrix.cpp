#include "reptqft/poly_matrix.hpp"

#include "reptqft/error.hpp"

namespace reptqft {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<LaurentPoly>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::InvalidArgument, "matrix dimension mismatch");
  PolyMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const LaurentPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const LaurentPoly& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

PolyVector PolyMatrix::operator*(const PolyVector& v) const {
  if (cols_ != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix/vector dimension mismatch");
  PolyVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

PolyMatrix pow(const PolyMatrix& m, std::uint64_t k) {
  if (!m.square()) throw Error(ErrorKind::InvalidArgument, "power of a non-square matrix");
  PolyMatrix result = PolyMatrix::identity(m.rows());
  PolyMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly dot(const PolyVector& row, const PolyVector& col) {
  if (row.size() != col.size()) throw Error(ErrorKind::InvalidArgument, "vector dimension mismatch");
  LaurentPoly sum;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero() && !col[i].is_zero()) sum += row[i] * col[i];
  }
  return sum;
}

}  // namespace reptqft
