#include "waring/matrix.hpp"

#include <utility>

namespace waring {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_) throw DimensionMismatch("cannot stack matrices with different column counts");
  Matrix out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Matrix Matrix::without_row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("row index out of range");
  Matrix out(rows_ - 1, cols_);
  for (std::size_t r = 0, k = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(r, j);
    ++k;
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= rows_) throw std::out_of_range("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(indices[k], j);
  }
  return out;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

// Row echelon form over the integers. Row i of `rows` (i < pivots.size())
// has its leading entry in column pivots[i].
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
};

// Scaling a row by a nonzero constant leaves rank and kernel unchanged, so
// each row is cleared of denominators before elimination.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      out[i][j] = x.get_num() * (l / x.get_den());
    }
  }
  return out;
}

// Bareiss fraction-free elimination. The pivot is the first nonzero entry in
// column scan order, so the result is fully deterministic. Every division by
// the previous pivot is exact (Sylvester's determinant identity).
Echelon bareiss(const Matrix& m) {
  Echelon e{integer_rows(m), {}};
  auto& a = e.rows;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  Integer t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = pivot * a[i][j];
        t -= lead * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return bareiss(m).pivots.size(); }

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const Echelon e = bareiss(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t t = e.pivots.size(); t-- > 0;) {
      const auto& row = e.rows[t];
      Rational acc = 0;
      for (std::size_t j = e.pivots[t] + 1; j < cols; ++j) {
        if (row[j] != 0 && v[j] != 0) acc += Rational(row[j]) * v[j];
      }
      v[e.pivots[t]] = -acc / Rational(row[e.pivots[t]]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t row_space_intersection_dim(const Matrix& m1, const Matrix& m2) {
  if (m1.cols() != m2.cols()) throw DimensionMismatch("row spaces live in different ambient dimensions");
  return rank(m1) + rank(m2) - rank(m1.stacked(m2));
}

}  // namespace waring
