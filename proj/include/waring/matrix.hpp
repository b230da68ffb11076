#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static Matrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transposed() const;
  /// Rows of *this followed by rows of `below`.
  Matrix stacked(const Matrix& below) const;
  Matrix without_row(std::size_t i) const;
  Matrix select_rows(std::span<const std::size_t> indices) const;

  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank over the rationals (fraction-free elimination).
std::size_t rank(const Matrix& m);

/// Basis of the right null space; size is cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// dim(rowspace(m1) ∩ rowspace(m2)) by the Grassmann formula.
/// Throws DimensionMismatch if the column counts differ.
std::size_t row_space_intersection_dim(const Matrix& m1, const Matrix& m2);

}  // namespace waring
