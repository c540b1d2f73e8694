#ifndef DISCERT_MATRIX_HPP
#define DISCERT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "discert/rational.hpp"
#include "discert/vector.hpp"

namespace discert {

// Dense rows x cols grid of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("matrix rows have unequal length");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    Vector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  void append_row(const Vector& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.dimension();
    if (v.dimension() != cols_) throw DimensionMismatch("appended row has wrong length");
    for (std::size_t j = 0; j < cols_; ++j) data_.push_back(v[j]);
    ++rows_;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Vector apply(const Vector& x) const {
    if (x.dimension() != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational acc;
      for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace discert

#endif
