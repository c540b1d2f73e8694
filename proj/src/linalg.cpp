#include "discert/linalg.hpp"

#include "discert/errors.hpp"

namespace discert {

namespace {

// Reduced row echelon form in place. Returns the pivot column of each
// eliminated row, in order.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(pivot_row, j));
    }
    const Rational inv = Rational(1) / m.at(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m.at(i, col).is_zero()) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return pivot_cols;
}

}  // namespace

std::optional<Vector> solve_linear(const Matrix& A, const Vector& b) {
  if (b.dimension() != A.rows())
    throw DimensionMismatch("solve_linear: right-hand side length != row count");
  Matrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  // A pivot in the augmented column marks an inconsistent row 0 = 1.
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  Vector x(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols());
  return x;
}

std::vector<Vector> nullspace(const Matrix& A) {
  Matrix m = A;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free_col = 0; free_col < A.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector d(A.cols());
    d[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      d[pivots[r]] = -m.at(r, free_col);
    basis.push_back(std::move(d));
  }
  return basis;
}

std::size_t rank(const Matrix& A) {
  Matrix m = A;
  return rref(m).size();
}

}  // namespace discert
