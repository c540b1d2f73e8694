#include "discert/lp.hpp"

#include <cstddef>

#include "discert/errors.hpp"

namespace discert {

std::optional<Vector> feasible_nonnegative(const Matrix& E, const Vector& d) {
  const std::size_t m = E.rows();
  const std::size_t p = E.cols();
  if (d.dimension() != m) throw DimensionMismatch("feasible_nonnegative: rhs length");

  // Tableau over columns [x_0..x_{p-1}, a_0..a_{m-1} | rhs], artificial basis.
  Matrix t(m, p + m + 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = d[i] < Rational(0);
    for (std::size_t j = 0; j < p; ++j) t.at(i, j) = flip ? -E.at(i, j) : E.at(i, j);
    t.at(i, p + i) = Rational(1);
    t.at(i, p + m) = flip ? -d[i] : d[i];
    basis[i] = p + i;
  }

  const auto reduced_cost = [&](std::size_t j) {
    // Phase-I costs: 1 on artificials, 0 on originals.
    Rational r = j >= p ? Rational(1) : Rational(0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= p) r -= t.at(i, j);
    return r;
  };

  for (;;) {
    // Bland: smallest-index entering column with negative reduced cost.
    std::size_t enter = p + m;
    for (std::size_t j = 0; j < p + m; ++j) {
      if (reduced_cost(j) < Rational(0)) {
        enter = j;
        break;
      }
    }
    if (enter == p + m) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.at(i, enter) <= Rational(0)) continue;
      const Rational ratio = t.at(i, p + m) / t.at(i, enter);
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw InternalInvariantBroken("phase-I objective unbounded below");

    const Rational inv = Rational(1) / t.at(leave, enter);
    for (std::size_t j = 0; j <= p + m; ++j) t.at(leave, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t.at(i, enter).is_zero()) continue;
      const Rational factor = t.at(i, enter);
      for (std::size_t j = 0; j <= p + m; ++j)
        t.at(i, j) -= factor * t.at(leave, j);
    }
    basis[leave] = enter;
  }

  Rational objective;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= p) objective += t.at(i, p + m);
  if (!objective.is_zero()) return std::nullopt;

  Vector x(p);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < p) x[basis[i]] = t.at(i, p + m);
  return x;
}

}  // namespace discert
