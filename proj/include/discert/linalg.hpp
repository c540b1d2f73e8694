#ifndef DISCERT_LINALG_HPP
#define DISCERT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "discert/matrix.hpp"
#include "discert/vector.hpp"

namespace discert {

// Some solution of A x = b over the rationals, or nullopt when the system is
// inconsistent. Free variables are set to zero.
std::optional<Vector> solve_linear(const Matrix& A, const Vector& b);

// Basis of { d : A d = 0 }. Empty exactly when A has full column rank.
std::vector<Vector> nullspace(const Matrix& A);

// Exact rank over the rationals.
std::size_t rank(const Matrix& A);

}  // namespace discert

#endif
