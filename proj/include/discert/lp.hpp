#ifndef DISCERT_LP_HPP
#define DISCERT_LP_HPP

#include <optional>

#include "discert/matrix.hpp"
#include "discert/vector.hpp"

namespace discert {

// Exact feasibility of the standard-form system E x = d, x >= 0.
// Phase-I simplex with Bland's rule; terminates on every input and never
// rounds. Returns a feasible point or nullopt.
//
// This backs convex-combination systems (hull membership, subgradient
// decompositions), whose variable count is the number of combined points;
// the subset-enumeration search used for ambient-space polyhedra is
// combinatorially infeasible there.
std::optional<Vector> feasible_nonnegative(const Matrix& E, const Vector& d);

}  // namespace discert

#endif
