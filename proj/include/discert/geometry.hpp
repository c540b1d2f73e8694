#ifndef DISCERT_GEOMETRY_HPP
#define DISCERT_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "discert/rational.hpp"
#include "discert/vector.hpp"

namespace discert {

// Closed halfspace { x : <normal, x> <= offset }. Trivial constraints
// (zero normal) are rejected at construction.
struct Halfspace {
  Halfspace(Vector n, Rational b) : normal(std::move(n)), offset(std::move(b)) {
    if (normal.is_zero())
      throw ContractViolation("halfspace with zero normal");
  }

  // Positive scaling to a primitive integer normal; canonical form for
  // comparing constraints that describe the same halfspace.
  Halfspace normalized() const;

  Vector normal;
  Rational offset;

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

// Finite per-coordinate bounds [lo, hi].
struct Box {
  explicit Box(std::vector<std::pair<Rational, Rational>> b) : bounds(std::move(b)) {
    for (const auto& [lo, hi] : bounds)
      if (hi < lo) throw ContractViolation("box with lo > hi");
  }

  std::size_t dimension() const { return bounds.size(); }
  std::vector<Halfspace> halfspaces() const;
  bool contains(const Vector& x) const;

  std::vector<std::pair<Rational, Rational>> bounds;
};

// H-representation polyhedron in a fixed ambient dimension. An empty
// constraint list is all of R^n.
class Polyhedron {
 public:
  explicit Polyhedron(std::size_t dimension, std::vector<Halfspace> halfspaces = {})
      : dim_(dimension), halfspaces_(std::move(halfspaces)) {
    for (const auto& h : halfspaces_)
      if (h.normal.dimension() != dim_)
        throw DimensionMismatch("halfspace dimension != polyhedron dimension");
  }

  std::size_t dimension() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  bool contains(const Vector& x) const;
  // Exact strict satisfaction of every constraint; this is membership in the
  // topological interior.
  bool strictly_contains(const Vector& x) const;

  Polyhedron with_constraint(Halfspace h) const;
  Polyhedron intersect(const Box& box) const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
};

// Some point of P, or nullopt when P is empty. Complete: every nonempty
// polyhedron has a minimal face cut out by a subsystem of tight constraints,
// and the search enumerates all constraint subsets up to size n.
std::optional<Vector> find_point(const Polyhedron& P);

// Whether some x in P satisfies <c, x> < d. Decided exactly from the
// minimal-face witnesses of P plus a recession-cone feasibility check.
bool exists_strict(const Polyhedron& P, const Vector& c, const Rational& d);

// -1 for empty P, otherwise the dimension of the affine hull, computed as
// n - rank of the implicit-equality normals.
int affine_dimension(const Polyhedron& P);

// All basic feasible points: every n-subset of constraints with an
// invertible normal matrix, solved as equalities and kept when feasible.
// Unbounded P without a box raises UnboundedWithoutBox.
std::vector<Vector> enumerate_vertices(const Polyhedron& P,
                                       const std::optional<Box>& box = std::nullopt);

// Facets of a full-dimensional P, one per irredundant constraint, each as
// the defining halfspace together with the facet polyhedron (the equality
// encoded as two opposite halfspaces). Order follows the constraint list.
std::vector<std::pair<Halfspace, Polyhedron>> facets(const Polyhedron& P);

// Whether q is a convex combination of the given points (exact).
bool hull_membership(std::span<const Vector> points, const Vector& q);

namespace detail {

// One particular solution per consistent tight-constraint subsystem that
// lands inside P; covers every minimal face. Sorted and deduplicated.
std::vector<Vector> face_witnesses(const Polyhedron& P);

// Whether the recession cone of P contains r with <c, r> <= -1.
bool recession_decreases(const Polyhedron& P, const Vector& c);

}  // namespace detail

}  // namespace discert

#endif
