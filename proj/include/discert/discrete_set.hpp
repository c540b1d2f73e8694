#ifndef DISCERT_DISCRETE_SET_HPP
#define DISCERT_DISCRETE_SET_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "discert/geometry.hpp"
#include "discert/objective.hpp"
#include "discert/vector.hpp"

namespace discert {

inline constexpr long long kDefaultEnumCap = 10'000'000;

// A finite discrete feasible set: an explicit point list, or the integer
// points of a rational polyhedron clipped to a finite integer box.
class DiscreteSet {
 public:
  static DiscreteSet explicit_points(std::vector<Vector> points);
  static DiscreteSet integer_polytope(Polyhedron constraints,
                                      std::vector<std::pair<long long, long long>> box);

  bool is_explicit() const { return std::holds_alternative<Explicit>(rep_); }
  std::size_t dimension() const { return dim_; }

  const std::vector<Vector>& points() const { return std::get<Explicit>(rep_).points; }
  const Polyhedron& constraints() const { return std::get<Lattice>(rep_).constraints; }
  const std::vector<std::pair<long long, long long>>& box() const {
    return std::get<Lattice>(rep_).box;
  }

  bool contains(const Vector& x) const;

  // Every point exactly once, in a deterministic order. Integer boxes whose
  // volume exceeds the cap raise BoxTooLarge rather than truncating.
  std::vector<Vector> enumerate(long long cap = kDefaultEnumCap) const;

  // Smallest axis-aligned rational box containing the set (the integer box
  // for lattice sets, coordinate extrema for explicit sets).
  Box bounding_box() const;

 private:
  struct Explicit {
    std::vector<Vector> points;
  };
  struct Lattice {
    Polyhedron constraints;
    std::vector<std::pair<long long, long long>> box;
  };

  DiscreteSet(std::size_t dim, std::variant<Explicit, Lattice> rep)
      : dim_(dim), rep_(std::move(rep)) {}

  std::size_t dim_;
  std::variant<Explicit, Lattice> rep_;
};

// Result of the interior-restricted minimizer oracle: a minimizer of f over
// int(Q) ∩ S whose level-set face dimension is largest, ties broken by
// lexicographically smallest point. tie_set_size counts the value-optimal
// candidates the face-dimension rule chose among.
struct OracleResult {
  Vector minimizer;
  Rational value;
  int face_dim;
  std::size_t tie_set_size;
};

std::optional<OracleResult> argmin_interior(const ConvexFunction& f,
                                            const DiscreteSet& S, const Polyhedron& Q,
                                            long long cap = kDefaultEnumCap);

}  // namespace discert

#endif
