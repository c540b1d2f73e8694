#ifndef DISCERT_HELLY_HPP
#define DISCERT_HELLY_HPP

#include <string>
#include <variant>
#include <vector>

#include "discert/discrete_set.hpp"
#include "discert/geometry.hpp"

namespace discert {

// Upper bound on the size of grouped-intersection witnesses over S:
// 2^n for the integer points of a polytope, the cardinality for an
// explicit finite set.
struct HellyBound {
  std::string set_kind;
  long long bound;
};

HellyBound bound_for(const DiscreteSet& S);

// Table value for sets of mixed type (d continuous factors, n integer
// factors inside a convex set): 2^n (d + 1). Such sets cannot be built as
// DiscreteSet instances; only the bound is exposed.
long long mixed_integer_bound(int continuous_dim, int integer_dim);

// A convex set for witness checking: an H-polyhedron or the hull of a
// finite point list (membership decided in V-form, no conversion).
struct WitnessSet {
  std::variant<Polyhedron, std::vector<Vector>> rep;
  bool contains(const Vector& x) const;
  std::size_t dimension() const;
};

struct WitnessConfiguration {
  std::vector<WitnessSet> sets;
  DiscreteSet S;
};

// Whether (a) every point of S inside conv(V) belongs to V and (b) every
// point of V is a vertex of conv(V). The certificate points produced by the
// solver always satisfy this.
bool check_v_condition(const std::vector<Vector>& V, const DiscreteSet& S,
                       long long cap = kDefaultEnumCap);

// Whether the full intersection of the sets misses S while every
// leave-one-out intersection meets S. A valid witness with m sets proves
// that witnesses of size m exist for this S.
bool verify_witness(const WitnessConfiguration& w, long long cap = kDefaultEnumCap);

// The canonical witness built from a vertex configuration V: the i-th set
// is the hull of V with its i-th point left out.
WitnessConfiguration leave_one_out_witness(const std::vector<Vector>& V,
                                           const DiscreteSet& S);

}  // namespace discert

#endif
