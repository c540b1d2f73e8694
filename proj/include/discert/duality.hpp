#ifndef DISCERT_DUALITY_HPP
#define DISCERT_DUALITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "discert/certificate.hpp"
#include "discert/discrete_set.hpp"
#include "discert/geometry.hpp"
#include "discert/objective.hpp"

namespace discert {

// Raised when a boundary lower bound exceeds a feasible value, which proves
// the polyhedron was not actually free of S; carries the interior witness.
struct NotSFree : Error {
  NotSFree(const std::string& msg, Vector w) : Error(msg), witness(std::move(w)) {}
  Vector witness;
};

struct FacetMinimum {
  std::size_t facet_index;
  Rational value;
  Vector minimizer;
};

struct DualBound {
  std::vector<FacetMinimum> facet_minima;
  Rational bound;
};

// Boundary lower bound and the duality-gap summary for a certificate.
struct DualReport {
  std::vector<FacetMinimum> facet_minima;
  Rational bound;   // min of f over the boundary of Q
  Rational primal;  // min over the certificate values
  Rational gap;     // primal - bound, zero exactly when duality is tight
  bool strong;
  Box box_used;
};

// Exact minimum of f over P (clipped to the box when given) with a witness.
// Max-affine objectives minimize by basic-solution enumeration over the
// epigraph; quadratics and sums sweep the faces and solve the
// equality-constrained stationarity system on each.
std::pair<Rational, Vector> minimize_on_polyhedron(
    const ConvexFunction& f, const Polyhedron& P,
    const std::optional<Box>& box = std::nullopt);

// Minimum of f over the boundary of a full-dimensional C, facet by facet.
DualBound dual_bound(const ConvexFunction& f, const Polyhedron& C,
                     const std::optional<Box>& box = std::nullopt);

// Assembles the boundary bound for a verified certificate against its primal
// value. The default box is the bounding box of S inflated by the given
// factor; the box used is always reported.
DualReport duality_report(const StrongCertificate& cert, const ConvexFunction& f,
                          const DiscreteSet& S,
                          const std::optional<Box>& box = std::nullopt,
                          long long box_inflate = 4,
                          long long cap = kDefaultEnumCap);

// The default duality box: the bounding box of S inflated about its center.
Box inflated_box(const DiscreteSet& S, long long factor);

}  // namespace discert

#endif
