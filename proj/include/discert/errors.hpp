#ifndef DISCERT_ERRORS_HPP
#define DISCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace discert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension of an argument does not match the ambient dimension.
struct DimensionMismatch : Error {
  using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
struct ContractViolation : Error {
  using Error::Error;
};

// Vertex or boundary queries on an unbounded polyhedron without box bounds.
struct UnboundedWithoutBox : Error {
  using Error::Error;
};

// Facet enumeration requires a full-dimensional polyhedron.
struct NotFullDimensional : Error {
  using Error::Error;
};

// Integer box volume exceeds the enumeration cap.
struct BoxTooLarge : Error {
  using Error::Error;
};

// Minimization over an empty region.
struct EmptyRegion : Error {
  using Error::Error;
};

// Brute-force minimization over an empty set.
struct EmptySet : Error {
  using Error::Error;
};

// An operation-specific precondition (e.g. f(z) != t in face dimension).
struct PreconditionViolated : Error {
  using Error::Error;
};

// V-condition check called with points outside S or duplicates in V.
struct VNotSubsetOfS : Error {
  using Error::Error;
};

// A runtime assertion that the solver's theory guarantees has failed;
// this always indicates an implementation bug, never bad input.
struct InternalInvariantBroken : Error {
  using Error::Error;
};

// Malformed input document; the message carries the JSON path.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace discert

#endif
