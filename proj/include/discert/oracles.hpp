#ifndef DISCERT_ORACLES_HPP
#define DISCERT_ORACLES_HPP

#include <optional>

#include "discert/discrete_set.hpp"
#include "discert/geometry.hpp"
#include "discert/objective.hpp"

namespace discert {

// Knobs for the reference checks: grid resolution for boundary-minimum
// comparisons and the sampling budget for subgradient-inequality spot
// checks. The seed is fixed so every run replays the same samples.
struct OracleConfig {
  Rational grid_step = Rational(1, 4);
  int sample_count = 40;
  unsigned seed = 0x5eed;
};

// Brute-force reference implementations. They are deliberately exhaustive:
// every answer the solver produces can be re-derived here by full scans.
// Shipped in the library so the CLI can cross-check its own results.
namespace oracle {

struct BruteMin {
  Rational value;
  Vector minimizer;  // lexicographically smallest among the optima
};

// Exact minimum of f over S by full enumeration.
BruteMin brute_min(const ConvexFunction& f, const DiscreteSet& S,
                   long long cap = kDefaultEnumCap);

// A point of S strictly inside Q, or nullopt when Q is S-free.
std::optional<Vector> brute_sfree(const Polyhedron& Q, const DiscreteSet& S,
                                  long long cap = kDefaultEnumCap);

// Minimum of f over the grid points of P at the given step, anchored at the
// box lower corner. An upper bound on the exact minimum over P that
// tightens as the step shrinks.
Rational grid_lower_bound(const ConvexFunction& f, const Polyhedron& P,
                          const Box& box, const Rational& step);

}  // namespace oracle

}  // namespace discert

#endif
