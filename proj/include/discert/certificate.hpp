#ifndef DISCERT_CERTIFICATE_HPP
#define DISCERT_CERTIFICATE_HPP

#include <string>
#include <variant>
#include <vector>

#include "discert/discrete_set.hpp"
#include "discert/geometry.hpp"
#include "discert/objective.hpp"
#include "discert/oracles.hpp"

namespace discert {

// Points z_1..z_k of S with subgradients a_i at z_i whose cut polyhedron
// Q = { x : <a_i, x - z_i> <= 0 } has no point of S in its interior, and
// <a_i, z_j - z_i> < 0 for all i != j. Evaluating f at the points then
// yields the exact discrete minimum.
struct StrongCertificate {
  StrongCertificate(std::vector<Vector> points_, std::vector<Vector> subgradients_,
                    std::vector<Rational> values_, Polyhedron polyhedron_);

  std::size_t size() const { return points.size(); }
  std::size_t dimension() const { return polyhedron.dimension(); }

  std::vector<Vector> points;
  std::vector<Vector> subgradients;
  std::vector<Rational> values;
  Polyhedron polyhedron;
};

struct CertificateOutcome {
  StrongCertificate certificate;
  Rational optimum;
  Vector argmin;
};

// A feasible point where the zero vector is a subgradient: optimal for the
// unconstrained relaxation, hence for the discrete problem.
struct ContinuousOptimum {
  Vector point;
  Rational value;
  std::string note;
};

// S has no points; all of space is trivially free of them.
struct Infeasible {};

using SolveOutcome = std::variant<CertificateOutcome, ContinuousOptimum, Infeasible>;

struct IterationRecord {
  Vector point;
  Rational value;
  int face_dim;
  std::size_t tie_set_size;
};

struct SolveResult {
  SolveOutcome outcome;
  std::vector<IterationRecord> iterations;
};

// Cutting loop: repeatedly take the interior-restricted discrete minimizer
// with the largest level-set face, cut with a relative-interior subgradient
// halfspace through it, and stop once the interior holds no point of S.
SolveResult solve(const ConvexFunction& f, const DiscreteSet& S,
                  long long cap = kDefaultEnumCap);

struct Verdict {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
  const Verdict* find(const std::string& name) const {
    for (const auto& v : verdicts)
      if (v.name == name) return &v;
    return nullptr;
  }
};

// Independent re-check of a certificate against the instance. Trusts nothing
// from the solver; every verdict is recomputed from first principles and all
// failures are reported.
VerificationReport verify(const StrongCertificate& cert, const ConvexFunction& f,
                          const DiscreteSet& S, long long cap = kDefaultEnumCap,
                          const OracleConfig& oracles = {});

// For each cut, relax its offset by epsilon and report whether some point of
// S enters the interior. All-true for small positive epsilon witnesses that
// no constraint can be loosened, i.e. the cut polyhedron is maximal.
std::vector<bool> probe_maximality(const StrongCertificate& cert, const DiscreteSet& S,
                                   const Rational& epsilon,
                                   long long cap = kDefaultEnumCap);

}  // namespace discert

#endif
