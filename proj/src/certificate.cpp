#include "discert/certificate.hpp"

#include <algorithm>
#include <random>

#include "discert/errors.hpp"
#include "discert/helly.hpp"
#include "discert/oracles.hpp"

namespace discert {

StrongCertificate::StrongCertificate(std::vector<Vector> points_,
                                     std::vector<Vector> subgradients_,
                                     std::vector<Rational> values_,
                                     Polyhedron polyhedron_)
    : points(std::move(points_)),
      subgradients(std::move(subgradients_)),
      values(std::move(values_)),
      polyhedron(std::move(polyhedron_)) {
  if (points.empty()) throw ContractViolation("certificate needs at least one point");
  if (points.size() != subgradients.size() || points.size() != values.size())
    throw ContractViolation("certificate sequences of unequal length");
  for (const auto& z : points)
    if (z.dimension() != polyhedron.dimension())
      throw DimensionMismatch("certificate point dimension mismatch");
  for (const auto& a : subgradients)
    if (a.dimension() != polyhedron.dimension())
      throw DimensionMismatch("certificate subgradient dimension mismatch");
}

SolveResult solve(const ConvexFunction& f, const DiscreteSet& S, long long cap) {
  if (f.dimension() != S.dimension())
    throw DimensionMismatch("objective and set dimension differ");
  const std::size_t n = f.dimension();

  Polyhedron q(n);
  std::vector<Vector> points;
  std::vector<Vector> subgradients;
  std::vector<Rational> values;
  std::vector<IterationRecord> iterations;

  while (auto res = argmin_interior(f, S, q, cap)) {
    iterations.push_back(
        {res->minimizer, res->value, res->face_dim, res->tie_set_size});
    if (f.zero_in_subdifferential(res->minimizer)) {
      return {ContinuousOptimum{res->minimizer, res->value,
                                "zero subgradient at a feasible point; the point "
                                "minimizes f over all of space"},
              std::move(iterations)};
    }
    const Vector a = f.relint_subgradient(res->minimizer).subgradient;
    if (!values.empty() && res->value < values.back())
      throw InternalInvariantBroken("minimizer values decreased across cuts");

    points.push_back(res->minimizer);
    subgradients.push_back(a);
    values.push_back(res->value);
    q = q.with_constraint(Halfspace(a, a.dot(res->minimizer)));

    // The new point must lie strictly on the negative side of every earlier
    // cut and its own cut must strictly exclude all earlier points.
    const std::size_t k = points.size() - 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(subgradients[i].dot(points[k] - points[i]) < Rational(0)) ||
          !(subgradients[k].dot(points[i] - points[k]) < Rational(0)))
        throw InternalInvariantBroken("pairwise strict cut inequality failed");
    }
  }

  if (points.empty()) return {Infeasible{}, std::move(iterations)};

  if (points.size() > S.enumerate(cap).size())
    throw InternalInvariantBroken("more cuts than points of S");
  if (!check_v_condition(points, S, cap))
    throw InternalInvariantBroken("certificate points violate the vertex condition");

  // Values are non-decreasing, so the first point attains the optimum.
  Rational optimum = values.front();
  Vector argmin = points.front();
  StrongCertificate cert(std::move(points), std::move(subgradients),
                         std::move(values), std::move(q));
  return {CertificateOutcome{std::move(cert), std::move(optimum), std::move(argmin)},
          std::move(iterations)};
}

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Deterministic rational sample points for spot-checking the subgradient
// inequality away from the certificate points.
std::vector<Vector> sample_points(std::size_t n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = Rational(num(rng), den(rng));
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

VerificationReport verify(const StrongCertificate& cert, const ConvexFunction& f,
                          const DiscreteSet& S, long long cap,
                          const OracleConfig& oracles) {
  VerificationReport report;
  const std::size_t k = cert.size();
  const auto add = [&report](std::string name, bool pass, std::string detail) {
    report.verdicts.push_back({std::move(name), pass, std::move(detail)});
  };

  if (f.dimension() != cert.dimension() || S.dimension() != cert.dimension())
    throw DimensionMismatch("certificate dimension does not match the instance");

  {
    std::string detail;
    for (std::size_t i = 0; i < k; ++i)
      if (!S.contains(cert.points[i]))
        detail += "point " + std::to_string(i + 1) + " = " + cert.points[i].str() +
                  " not in S; ";
    add("points_in_set", detail.empty(), detail);
  }

  {
    std::string detail;
    const auto samples =
        sample_points(cert.dimension(), oracles.sample_count, oracles.seed);
    for (std::size_t i = 0; i < k; ++i) {
      if (!f.in_subdifferential(cert.points[i], cert.subgradients[i])) {
        detail += "subgradient " + std::to_string(i + 1) +
                  " is not in the subdifferential at its point; ";
        continue;
      }
      const Rational fz = f.evaluate(cert.points[i]);
      for (const auto& x : samples) {
        if (f.evaluate(x) <
            fz + cert.subgradients[i].dot(x - cert.points[i])) {
          detail += "subgradient inequality fails at sample " + x.str() +
                    " for index " + std::to_string(i + 1) + "; ";
          break;
        }
      }
    }
    add("subgradients_valid", detail.empty(), detail);
  }

  {
    std::string detail;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j &&
            !(cert.subgradients[i].dot(cert.points[j] - cert.points[i]) < Rational(0)))
          detail += "pair " + pair_label(i, j) + " not strictly negative; ";
    add("pairwise_strict_inequalities", detail.empty(), detail);
  }

  {
    std::string detail;
    if (const auto witness = oracle::brute_sfree(cert.polyhedron, S, cap))
      detail = "interior point of Q in S: " + witness->str();
    add("interior_excludes_set", detail.empty(), detail);
  }

  {
    std::string detail;
    for (std::size_t i = 0; i < k; ++i)
      if (f.evaluate(cert.points[i]) != cert.values[i])
        detail += "stored value " + std::to_string(i + 1) + " differs from f; ";
    add("values_match_objective", detail.empty(), detail);
  }

  {
    std::string detail;
    const auto best = oracle::brute_min(f, S, cap);
    const Rational claimed = *std::min_element(cert.values.begin(), cert.values.end());
    if (claimed != best.value)
      detail = "certificate minimum " + claimed.str() + " != brute-force minimum " +
               best.value.str() + " at " + best.minimizer.str();
    add("optimum_matches_brute_force", detail.empty(), detail);
  }

  {
    const auto bound = bound_for(S);
    std::string detail;
    if (static_cast<long long>(k) > bound.bound)
      detail = "size " + std::to_string(k) + " exceeds bound " +
               std::to_string(bound.bound) + " (" + bound.set_kind + ")";
    add("size_within_helly_bound", detail.empty(), detail);
  }

  {
    std::string detail;
    const auto& hs = cert.polyhedron.halfspaces();
    if (hs.size() != k) {
      detail = "polyhedron has " + std::to_string(hs.size()) + " constraints, expected " +
               std::to_string(k);
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        if (!(hs[i].normal == cert.subgradients[i]) ||
            hs[i].offset != cert.subgradients[i].dot(cert.points[i]))
          detail += "constraint " + std::to_string(i + 1) +
                    " is not the cut through its point; ";
      }
    }
    add("polyhedron_matches_data", detail.empty(), detail);
  }

  {
    const int dim = affine_dimension(cert.polyhedron);
    std::string detail;
    if (dim != static_cast<int>(cert.dimension()))
      detail = "degenerate cut polyhedron: affine dimension " + std::to_string(dim);
    add("full_dimensional", detail.empty(), detail);
  }

  return report;
}

std::vector<bool> probe_maximality(const StrongCertificate& cert, const DiscreteSet& S,
                                   const Rational& epsilon, long long cap) {
  if (epsilon < Rational(0))
    throw ContractViolation("maximality probe requires epsilon >= 0");
  const auto points = S.enumerate(cap);
  const auto& hs = cert.polyhedron.halfspaces();
  std::vector<bool> out(hs.size(), false);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    std::vector<Halfspace> relaxed = hs;
    relaxed[i].offset += epsilon;
    const Polyhedron q(cert.dimension(), std::move(relaxed));
    for (const auto& s : points) {
      if (q.strictly_contains(s)) {
        out[i] = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace discert
