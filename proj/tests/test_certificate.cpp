#include <doctest.h>

#include <algorithm>
#include <random>

#include "discert/certificate.hpp"
#include "discert/errors.hpp"
#include "discert/helly.hpp"
#include "discert/oracles.hpp"
#include "test_utils.hpp"

using namespace discert;
using namespace discert::testutil;

namespace {

const CertificateOutcome& expect_certificate(const SolveResult& r) {
  REQUIRE(std::holds_alternative<CertificateOutcome>(r.outcome));
  return std::get<CertificateOutcome>(r.outcome);
}

}  // namespace

TEST_CASE("square quadratic instance yields the four-cut certificate") {
  const auto result = solve(square_quadratic(), unit_square_points());
  const auto& out = expect_certificate(result);
  const auto& cert = out.certificate;

  CHECK(cert.size() == 4);
  CHECK(out.optimum == Rational(1, 2));
  CHECK(cert.points[0] == vec2(0, 0));
  CHECK(cert.points[1] == vec2(0, 1));
  CHECK(cert.points[2] == vec2(1, 0));
  CHECK(cert.points[3] == vec2(1, 1));
  CHECK(cert.subgradients[0] == Vector{Rational(-1), Rational(-1)});
  CHECK(cert.subgradients[1] == Vector{Rational(-1), Rational(1)});
  CHECK(cert.subgradients[2] == Vector{Rational(1), Rational(-1)});
  CHECK(cert.subgradients[3] == Vector{Rational(1), Rational(1)});

  // Q = {x1+x2 >= 0, x2-x1 <= 1, x1-x2 <= 1, x1+x2 <= 2} up to scaling.
  CHECK(same_constraints(cert.polyhedron,
                         {Halfspace(Vector{Rational(-1), Rational(-1)}, Rational(0)),
                          Halfspace(Vector{Rational(-1), Rational(1)}, Rational(1)),
                          Halfspace(Vector{Rational(1), Rational(-1)}, Rational(1)),
                          Halfspace(Vector{Rational(1), Rational(1)}, Rational(2))}));

  CHECK(result.iterations.size() == 4);
  CHECK(result.iterations[0].tie_set_size == 4);
  CHECK(result.iterations[0].face_dim == 0);

  CHECK(verify(cert, square_quadratic(), unit_square_points()).all_pass());
}

TEST_CASE("single linear piece certifies with one cut") {
  const auto f = ConvexFunction::max_affine({{Vector{Rational(1), Rational(1)}, Rational(0)}});
  const auto result = solve(f, unit_square_points());
  const auto& out = expect_certificate(result);
  CHECK(out.certificate.size() == 1);
  CHECK(out.optimum == Rational(0));
  CHECK(out.argmin == vec2(0, 0));
  CHECK(out.certificate.subgradients[0] == Vector{Rational(1), Rational(1)});
  CHECK(same_constraints(out.certificate.polyhedron,
                         {Halfspace(Vector{Rational(1), Rational(1)}, Rational(0))}));
  CHECK(verify(out.certificate, f, unit_square_points()).all_pass());
}

TEST_CASE("centered quadratic returns a continuous optimum") {
  const auto s = DiscreteSet::explicit_points({Vector{Rational(1, 2), Rational(1, 2)}});
  const auto result = solve(square_quadratic(), s);
  REQUIRE(std::holds_alternative<ContinuousOptimum>(result.outcome));
  const auto& cont = std::get<ContinuousOptimum>(result.outcome);
  CHECK(cont.point == Vector{Rational(1, 2), Rational(1, 2)});
  CHECK(cont.value == Rational(0));
}

TEST_CASE("slab instance yields the two-cut certificate") {
  const auto result = solve(slab_max_affine(), grid_0_2());
  const auto& out = expect_certificate(result);
  const auto& cert = out.certificate;

  CHECK(cert.size() == 2);
  CHECK(out.optimum == Rational(0));
  CHECK(cert.points[0] == vec2(0, 1));
  CHECK(cert.points[1] == vec2(0, 2));
  CHECK(cert.subgradients[0] == Vector{Rational(-1), Rational(-1)});
  CHECK(cert.subgradients[1] == Vector{Rational(1), Rational(1)});
  CHECK(same_constraints(cert.polyhedron,
                         {Halfspace(Vector{Rational(-1), Rational(-1)}, Rational(-1)),
                          Halfspace(Vector{Rational(1), Rational(1)}, Rational(2))}));
  CHECK(verify(cert, slab_max_affine(), grid_0_2()).all_pass());
}

TEST_CASE("empty set reports infeasible") {
  const Polyhedron none(2, {Halfspace(Vector{Rational(1), Rational(0)}, Rational(-1))});
  const auto s = DiscreteSet::integer_polytope(none, {{0, 2}, {0, 2}});
  const auto result = solve(square_quadratic(), s);
  CHECK(std::holds_alternative<Infeasible>(result.outcome));
}

TEST_CASE("verifier flags a tampered subgradient") {
  const auto result = solve(square_quadratic(), unit_square_points());
  auto cert = expect_certificate(result).certificate;
  cert.subgradients[0] = Vector{Rational(1), Rational(1)};  // flipped sign

  const auto report = verify(cert, square_quadratic(), unit_square_points());
  CHECK(!report.all_pass());
  CHECK(!report.find("subgradients_valid")->pass);
  // The stored polyhedron no longer matches the flipped data either.
  CHECK(!report.find("polyhedron_matches_data")->pass);
}

TEST_CASE("verifier flags a zero-direction tamper through strictness") {
  const auto result = solve(square_quadratic(), unit_square_points());
  auto cert = expect_certificate(result).certificate;
  // Replace a_1 = (-1,-1) by (-1,0): still fails subdifferential membership,
  // and the strict pairwise inequality degenerates against z = (0,1).
  cert.subgradients[0] = Vector{Rational(-1), Rational(0)};

  const auto report = verify(cert, square_quadratic(), unit_square_points());
  CHECK(!report.all_pass());
  const auto* pairwise = report.find("pairwise_strict_inequalities");
  CHECK(!pairwise->pass);
  CHECK(pairwise->detail.find("(1,2)") != std::string::npos);
}

TEST_CASE("verifier flags a dropped constraint as non-freeness") {
  const auto result = solve(square_quadratic(), unit_square_points());
  const auto& good = expect_certificate(result).certificate;

  // Rebuild Q without the cut through (1,1).
  std::vector<Halfspace> rows(good.polyhedron.halfspaces().begin(),
                              good.polyhedron.halfspaces().end() - 1);
  StrongCertificate cert(good.points, good.subgradients, good.values,
                         Polyhedron(2, rows));

  const auto report = verify(cert, square_quadratic(), unit_square_points());
  CHECK(!report.all_pass());
  const auto* freeness = report.find("interior_excludes_set");
  CHECK(!freeness->pass);
  CHECK(freeness->detail.find("(1, 1)") != std::string::npos);
  CHECK(!report.find("polyhedron_matches_data")->pass);
}

TEST_CASE("verifier flags swapped points") {
  const auto result = solve(square_quadratic(), unit_square_points());
  auto cert = expect_certificate(result).certificate;
  std::swap(cert.points[0], cert.points[1]);

  const auto report = verify(cert, square_quadratic(), unit_square_points());
  CHECK(!report.all_pass());
  CHECK(!report.find("subgradients_valid")->pass);
}

TEST_CASE("verifier accepts only matching dimensions") {
  const auto result = solve(square_quadratic(), unit_square_points());
  const auto& cert = expect_certificate(result).certificate;
  const auto f1 = ConvexFunction::max_affine({{Vector{Rational(1)}, Rational(0)}});
  const auto s1 = DiscreteSet::explicit_points({Vector{Rational(0)}});
  CHECK_THROWS_AS(verify(cert, f1, s1), DimensionMismatch);
}

TEST_CASE("maximality probe on the square certificate") {
  const auto result = solve(square_quadratic(), unit_square_points());
  const auto& cert = expect_certificate(result).certificate;

  const auto half = probe_maximality(cert, unit_square_points(), Rational(1, 2));
  CHECK(half == std::vector<bool>(4, true));
  const auto zero = probe_maximality(cert, unit_square_points(), Rational(0));
  CHECK(zero == std::vector<bool>(4, false));
  CHECK_THROWS_AS(probe_maximality(cert, unit_square_points(), Rational(-1)),
                  ContractViolation);
}

TEST_CASE("maximality probe on the slab certificate") {
  const auto result = solve(slab_max_affine(), grid_0_2());
  const auto& cert = expect_certificate(result).certificate;
  const auto probes = probe_maximality(cert, grid_0_2(), Rational(1, 2));
  CHECK(probes == std::vector<bool>(2, true));
}

TEST_CASE("certificate structural invariants are enforced") {
  CHECK_THROWS_AS(StrongCertificate({}, {}, {}, Polyhedron(2)), ContractViolation);
  CHECK_THROWS_AS(StrongCertificate({vec2(0, 0)}, {}, {Rational(0)}, Polyhedron(2)),
                  ContractViolation);
}

TEST_CASE("solver invariants on random instances") {
  std::mt19937 rng(6001);
  int certificates = 0;
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + it % 3;
    const ConvexFunction f = (it % 2 == 0) ? random_psd_quadratic(rng, n)
                                           : random_max_affine(rng, n);
    const DiscreteSet s = random_lattice_set(rng, n);
    const auto result = solve(f, s);
    const auto size = s.enumerate().size();

    if (const auto* out = std::get_if<CertificateOutcome>(&result.outcome)) {
      ++certificates;
      const auto& cert = out->certificate;
      CHECK(cert.size() <= size);
      CHECK(cert.size() <= (1u << n));
      // Values never decrease along the run.
      for (std::size_t i = 1; i < cert.size(); ++i)
        CHECK(cert.values[i - 1] <= cert.values[i]);
      // Each point lies on its own cut and strictly inside all earlier cuts.
      for (std::size_t i = 0; i < cert.size(); ++i) {
        CHECK(cert.subgradients[i].dot(cert.points[i]) ==
              cert.polyhedron.halfspaces()[i].offset);
        for (std::size_t j = 0; j < i; ++j)
          CHECK(cert.subgradients[j].dot(cert.points[i] - cert.points[j]) < Rational(0));
      }
      CHECK(out->optimum == oracle::brute_min(f, s).value);
      CHECK(affine_dimension(cert.polyhedron) == static_cast<int>(n));
      CHECK(verify(cert, f, s).all_pass());
    } else if (const auto* cont = std::get_if<ContinuousOptimum>(&result.outcome)) {
      CHECK(f.zero_in_subdifferential(cont->point));
      CHECK(cont->value == oracle::brute_min(f, s).value);
    } else {
      CHECK(s.enumerate().empty());
    }
  }
  CHECK(certificates > 20);
}
