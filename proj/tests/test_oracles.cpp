#include <doctest.h>

#include "discert/errors.hpp"
#include "discert/oracles.hpp"
#include "test_utils.hpp"

using namespace discert;
using namespace discert::testutil;

TEST_CASE("brute_min on the golden instances") {
  const auto square = oracle::brute_min(square_quadratic(), unit_square_points());
  CHECK(square.value == Rational(1, 2));
  CHECK(square.minimizer == vec2(0, 0));

  const auto f = ConvexFunction::max_affine({{Vector{Rational(1), Rational(1)}, Rational(0)}});
  const auto linear = oracle::brute_min(f, unit_square_points());
  CHECK(linear.value == Rational(0));
  CHECK(linear.minimizer == vec2(0, 0));
}

TEST_CASE("brute_min rejects an empty set") {
  const Polyhedron none(2, {Halfspace(Vector{Rational(1), Rational(0)}, Rational(-1))});
  const auto s = DiscreteSet::integer_polytope(none, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(oracle::brute_min(square_quadratic(), s), EmptySet);
}

TEST_CASE("brute_sfree on certificate polyhedra") {
  const Polyhedron square_q(2,
                            {Halfspace(Vector{Rational(-1), Rational(-1)}, Rational(0)),
                             Halfspace(Vector{Rational(-1), Rational(1)}, Rational(1)),
                             Halfspace(Vector{Rational(1), Rational(-1)}, Rational(1)),
                             Halfspace(Vector{Rational(1), Rational(1)}, Rational(2))});
  CHECK(!oracle::brute_sfree(square_q, unit_square_points()).has_value());

  const Polyhedron wide_slab(2,
                             {Halfspace(Vector{Rational(-1), Rational(-1)}, Rational(0)),
                              Halfspace(Vector{Rational(1), Rational(1)}, Rational(2))});
  const auto witness = oracle::brute_sfree(wide_slab, grid_0_2());
  REQUIRE(witness.has_value());
  CHECK(wide_slab.strictly_contains(*witness));

  CHECK(oracle::brute_sfree(Polyhedron(2), unit_square_points()).has_value());
}

TEST_CASE("grid lower bound on a facet line") {
  const Polyhedron line(2, {Halfspace(Vector{Rational(1), Rational(1)}, Rational(0)),
                            Halfspace(Vector{Rational(-1), Rational(-1)}, Rational(0))});
  const Box box({{Rational(-1), Rational(1)}, {Rational(-1), Rational(1)}});
  // Grid with step 1/4 contains the exact minimizer (0, 0).
  CHECK(oracle::grid_lower_bound(square_quadratic(), line, box, Rational(1, 4)) ==
        Rational(1, 2));
}

TEST_CASE("grid lower bound on a segment with coarse steps") {
  const Polyhedron seg(1, {Halfspace(Vector{Rational(1)}, Rational(1)),
                           Halfspace(Vector{Rational(-1)}, Rational(0))});
  const auto f = ConvexFunction::max_affine({{Vector{Rational(3)}, Rational(0)}});
  const Box box({{Rational(0), Rational(1)}});
  // Step spanning the whole segment sees both endpoints.
  CHECK(oracle::grid_lower_bound(f, seg, box, Rational(1)) == Rational(0));
  // A step larger than the segment still evaluates the anchor.
  CHECK(oracle::grid_lower_bound(f, seg, box, Rational(5)) == Rational(0));
}

TEST_CASE("grid lower bound raises on an empty region") {
  const Polyhedron none(2, {Halfspace(Vector{Rational(1), Rational(0)}, Rational(0)),
                            Halfspace(Vector{Rational(-1), Rational(0)}, Rational(-1))});
  const Box box({{Rational(2), Rational(3)}, {Rational(0), Rational(1)}});
  CHECK_THROWS_AS(oracle::grid_lower_bound(square_quadratic(), none, box, Rational(1)),
                  EmptyRegion);
}
