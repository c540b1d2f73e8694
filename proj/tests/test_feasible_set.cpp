#include <doctest.h>

#include <algorithm>
#include <random>

#include "discert/discrete_set.hpp"
#include "discert/errors.hpp"
#include "discert/oracles.hpp"
#include "test_utils.hpp"

using namespace discert;
using namespace discert::testutil;

TEST_CASE("explicit point sets deduplicate and reject empties") {
  const auto s = DiscreteSet::explicit_points({vec2(0, 0), vec2(1, 1), vec2(0, 0)});
  CHECK(s.enumerate().size() == 2);
  CHECK(s.contains(vec2(1, 1)));
  CHECK(!s.contains(vec2(2, 2)));
  CHECK_THROWS_AS(DiscreteSet::explicit_points({}), ContractViolation);
}

TEST_CASE("enumerate the unit square") {
  CHECK(unit_square_points().enumerate().size() == 4);
}

TEST_CASE("enumerate integer points under a constraint") {
  const Polyhedron half(2, {Halfspace(Vector{Rational(1), Rational(1)}, Rational(2))});
  const auto s = DiscreteSet::integer_polytope(half, {{0, 2}, {0, 2}});
  const auto pts = s.enumerate();
  REQUIRE(pts.size() == 6);
  for (const auto& p : pts) {
    CHECK(half.contains(p));
    for (const auto& c : p.entries()) CHECK(c.is_integer());
  }
  // Lexicographic ascending order.
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);
}

TEST_CASE("enumerate an empty lattice region") {
  const Polyhedron none(2, {Halfspace(Vector{Rational(1), Rational(0)}, Rational(-1))});
  const auto s = DiscreteSet::integer_polytope(none, {{0, 2}, {0, 2}});
  CHECK(s.enumerate().empty());
}

TEST_CASE("enumeration cap raises instead of truncating") {
  const auto s = DiscreteSet::integer_polytope(Polyhedron(2), {{0, 9999}, {0, 9999}});
  CHECK_THROWS_AS(s.enumerate(1000), BoxTooLarge);
  const auto small = DiscreteSet::integer_polytope(Polyhedron(2), {{0, 9}, {0, 9}});
  CHECK(small.enumerate(100).size() == 100);
  CHECK_THROWS_AS(small.enumerate(99), BoxTooLarge);
}

TEST_CASE("bounding box") {
  const auto s = DiscreteSet::explicit_points({vec2(0, 3), vec2(-2, 1)});
  const Box b = s.bounding_box();
  CHECK(b.bounds[0].first == Rational(-2));
  CHECK(b.bounds[0].second == Rational(0));
  CHECK(b.bounds[1].first == Rational(1));
  CHECK(b.bounds[1].second == Rational(3));
}

TEST_CASE("argmin over the square picks the lexicographic smallest corner") {
  const auto res = argmin_interior(square_quadratic(), unit_square_points(), Polyhedron(2));
  REQUIRE(res.has_value());
  CHECK(res->minimizer == vec2(0, 0));
  CHECK(res->value == Rational(1, 2));
  CHECK(res->face_dim == 0);
  CHECK(res->tie_set_size == 4);
}

TEST_CASE("argmin of the slab objective over the 0..2 grid") {
  const auto res = argmin_interior(slab_max_affine(), grid_0_2(), Polyhedron(2));
  REQUIRE(res.has_value());
  CHECK(res->minimizer == vec2(0, 1));
  CHECK(res->value == Rational(0));
  CHECK(res->face_dim == 1);
  CHECK(res->tie_set_size == 5);
}

TEST_CASE("argmin respects strict interiority") {
  const Polyhedron q(2, {Halfspace(Vector{Rational(-1), Rational(-1)}, Rational(-1))});
  const auto res = argmin_interior(slab_max_affine(), grid_0_2(), q);
  REQUIRE(res.has_value());
  // Boundary points with x1+x2 = 1 are excluded by strictness.
  CHECK(res->minimizer == vec2(0, 2));
  CHECK(res->value == Rational(0));
}

TEST_CASE("argmin returns nothing when the interior misses the set") {
  const Polyhedron slab(2, {Halfspace(Vector{Rational(-1), Rational(-1)}, Rational(-1)),
                            Halfspace(Vector{Rational(1), Rational(1)}, Rational(2))});
  const auto res = argmin_interior(slab_max_affine(), grid_0_2(), slab);
  CHECK(!res.has_value());
}

TEST_CASE("argmin agrees with filtered brute force on random instances") {
  std::mt19937 rng(5001);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int it = 0; it < 120; ++it) {
    const std::size_t n = 1 + it % 3;
    const ConvexFunction f = (it % 2 == 0) ? random_psd_quadratic(rng, n)
                                           : random_max_affine(rng, n);
    const DiscreteSet s = random_lattice_set(rng, n);

    std::vector<Halfspace> rows;
    for (int c = 0; c < it % 3; ++c) {
      Vector normal(n);
      bool zero = true;
      for (std::size_t j = 0; j < n; ++j) {
        normal[j] = Rational(coef(rng));
        if (!normal[j].is_zero()) zero = false;
      }
      if (zero) continue;
      rows.emplace_back(normal, Rational(coef(rng) + 2));
    }
    const Polyhedron q(n, rows);

    const auto res = argmin_interior(f, s, q);
    std::optional<Rational> expect;
    std::size_t count = 0;
    for (const auto& p : s.enumerate()) {
      if (!q.strictly_contains(p)) continue;
      const Rational v = f.evaluate(p);
      if (!expect || v < *expect) {
        expect = v;
        count = 1;
      } else if (v == *expect) {
        ++count;
      }
    }
    CHECK(res.has_value() == expect.has_value());
    if (res) {
      CHECK(res->value == *expect);
      CHECK(res->tie_set_size == count);
      CHECK(q.strictly_contains(res->minimizer));
      CHECK(s.contains(res->minimizer));
      CHECK(f.evaluate(res->minimizer) == res->value);
    }
  }
}
