#include <doctest.h>

#include <algorithm>
#include <random>

#include "discert/errors.hpp"
#include "discert/geometry.hpp"

using namespace discert;

namespace {

Vector v2(long a, long b) { return Vector{Rational(a), Rational(b)}; }

Halfspace hs(std::initializer_list<long> normal, long offset) {
  std::vector<Rational> n;
  for (long c : normal) n.emplace_back(c);
  return Halfspace(Vector(std::move(n)), Rational(offset));
}

// {x1+x2 >= 1, x1+x2 <= 2}
Polyhedron slab2() {
  return Polyhedron(2, {hs({-1, -1}, -1), hs({1, 1}, 2)});
}

Polyhedron unit_square() {
  return Polyhedron(2, {hs({1, 0}, 1), hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0)});
}

}  // namespace

TEST_CASE("halfspace rejects zero normal") {
  CHECK_THROWS_AS(Halfspace(Vector{Rational(0), Rational(0)}, Rational(1)),
                  ContractViolation);
}

TEST_CASE("halfspace normalization is positive primitive scaling") {
  const auto h = Halfspace(Vector{Rational(2, 3), Rational(-4, 3)}, Rational(2)).normalized();
  CHECK(h.normal == Vector{Rational(1), Rational(-2)});
  CHECK(h.offset == Rational(3));
  const auto k = hs({-2, -2}, -2).normalized();
  CHECK(k.normal == Vector{Rational(-1), Rational(-1)});
  CHECK(k.offset == Rational(-1));
}

TEST_CASE("strict containment") {
  const Polyhedron all(2);
  CHECK(all.strictly_contains(v2(7, -2)));

  const auto p = slab2();
  CHECK(!p.strictly_contains(v2(1, 0)));   // on x1+x2 = 1
  CHECK(!p.strictly_contains(v2(1, 1)));   // on x1+x2 = 2
  CHECK(p.strictly_contains(Vector{Rational(3, 4), Rational(3, 4)}));
  CHECK(p.contains(v2(1, 0)));
  CHECK(!p.contains(v2(0, 0)));
}

TEST_CASE("affine dimension") {
  CHECK(affine_dimension(Polyhedron(3)) == 3);

  const Polyhedron line(2, {hs({1, 1}, 1), hs({-1, -1}, -1)});
  CHECK(affine_dimension(line) == 1);

  const Polyhedron empty(2, {hs({1, 0}, 0), hs({-1, 0}, -1)});
  CHECK(affine_dimension(empty) == -1);

  CHECK(affine_dimension(slab2()) == 2);
  CHECK(affine_dimension(unit_square()) == 2);

  const Polyhedron point(2, {hs({1, 0}, 0), hs({-1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, 0)});
  CHECK(affine_dimension(point) == 0);

  // Unbounded full-dimensional halfspace.
  CHECK(affine_dimension(Polyhedron(2, {hs({1, 0}, 0)})) == 2);
  // Implicit equality met only through a recession direction staying strict.
  const Polyhedron wedge(2, {hs({1, 0}, 0), hs({-1, 0}, 0), hs({0, 1}, 5)});
  CHECK(affine_dimension(wedge) == 1);
}

TEST_CASE("find_point is a complete emptiness test") {
  CHECK(find_point(Polyhedron(2)).has_value());
  CHECK(find_point(slab2()).has_value());
  const auto w = find_point(slab2());
  CHECK(slab2().contains(*w));
  CHECK(!find_point(Polyhedron(2, {hs({1, 0}, 0), hs({-1, 0}, -1)})).has_value());
  // Empty only through three constraints interacting.
  const Polyhedron tri(2, {hs({-1, 0}, 0), hs({0, -1}, 0), hs({1, 1}, -1)});
  CHECK(!find_point(tri).has_value());
}

TEST_CASE("vertex enumeration of the unit square") {
  const auto verts = enumerate_vertices(unit_square());
  REQUIRE(verts.size() == 4);
  CHECK(std::find(verts.begin(), verts.end(), v2(0, 0)) != verts.end());
  CHECK(std::find(verts.begin(), verts.end(), v2(0, 1)) != verts.end());
  CHECK(std::find(verts.begin(), verts.end(), v2(1, 0)) != verts.end());
  CHECK(std::find(verts.begin(), verts.end(), v2(1, 1)) != verts.end());
}

TEST_CASE("vertex enumeration of a rotated diamond") {
  const Polyhedron q(2, {hs({-1, -1}, 0), hs({1, 1}, 2), hs({1, -1}, 1), hs({-1, 1}, 1)});
  const auto verts = enumerate_vertices(q);
  REQUIRE(verts.size() == 4);
  const std::vector<Vector> expect = {
      Vector{Rational(1, 2), Rational(-1, 2)}, Vector{Rational(-1, 2), Rational(1, 2)},
      Vector{Rational(3, 2), Rational(1, 2)}, Vector{Rational(1, 2), Rational(3, 2)}};
  for (const auto& e : expect)
    CHECK(std::find(verts.begin(), verts.end(), e) != verts.end());
  for (const auto& v : verts) CHECK(q.contains(v));
}

TEST_CASE("vertex enumeration requires a box on unbounded input") {
  CHECK_THROWS_AS(enumerate_vertices(slab2()), UnboundedWithoutBox);
  const Box box({{Rational(-5), Rational(5)}, {Rational(-5), Rational(5)}});
  const auto verts = enumerate_vertices(slab2(), box);
  CHECK(verts.size() == 4);  // slab clipped to the box
  for (const auto& v : verts) CHECK(slab2().intersect(box).contains(v));
}

TEST_CASE("facets of the unit square") {
  const auto fs = facets(unit_square());
  CHECK(fs.size() == 4);
  for (const auto& [h, facet] : fs) {
    CHECK(affine_dimension(facet) == 1);
    (void)h;
  }
}

TEST_CASE("facets of a slab are its two boundary lines") {
  const auto fs = facets(slab2());
  REQUIRE(fs.size() == 2);
  CHECK(affine_dimension(fs[0].second) == 1);
  CHECK(affine_dimension(fs[1].second) == 1);
}

TEST_CASE("redundant constraint dropped from facets") {
  const Polyhedron p(2, {hs({1, 0}, 1), hs({1, 0}, 2), hs({0, 1}, 1), hs({0, -1}, 0),
                         hs({-1, 0}, 0)});
  const auto fs = facets(p);
  REQUIRE(fs.size() == 4);
  for (const auto& [h, facet] : fs) {
    CHECK(!(h.normal == Vector{Rational(1), Rational(0)} && h.offset == Rational(2)));
    (void)facet;
  }
}

TEST_CASE("facets requires full dimension") {
  const Polyhedron line(2, {hs({1, 1}, 1), hs({-1, -1}, -1)});
  CHECK_THROWS_AS(facets(line), NotFullDimensional);
}

TEST_CASE("hull membership") {
  const std::vector<Vector> tri = {v2(0, 0), v2(1, 0), v2(0, 1)};
  CHECK(hull_membership(tri, Vector{Rational(1, 3), Rational(1, 3)}));
  const std::vector<Vector> single = {v2(0, 0)};
  CHECK(hull_membership(single, v2(0, 0)));
  const std::vector<Vector> seg = {v2(0, 0), v2(1, 1)};
  CHECK(!hull_membership(seg, v2(1, 0)));
  // Every generator lies in its own hull.
  for (const auto& p : tri) CHECK(hull_membership(tri, p));
  CHECK_THROWS_AS(hull_membership(std::vector<Vector>{}, v2(0, 0)), ContractViolation);
}

TEST_CASE("vertices satisfy containment and tightness") {
  std::mt19937 rng(9001);
  std::uniform_int_distribution<long> coef(-3, 3);
  int nonempty = 0;
  for (int it = 0; it < 40; ++it) {
    std::vector<Halfspace> rows;
    for (int c = 0; c < 4; ++c) {
      Vector n(2);
      do {
        n[0] = Rational(coef(rng));
        n[1] = Rational(coef(rng));
      } while (n.is_zero());
      rows.emplace_back(n, Rational(coef(rng)));
    }
    const Polyhedron p(2, rows);
    const Box box({{Rational(-4), Rational(4)}, {Rational(-4), Rational(4)}});
    const auto verts = enumerate_vertices(p, box);
    const auto region = p.intersect(box);
    if (!verts.empty()) ++nonempty;
    for (const auto& v : verts) {
      CHECK(region.contains(v));
      CHECK(!region.strictly_contains(v));
      std::size_t tight = 0;
      for (const auto& h : region.halfspaces())
        if (h.normal.dot(v) == h.offset) ++tight;
      CHECK(tight >= 2);
    }
    // Strict membership always implies membership.
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        if (region.strictly_contains(v2(a, b))) CHECK(region.contains(v2(a, b)));
  }
  CHECK(nonempty > 5);
}

TEST_CASE("boundary points lie on facets and vice versa") {
  const auto p = unit_square();
  const auto fs = facets(p);
  for (long num = -2; num <= 6; ++num) {
    for (long den = 1; den <= 2; ++den) {
      for (long num2 = -2; num2 <= 6; ++num2) {
        const Vector x{Rational(num, den * 2), Rational(num2, den * 2)};
        const bool boundary = p.contains(x) && !p.strictly_contains(x);
        bool on_some_facet = false;
        for (const auto& [h, facet] : fs) {
          (void)h;
          if (facet.contains(x)) on_some_facet = true;
        }
        CHECK(boundary == on_some_facet);
      }
    }
  }
}

TEST_CASE("exists_strict distinguishes implicit equalities") {
  const auto p = slab2();
  // Points of the slab with x1+x2 strictly below 2 exist.
  CHECK(exists_strict(p, Vector{Rational(1), Rational(1)}, Rational(2)));
  // No point has x1+x2 < 1.
  CHECK(!exists_strict(p, Vector{Rational(1), Rational(1)}, Rational(1)));
  // Unbounded direction: points with x1 arbitrarily negative exist.
  CHECK(exists_strict(p, Vector{Rational(1), Rational(0)}, Rational(-1000)));
}
