#include "discert/geometry.hpp"

#include <algorithm>
#include <functional>

#include "discert/errors.hpp"
#include "discert/linalg.hpp"
#include "discert/lp.hpp"
#include "discert/matrix.hpp"

namespace discert {

namespace {

// Visit every k-subset of [0, m) for k = 0..kmax, sizes ascending,
// lexicographic within a size. Stop early when fn returns true.
void for_each_subset(std::size_t m, std::size_t kmax,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t want) {
    if (want == 0) return fn(idx);
    for (std::size_t i = start; i + want <= m; ++i) {
      idx.push_back(i);
      if (rec(i + 1, want - 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (std::size_t k = 0; k <= std::min(kmax, m); ++k)
    if (rec(0, k)) return;
}

std::optional<Vector> solve_tight_subset(const Polyhedron& P,
                                         const std::vector<std::size_t>& subset) {
  const std::size_t n = P.dimension();
  Matrix a(subset.size(), n);
  Vector b(subset.size());
  for (std::size_t r = 0; r < subset.size(); ++r) {
    const auto& h = P.halfspaces()[subset[r]];
    for (std::size_t j = 0; j < n; ++j) a.at(r, j) = h.normal[j];
    b[r] = h.offset;
  }
  return solve_linear(a, b);
}

Polyhedron recession_cone_sliced(const Polyhedron& P, const Vector& c) {
  std::vector<Halfspace> rows;
  rows.reserve(P.halfspaces().size() + 1);
  for (const auto& h : P.halfspaces()) rows.emplace_back(h.normal, Rational(0));
  rows.emplace_back(c, Rational(-1));
  return Polyhedron(P.dimension(), std::move(rows));
}

}  // namespace

Halfspace Halfspace::normalized() const {
  mpz_class den_lcm = 1;
  for (const auto& e : normal.entries()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), e.denominator().get_mpz_t());
    den_lcm = l;
  }
  {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), offset.denominator().get_mpz_t());
    den_lcm = l;
  }
  mpz_class num_gcd = 0;
  const auto fold_gcd = [&](const Rational& e) {
    mpz_class scaled = e.numerator() * (den_lcm / e.denominator());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    num_gcd = g;
  };
  for (const auto& e : normal.entries()) fold_gcd(e);
  if (num_gcd == 0) num_gcd = 1;  // offset-only gcd would rescale a zero normal
  const Rational scale(mpq_class(den_lcm, num_gcd));
  Vector n(normal.dimension());
  for (std::size_t j = 0; j < normal.dimension(); ++j) n[j] = scale * normal[j];
  return Halfspace(std::move(n), scale * offset);
}

std::vector<Halfspace> Box::halfspaces() const {
  std::vector<Halfspace> out;
  out.reserve(2 * bounds.size());
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    Vector e(bounds.size());
    e[j] = Rational(1);
    out.emplace_back(e, bounds[j].second);
    e[j] = Rational(-1);
    out.emplace_back(e, -bounds[j].first);
  }
  return out;
}

bool Box::contains(const Vector& x) const {
  if (x.dimension() != bounds.size())
    throw DimensionMismatch("box membership dimension mismatch");
  for (std::size_t j = 0; j < bounds.size(); ++j)
    if (x[j] < bounds[j].first || bounds[j].second < x[j]) return false;
  return true;
}

bool Polyhedron::contains(const Vector& x) const {
  if (x.dimension() != dim_) throw DimensionMismatch("membership dimension mismatch");
  for (const auto& h : halfspaces_)
    if (h.offset < h.normal.dot(x)) return false;
  return true;
}

bool Polyhedron::strictly_contains(const Vector& x) const {
  if (x.dimension() != dim_) throw DimensionMismatch("membership dimension mismatch");
  for (const auto& h : halfspaces_)
    if (h.offset <= h.normal.dot(x)) return false;
  return true;
}

Polyhedron Polyhedron::with_constraint(Halfspace h) const {
  auto rows = halfspaces_;
  rows.push_back(std::move(h));
  return Polyhedron(dim_, std::move(rows));
}

Polyhedron Polyhedron::intersect(const Box& box) const {
  if (box.dimension() != dim_) throw DimensionMismatch("box dimension mismatch");
  auto rows = halfspaces_;
  for (auto& h : box.halfspaces()) rows.push_back(std::move(h));
  return Polyhedron(dim_, std::move(rows));
}

std::vector<Vector> detail::face_witnesses(const Polyhedron& P) {
  std::vector<Vector> out;
  for_each_subset(P.halfspaces().size(), P.dimension(),
                  [&](const std::vector<std::size_t>& subset) {
                    auto x = solve_tight_subset(P, subset);
                    if (x && P.contains(*x)) out.push_back(std::move(*x));
                    return false;
                  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool detail::recession_decreases(const Polyhedron& P, const Vector& c) {
  if (c.is_zero()) return false;
  return find_point(recession_cone_sliced(P, c)).has_value();
}

std::optional<Vector> find_point(const Polyhedron& P) {
  std::optional<Vector> found;
  for_each_subset(P.halfspaces().size(), P.dimension(),
                  [&](const std::vector<std::size_t>& subset) {
                    auto x = solve_tight_subset(P, subset);
                    if (x && P.contains(*x)) {
                      found = std::move(x);
                      return true;
                    }
                    return false;
                  });
  return found;
}

bool exists_strict(const Polyhedron& P, const Vector& c, const Rational& d) {
  if (c.dimension() != P.dimension())
    throw DimensionMismatch("exists_strict dimension mismatch");
  const auto witnesses = detail::face_witnesses(P);
  if (witnesses.empty()) return false;
  for (const auto& w : witnesses)
    if (c.dot(w) < d) return true;
  return detail::recession_decreases(P, c);
}

int affine_dimension(const Polyhedron& P) {
  const auto witnesses = detail::face_witnesses(P);
  if (witnesses.empty()) return -1;
  Matrix implicit_normals(0, P.dimension());
  for (const auto& h : P.halfspaces()) {
    bool strict = false;
    for (const auto& w : witnesses) {
      if (h.normal.dot(w) < h.offset) {
        strict = true;
        break;
      }
    }
    if (!strict && detail::recession_decreases(P, h.normal)) strict = true;
    if (!strict) implicit_normals.append_row(h.normal);
  }
  return static_cast<int>(P.dimension()) - static_cast<int>(rank(implicit_normals));
}

std::vector<Vector> enumerate_vertices(const Polyhedron& P,
                                       const std::optional<Box>& box) {
  const std::size_t n = P.dimension();
  const Polyhedron region = box ? P.intersect(*box) : P;
  if (!box) {
    if (!find_point(P)) return {};
    // Bounded iff the recession cone is {0}.
    for (std::size_t j = 0; j < n; ++j) {
      for (int s : {1, -1}) {
        Vector e(n);
        e[j] = Rational(s);
        if (detail::recession_decreases(P, e))
          throw UnboundedWithoutBox("vertex enumeration on an unbounded polyhedron");
      }
    }
  }

  std::vector<Vector> out;
  const auto& rows = region.halfspaces();
  std::vector<std::size_t> all(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) all[i] = i;
  std::vector<std::size_t> subset;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (subset.size() == n) {
      Matrix a(n, n);
      Vector b(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < n; ++j) a.at(r, j) = rows[subset[r]].normal[j];
        b[r] = rows[subset[r]].offset;
      }
      if (rank(a) == n) {
        auto x = solve_linear(a, b);
        if (x && region.contains(*x)) {
          std::size_t tight = 0;
          for (const auto& h : rows)
            if (h.normal.dot(*x) == h.offset) ++tight;
          if (tight < n)
            throw InternalInvariantBroken("vertex with fewer than n tight constraints");
          out.push_back(std::move(*x));
        }
      }
      return;
    }
    for (std::size_t i = start; i + (n - subset.size()) <= rows.size(); ++i) {
      subset.push_back(i);
      rec(i + 1);
      subset.pop_back();
    }
  };
  if (rows.size() >= n) rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Halfspace, Polyhedron>> facets(const Polyhedron& P) {
  if (affine_dimension(P) != static_cast<int>(P.dimension()))
    throw NotFullDimensional("facet enumeration requires a full-dimensional polyhedron");

  // Canonical constraint list: primitive integer normals, duplicates and
  // dominated parallel copies dropped.
  std::vector<Halfspace> rows;
  for (const auto& h : P.halfspaces()) {
    Halfspace c = h.normalized();
    bool keep = true;
    for (auto& r : rows) {
      if (r.normal == c.normal) {
        r.offset = std::min(r.offset, c.offset);
        keep = false;
        break;
      }
    }
    if (keep) rows.push_back(std::move(c));
  }

  // Sequential redundancy elimination: a constraint is redundant iff the
  // system of the others admits no point violating it.
  for (std::size_t i = 0; i < rows.size();) {
    std::vector<Halfspace> others;
    others.reserve(rows.size() - 1);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i) others.push_back(rows[j]);
    const Polyhedron rest(P.dimension(), others);
    const bool redundant = !exists_strict(rest, -rows[i].normal, -rows[i].offset);
    if (redundant)
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }

  std::vector<std::pair<Halfspace, Polyhedron>> out;
  out.reserve(rows.size());
  for (const auto& h : rows) {
    Polyhedron facet = Polyhedron(P.dimension(), rows)
                           .with_constraint(Halfspace(-h.normal, -h.offset));
    out.emplace_back(h, std::move(facet));
  }
  return out;
}

bool hull_membership(std::span<const Vector> points, const Vector& q) {
  if (points.empty()) throw ContractViolation("hull membership of empty point set");
  const std::size_t n = q.dimension();
  for (const auto& p : points)
    if (p.dimension() != n) throw DimensionMismatch("hull point dimension mismatch");
  for (const auto& p : points)
    if (p == q) return true;
  // Convex-combination system: sum_i w_i p_i = q, sum_i w_i = 1, w >= 0.
  Matrix e(n + 1, points.size());
  Vector d(n + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t r = 0; r < n; ++r) e.at(r, i) = points[i][r];
    e.at(n, i) = Rational(1);
  }
  for (std::size_t r = 0; r < n; ++r) d[r] = q[r];
  d[n] = Rational(1);
  return feasible_nonnegative(e, d).has_value();
}

}  // namespace discert
