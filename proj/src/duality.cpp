#include "discert/duality.hpp"

#include <algorithm>
#include <functional>

#include "discert/errors.hpp"
#include "discert/linalg.hpp"
#include "discert/oracles.hpp"

namespace discert {

namespace {

// Flattened objective: one combined quadratic part plus the piece lists of
// every max-affine leaf.
struct FlatObjective {
  Matrix a;
  Vector b;
  Rational c;
  std::vector<std::vector<AffinePiece>> max_leaves;
};

FlatObjective flatten(const ConvexFunction& f) {
  FlatObjective flat{Matrix::zero(f.dimension(), f.dimension()), Vector(f.dimension()),
                     Rational(0), {}};
  const std::function<void(const ConvexFunction&)> walk = [&](const ConvexFunction& g) {
    switch (g.kind()) {
      case ConvexFunction::Kind::Quadratic: {
        const Matrix& a = g.quadratic_matrix();
        for (std::size_t i = 0; i < a.rows(); ++i)
          for (std::size_t j = 0; j < a.cols(); ++j)
            flat.a.at(i, j) += a.at(i, j);
        flat.b = flat.b + g.quadratic_linear();
        flat.c += g.quadratic_constant();
        return;
      }
      case ConvexFunction::Kind::MaxAffine:
        flat.max_leaves.push_back(g.pieces());
        return;
      case ConvexFunction::Kind::Sum:
        for (const auto& t : g.terms()) walk(t);
        return;
    }
  };
  walk(f);
  return flat;
}

// Lifted constraint system over (x, t_1..t_L): the region rows plus one
// epigraph row per piece of each max-affine leaf.
std::vector<Halfspace> lifted_rows(const Polyhedron& region, const FlatObjective& flat) {
  const std::size_t n = region.dimension();
  const std::size_t total = n + flat.max_leaves.size();
  std::vector<Halfspace> rows;
  for (const auto& h : region.halfspaces()) {
    Vector v(total);
    for (std::size_t j = 0; j < n; ++j) v[j] = h.normal[j];
    rows.emplace_back(std::move(v), h.offset);
  }
  for (std::size_t l = 0; l < flat.max_leaves.size(); ++l) {
    for (const auto& piece : flat.max_leaves[l]) {
      Vector v(total);
      for (std::size_t j = 0; j < n; ++j) v[j] = piece.gradient[j];
      v[n + l] = Rational(-1);
      rows.emplace_back(std::move(v), -piece.offset);
    }
  }
  return rows;
}

struct Candidate {
  Rational value;
  Vector point;  // x-part only
};

void keep_better(std::optional<Candidate>& best, Candidate cand) {
  if (!best || cand.value < best->value ||
      (cand.value == best->value && cand.point < best->point))
    best = std::move(cand);
}

// Linear objective (min t over the single-leaf epigraph): enumerate basic
// feasible points of the lifted polyhedron.
std::optional<Candidate> epigraph_vertex_minimum(const std::vector<Halfspace>& rows,
                                                 std::size_t n) {
  const std::size_t total = n + 1;
  const Polyhedron lifted(total, rows);
  std::optional<Candidate> best;
  std::vector<std::size_t> subset;
  const std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (subset.size() == total) {
      Matrix m(total, total);
      Vector rhs(total);
      for (std::size_t r = 0; r < total; ++r) {
        for (std::size_t j = 0; j < total; ++j) m.at(r, j) = rows[subset[r]].normal[j];
        rhs[r] = rows[subset[r]].offset;
      }
      if (rank(m) == total) {
        if (const auto y = solve_linear(m, rhs); y && lifted.contains(*y)) {
          Vector x(n);
          for (std::size_t j = 0; j < n; ++j) x[j] = (*y)[j];
          keep_better(best, Candidate{(*y)[n], std::move(x)});
        }
      }
      return;
    }
    for (std::size_t i = start; i + (total - subset.size()) <= rows.size(); ++i) {
      subset.push_back(i);
      rec(i + 1);
      subset.pop_back();
    }
  };
  if (rows.size() >= total) rec(0);
  return best;
}

// Convex quadratic-plus-linear objective over the lifted rows: for every
// tight subset solve the stationarity system on its affine hull and keep
// feasible solutions. The optimum lies in the relative interior of some
// face, where the gradient is orthogonal to the face's affine hull, so the
// sweep over subsets finds it.
std::optional<Candidate> stationary_face_minimum(const std::vector<Halfspace>& rows,
                                                 std::size_t n,
                                                 const FlatObjective& flat) {
  const std::size_t total = n + flat.max_leaves.size();
  const Polyhedron lifted(total, rows);

  const auto objective = [&](const Vector& y) {
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = y[j];
    Rational v = Rational(1, 2) * x.dot(flat.a.apply(x)) + flat.b.dot(x) + flat.c;
    for (std::size_t l = 0; l < flat.max_leaves.size(); ++l) v += y[n + l];
    return v;
  };

  std::optional<Candidate> best;
  std::vector<std::size_t> subset;
  const auto try_subset = [&] {
    const std::size_t m = subset.size();
    // Unknowns (y, mu): H y - R^T mu = -g, R y = rhs.
    Matrix sys(total + m, total + m);
    Vector rhs(total + m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sys.at(i, j) = flat.a.at(i, j);
      rhs[i] = -flat.b[i];
    }
    for (std::size_t l = 0; l < flat.max_leaves.size(); ++l) rhs[n + l] = Rational(-1);
    for (std::size_t r = 0; r < m; ++r) {
      const auto& row = rows[subset[r]];
      for (std::size_t j = 0; j < total; ++j) {
        sys.at(j, total + r) = -row.normal[j];
        sys.at(total + r, j) = row.normal[j];
      }
      rhs[total + r] = row.offset;
    }
    if (const auto sol = solve_linear(sys, rhs)) {
      Vector y(total);
      for (std::size_t j = 0; j < total; ++j) y[j] = (*sol)[j];
      if (lifted.contains(y)) {
        Vector x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = y[j];
        keep_better(best, Candidate{objective(y), std::move(x)});
      }
    }
  };
  const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                                std::size_t want) {
    if (want == 0) {
      try_subset();
      return;
    }
    for (std::size_t i = start; i + want <= rows.size(); ++i) {
      subset.push_back(i);
      rec(i + 1, want - 1);
      subset.pop_back();
    }
  };
  for (std::size_t k = 0; k <= std::min(total, rows.size()); ++k) rec(0, k);
  return best;
}

}  // namespace

std::pair<Rational, Vector> minimize_on_polyhedron(const ConvexFunction& f,
                                                   const Polyhedron& P,
                                                   const std::optional<Box>& box) {
  if (f.dimension() != P.dimension())
    throw DimensionMismatch("objective and polyhedron dimension differ");
  const std::size_t n = P.dimension();
  const Polyhedron region = box ? P.intersect(*box) : P;
  if (!box) {
    for (std::size_t j = 0; j < n; ++j) {
      for (int s : {1, -1}) {
        Vector e(n);
        e[j] = Rational(s);
        if (detail::recession_decreases(P, e))
          throw UnboundedWithoutBox("minimization over an unbounded polyhedron needs a box");
      }
    }
  }
  if (!find_point(region)) throw EmptyRegion("minimization over an empty region");

  const FlatObjective flat = flatten(f);
  const auto rows = lifted_rows(region, flat);

  std::optional<Candidate> best;
  const bool pure_linear_epigraph =
      flat.max_leaves.size() == 1 &&
      std::all_of(flat.b.entries().begin(), flat.b.entries().end(),
                  [](const Rational& v) { return v.is_zero(); }) &&
      rank(flat.a) == 0;
  if (pure_linear_epigraph) {
    best = epigraph_vertex_minimum(rows, n);
    if (best) best->value += flat.c;
  } else {
    best = stationary_face_minimum(rows, n, flat);
  }
  if (!best)
    throw InternalInvariantBroken("no stationary candidate on a nonempty region");
  if (f.evaluate(best->point) != best->value)
    throw InternalInvariantBroken("facet minimum does not match its witness");
  return {best->value, best->point};
}

DualBound dual_bound(const ConvexFunction& f, const Polyhedron& C,
                     const std::optional<Box>& box) {
  const auto fs = facets(C);
  if (fs.empty())
    throw ContractViolation("boundary bound needs a polyhedron with facets");
  DualBound out{{}, Rational(0)};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto [value, witness] = minimize_on_polyhedron(f, fs[i].second, box);
    out.facet_minima.push_back({i, std::move(value), std::move(witness)});
  }
  out.bound = out.facet_minima.front().value;
  for (const auto& fm : out.facet_minima) out.bound = std::min(out.bound, fm.value);
  return out;
}

Box inflated_box(const DiscreteSet& S, long long factor) {
  if (factor < 1) throw ContractViolation("box inflation factor must be >= 1");
  const Box bbox = S.bounding_box();
  std::vector<std::pair<Rational, Rational>> bounds;
  for (const auto& [lo, hi] : bbox.bounds) {
    const Rational center = (lo + hi) / Rational(2);
    Rational half = (hi - lo) / Rational(2) * Rational(factor);
    if (half.is_zero()) half = Rational(factor);
    bounds.emplace_back(center - half, center + half);
  }
  return Box(std::move(bounds));
}

DualReport duality_report(const StrongCertificate& cert, const ConvexFunction& f,
                          const DiscreteSet& S, const std::optional<Box>& box,
                          long long box_inflate, long long cap) {
  const Box used = box ? *box : inflated_box(S, box_inflate);
  DualBound db = dual_bound(f, cert.polyhedron, used);
  const Rational primal = *std::min_element(cert.values.begin(), cert.values.end());
  const Rational gap = primal - db.bound;
  if (gap < Rational(0)) {
    // A boundary bound above a feasible value contradicts the separation
    // argument, so the interior must contain a point of S.
    if (const auto witness = oracle::brute_sfree(cert.polyhedron, S, cap))
      throw NotSFree("boundary bound " + db.bound.str() + " exceeds feasible value " +
                         primal.str() + "; interior contains " + witness->str(),
                     *witness);
    throw InternalInvariantBroken("boundary bound exceeds the discrete optimum");
  }
  return DualReport{std::move(db.facet_minima), std::move(db.bound), primal,
                    gap,  gap.is_zero(),        used};
}

}  // namespace discert
