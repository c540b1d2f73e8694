#include "discert/objective.hpp"

#include <algorithm>

#include "discert/errors.hpp"
#include "discert/geometry.hpp"
#include "discert/linalg.hpp"
#include "discert/lp.hpp"

namespace discert {

namespace {

// Flattened view of a sum: the active gradients of each max-affine leaf
// (each contributing one convex-combination block) plus the accumulated
// gradients of the quadratic leaves.
struct SubdifferentialParts {
  std::vector<std::vector<Vector>> max_leaf_gradients;
  Vector quadratic_gradient;
};

}  // namespace

bool is_positive_semidefinite(const Matrix& a) {
  if (!a.is_symmetric()) return false;
  Matrix m = a;
  std::vector<std::size_t> active(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) active[i] = i;

  while (!active.empty()) {
    std::size_t pivot = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      const Rational& d = m.at(active[k], active[k]);
      if (d < Rational(0)) return false;
      if (d > Rational(0) && pivot == active.size()) pivot = k;
    }
    if (pivot == active.size()) {
      // All remaining diagonal entries vanish; PSD forces the block to be 0.
      for (std::size_t j : active)
        for (std::size_t k : active)
          if (!m.at(j, k).is_zero()) return false;
      return true;
    }
    const std::size_t p = active[pivot];
    const Rational d = m.at(p, p);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (std::size_t j : active)
      for (std::size_t k : active)
        m.at(j, k) -= m.at(j, p) * m.at(k, p) / d;
  }
  return true;
}

ConvexFunction ConvexFunction::max_affine(std::vector<AffinePiece> pieces) {
  if (pieces.empty())
    throw ContractViolation("max-affine objective needs at least one piece");
  const std::size_t n = pieces.front().gradient.dimension();
  for (const auto& p : pieces)
    if (p.gradient.dimension() != n)
      throw DimensionMismatch("max-affine pieces of unequal dimension");
  return ConvexFunction(n, MaxAffineData{std::move(pieces)});
}

ConvexFunction ConvexFunction::quadratic(Matrix a, Vector b, Rational c) {
  if (a.rows() != a.cols() || a.rows() != b.dimension())
    throw DimensionMismatch("quadratic objective with inconsistent dimensions");
  if (!a.is_symmetric())
    throw ContractViolation("quadratic matrix must be symmetric");
  if (!is_positive_semidefinite(a))
    throw ContractViolation("quadratic matrix must be positive semidefinite");
  const std::size_t n = b.dimension();
  return ConvexFunction(n, QuadraticData{std::move(a), std::move(b), std::move(c)});
}

ConvexFunction ConvexFunction::sum(std::vector<ConvexFunction> terms) {
  if (terms.empty()) throw ContractViolation("sum objective needs at least one term");
  const std::size_t n = terms.front().dimension();
  for (const auto& t : terms)
    if (t.dimension() != n)
      throw DimensionMismatch("sum terms of unequal dimension");
  return ConvexFunction(n, SumData{std::move(terms)});
}

ConvexFunction::Kind ConvexFunction::kind() const {
  if (std::holds_alternative<MaxAffineData>(node_)) return Kind::MaxAffine;
  if (std::holds_alternative<QuadraticData>(node_)) return Kind::Quadratic;
  return Kind::Sum;
}

const std::vector<AffinePiece>& ConvexFunction::pieces() const {
  return std::get<MaxAffineData>(node_).pieces;
}
const Matrix& ConvexFunction::quadratic_matrix() const {
  return std::get<QuadraticData>(node_).a;
}
const Vector& ConvexFunction::quadratic_linear() const {
  return std::get<QuadraticData>(node_).b;
}
const Rational& ConvexFunction::quadratic_constant() const {
  return std::get<QuadraticData>(node_).c;
}
const std::vector<ConvexFunction>& ConvexFunction::terms() const {
  return std::get<SumData>(node_).terms;
}

Rational ConvexFunction::evaluate(const Vector& x) const {
  if (x.dimension() != dim_) throw DimensionMismatch("evaluate dimension mismatch");
  if (const auto* ma = std::get_if<MaxAffineData>(&node_)) {
    Rational best = ma->pieces.front().gradient.dot(x) + ma->pieces.front().offset;
    for (std::size_t j = 1; j < ma->pieces.size(); ++j)
      best = std::max(best, ma->pieces[j].gradient.dot(x) + ma->pieces[j].offset);
    return best;
  }
  if (const auto* q = std::get_if<QuadraticData>(&node_)) {
    return Rational(1, 2) * x.dot(q->a.apply(x)) + q->b.dot(x) + q->c;
  }
  Rational acc;
  for (const auto& t : std::get<SumData>(node_).terms) acc += t.evaluate(x);
  return acc;
}

std::vector<std::size_t> ConvexFunction::active_pieces(const Vector& z) const {
  const auto& ps = pieces();
  const Rational value = evaluate(z);
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < ps.size(); ++j)
    if (ps[j].gradient.dot(z) + ps[j].offset == value) active.push_back(j);
  return active;
}

SubgradientChoice ConvexFunction::relint_subgradient(const Vector& z) const {
  if (z.dimension() != dim_)
    throw DimensionMismatch("relint_subgradient dimension mismatch");
  SubgradientChoice choice;
  choice.point = z;
  if (std::holds_alternative<MaxAffineData>(node_)) {
    choice.active_pieces = active_pieces(z);
    Vector a(dim_);
    for (std::size_t j : choice.active_pieces) a = a + pieces()[j].gradient;
    choice.subgradient =
        Rational(1, static_cast<long>(choice.active_pieces.size())) * a;
    return choice;
  }
  if (const auto* q = std::get_if<QuadraticData>(&node_)) {
    choice.subgradient = q->a.apply(z) + q->b;
    return choice;
  }
  Vector a(dim_);
  for (const auto& t : std::get<SumData>(node_).terms) {
    choice.term_choices.push_back(t.relint_subgradient(z));
    a = a + choice.term_choices.back().subgradient;
  }
  choice.subgradient = std::move(a);
  return choice;
}

namespace {

void collect_parts(const ConvexFunction& f, const Vector& z, SubdifferentialParts& out) {
  switch (f.kind()) {
    case ConvexFunction::Kind::MaxAffine: {
      std::vector<Vector> grads;
      for (std::size_t j : f.active_pieces(z)) grads.push_back(f.pieces()[j].gradient);
      out.max_leaf_gradients.push_back(std::move(grads));
      return;
    }
    case ConvexFunction::Kind::Quadratic:
      out.quadratic_gradient =
          out.quadratic_gradient + f.quadratic_matrix().apply(z) + f.quadratic_linear();
      return;
    case ConvexFunction::Kind::Sum:
      for (const auto& t : f.terms()) collect_parts(t, z, out);
      return;
  }
}

}  // namespace

bool ConvexFunction::in_subdifferential(const Vector& z, const Vector& a) const {
  if (z.dimension() != dim_ || a.dimension() != dim_)
    throw DimensionMismatch("in_subdifferential dimension mismatch");
  SubdifferentialParts parts;
  parts.quadratic_gradient = Vector(dim_);
  collect_parts(*this, z, parts);

  const Vector target = a - parts.quadratic_gradient;
  if (parts.max_leaf_gradients.empty()) return target.is_zero();
  if (parts.max_leaf_gradients.size() == 1)
    return hull_membership(parts.max_leaf_gradients.front(), target);

  // One convex-combination block per max-affine leaf; blocks must sum to the
  // target gradient.
  std::size_t cols = 0;
  for (const auto& leaf : parts.max_leaf_gradients) cols += leaf.size();
  Matrix e(dim_ + parts.max_leaf_gradients.size(), cols);
  Vector d(dim_ + parts.max_leaf_gradients.size());
  std::size_t col = 0;
  for (std::size_t leaf = 0; leaf < parts.max_leaf_gradients.size(); ++leaf) {
    for (const auto& g : parts.max_leaf_gradients[leaf]) {
      for (std::size_t r = 0; r < dim_; ++r) e.at(r, col) = g[r];
      e.at(dim_ + leaf, col) = Rational(1);
      ++col;
    }
    d[dim_ + leaf] = Rational(1);
  }
  for (std::size_t r = 0; r < dim_; ++r) d[r] = target[r];
  return feasible_nonnegative(e, d).has_value();
}

namespace {

void append_equality(std::vector<Halfspace>& rows, const Vector& normal,
                     const Rational& rhs) {
  if (normal.is_zero()) return;
  rows.emplace_back(normal, rhs);
  rows.emplace_back(-normal, -rhs);
}

// Constraint rows of the set where this term's subgradient inequality at z is
// tight. For a quadratic term that is { x : A (x - z) = 0 }; for a max-affine
// term every piece active at z stays active and dominates the rest.
void append_tight_rows(const ConvexFunction& f, const Vector& z,
                       std::vector<Halfspace>& rows) {
  switch (f.kind()) {
    case ConvexFunction::Kind::Quadratic: {
      const Matrix& a = f.quadratic_matrix();
      const Vector az = a.apply(z);
      for (std::size_t i = 0; i < a.rows(); ++i)
        append_equality(rows, a.row(i), az[i]);
      return;
    }
    case ConvexFunction::Kind::MaxAffine: {
      const auto active = f.active_pieces(z);
      const auto& ps = f.pieces();
      const auto& base = ps[active.front()];
      for (std::size_t j : active) {
        if (j == active.front()) continue;
        append_equality(rows, ps[j].gradient - base.gradient, base.offset - ps[j].offset);
      }
      std::vector<bool> is_active(ps.size(), false);
      for (std::size_t j : active) is_active[j] = true;
      for (std::size_t l = 0; l < ps.size(); ++l) {
        if (is_active[l]) continue;
        const Vector normal = ps[l].gradient - base.gradient;
        if (normal.is_zero()) continue;  // dominated everywhere
        rows.emplace_back(normal, base.offset - ps[l].offset);
      }
      return;
    }
    case ConvexFunction::Kind::Sum:
      for (const auto& t : f.terms()) append_tight_rows(t, z, rows);
      return;
  }
}

}  // namespace

int ConvexFunction::face_dimension(const Vector& z, const Vector& a,
                                   const Rational& t) const {
  if (evaluate(z) != t)
    throw PreconditionViolated("face_dimension requires f(z) = t");
  if (const auto* q = std::get_if<QuadraticData>(&node_)) {
    // On the hyperplane, f(x) = t + 1/2 (x-z)^T A (x-z), so the face is
    // z + (ker A intersected with the hyperplane through the origin).
    Matrix stacked = q->a;
    if (!a.is_zero()) stacked.append_row(a);
    return static_cast<int>(dim_) - static_cast<int>(rank(stacked));
  }
  std::vector<Halfspace> rows;
  if (std::holds_alternative<MaxAffineData>(node_)) {
    for (const auto& p : pieces()) {
      if (p.gradient.is_zero()) continue;  // constant piece, p.offset <= t
      rows.emplace_back(p.gradient, t - p.offset);
    }
  } else {
    append_tight_rows(*this, z, rows);
  }
  append_equality(rows, a, a.dot(z));
  return affine_dimension(Polyhedron(dim_, std::move(rows)));
}

}  // namespace discert
