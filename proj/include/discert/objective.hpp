#ifndef DISCERT_OBJECTIVE_HPP
#define DISCERT_OBJECTIVE_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "discert/matrix.hpp"
#include "discert/rational.hpp"
#include "discert/vector.hpp"

namespace discert {

// One piece of a max-of-affine objective: x -> <gradient, x> + offset.
struct AffinePiece {
  Vector gradient;
  Rational offset;
};

// A subgradient in the relative interior of the subdifferential at a point,
// together with the structure that certifies it: the active piece indices
// for a max-affine objective, per-term choices for a sum.
struct SubgradientChoice {
  Vector point;
  Vector subgradient;
  std::vector<std::size_t> active_pieces;
  std::vector<SubgradientChoice> term_choices;
};

// Convex objective with an exactly representable subdifferential:
// max of affine pieces, a positive-semidefinite quadratic
// x -> 1/2 x^T A x + <b, x> + c, or a finite sum of such functions.
class ConvexFunction {
 public:
  enum class Kind { MaxAffine, Quadratic, Sum };

  static ConvexFunction max_affine(std::vector<AffinePiece> pieces);
  static ConvexFunction quadratic(Matrix a, Vector b, Rational c);
  static ConvexFunction sum(std::vector<ConvexFunction> terms);

  Kind kind() const;
  std::size_t dimension() const { return dim_; }

  Rational evaluate(const Vector& x) const;

  // A point of relint(subdifferential at z): the uniform average of all
  // active-piece gradients for max-affine, the gradient for a quadratic,
  // the sum of per-term choices for a sum.
  SubgradientChoice relint_subgradient(const Vector& z) const;

  // Exact membership of a in the subdifferential at z.
  bool in_subdifferential(const Vector& z, const Vector& a) const;
  bool zero_in_subdifferential(const Vector& z) const {
    return in_subdifferential(z, Vector(dim_));
  }

  // Affine dimension of F = { x : f(x) <= t, <a, x - z> = 0 }, the smallest
  // level-set face containing z when a is a relative-interior subgradient.
  // Requires f(z) = t exactly.
  int face_dimension(const Vector& z, const Vector& a, const Rational& t) const;

  // Indices of pieces attaining the maximum at z (max-affine only).
  std::vector<std::size_t> active_pieces(const Vector& z) const;

  // Variant accessors (throw on kind mismatch).
  const std::vector<AffinePiece>& pieces() const;
  const Matrix& quadratic_matrix() const;
  const Vector& quadratic_linear() const;
  const Rational& quadratic_constant() const;
  const std::vector<ConvexFunction>& terms() const;

 private:
  struct MaxAffineData {
    std::vector<AffinePiece> pieces;
  };
  struct QuadraticData {
    Matrix a;
    Vector b;
    Rational c;
  };
  struct SumData {
    std::vector<ConvexFunction> terms;
  };

  ConvexFunction(std::size_t dim, std::variant<MaxAffineData, QuadraticData, SumData> node)
      : dim_(dim), node_(std::move(node)) {}

  std::size_t dim_;
  std::variant<MaxAffineData, QuadraticData, SumData> node_;
};

// Exact positive-semidefiniteness of a symmetric rational matrix, decided by
// pivoted elimination with nonnegative-pivot checks.
bool is_positive_semidefinite(const Matrix& a);

}  // namespace discert

#endif
