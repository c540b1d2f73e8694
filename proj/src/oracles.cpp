#include "discert/oracles.hpp"

#include "discert/errors.hpp"

namespace discert::oracle {

BruteMin brute_min(const ConvexFunction& f, const DiscreteSet& S, long long cap) {
  const auto points = S.enumerate(cap);
  if (points.empty()) throw EmptySet("brute_min over an empty set");
  std::optional<BruteMin> best;
  for (const auto& s : points) {
    Rational v = f.evaluate(s);
    if (!best || v < best->value || (v == best->value && s < best->minimizer))
      best = BruteMin{std::move(v), s};
  }
  return *best;
}

std::optional<Vector> brute_sfree(const Polyhedron& Q, const DiscreteSet& S,
                                  long long cap) {
  for (const auto& s : S.enumerate(cap))
    if (Q.strictly_contains(s)) return s;
  return std::nullopt;
}

Rational grid_lower_bound(const ConvexFunction& f, const Polyhedron& P,
                          const Box& box, const Rational& step) {
  if (step <= Rational(0)) throw ContractViolation("grid step must be positive");
  if (box.dimension() != P.dimension())
    throw DimensionMismatch("grid box dimension mismatch");
  const std::size_t n = P.dimension();

  std::vector<long> counts(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational width = box.bounds[j].second - box.bounds[j].first;
    // floor(width / step) + 1 grid points along coordinate j.
    const Rational q = width / step;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    counts[j] = static_cast<long>(fl.get_si()) + 1;
  }

  std::optional<Rational> best;
  std::vector<long> idx(n, 0);
  for (;;) {
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j)
      x[j] = box.bounds[j].first + Rational(idx[j]) * step;
    if (P.contains(x)) {
      Rational v = f.evaluate(x);
      if (!best || v < *best) best = std::move(v);
    }
    std::size_t j = n;
    bool advanced = false;
    while (j > 0) {
      --j;
      if (idx[j] + 1 < counts[j]) {
        ++idx[j];
        for (std::size_t k = j + 1; k < n; ++k) idx[k] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  if (!best) throw EmptyRegion("no grid point inside the region");
  return *best;
}

}  // namespace discert::oracle
