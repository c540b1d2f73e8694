#include "discert/discrete_set.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "discert/errors.hpp"

namespace discert {

DiscreteSet DiscreteSet::explicit_points(std::vector<Vector> points) {
  if (points.empty())
    throw ContractViolation("explicit point set must be nonempty");
  const std::size_t n = points.front().dimension();
  for (const auto& p : points)
    if (p.dimension() != n) throw DimensionMismatch("points of unequal dimension");
  std::vector<Vector> dedup;
  for (auto& p : points)
    if (std::find(dedup.begin(), dedup.end(), p) == dedup.end())
      dedup.push_back(std::move(p));
  return DiscreteSet(n, Explicit{std::move(dedup)});
}

DiscreteSet DiscreteSet::integer_polytope(
    Polyhedron constraints, std::vector<std::pair<long long, long long>> box) {
  if (constraints.dimension() != box.size())
    throw DimensionMismatch("box dimension != constraint dimension");
  for (const auto& [lo, hi] : box)
    if (hi < lo) throw ContractViolation("integer box with lo > hi");
  const std::size_t n = box.size();
  return DiscreteSet(n, Lattice{std::move(constraints), std::move(box)});
}

bool DiscreteSet::contains(const Vector& x) const {
  if (x.dimension() != dim_) throw DimensionMismatch("set membership dimension mismatch");
  if (const auto* e = std::get_if<Explicit>(&rep_)) {
    return std::find(e->points.begin(), e->points.end(), x) != e->points.end();
  }
  const auto& l = std::get<Lattice>(rep_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!x[j].is_integer()) return false;
    if (x[j] < Rational(l.box[j].first) || Rational(l.box[j].second) < x[j]) return false;
  }
  return l.constraints.contains(x);
}

std::vector<Vector> DiscreteSet::enumerate(long long cap) const {
  if (const auto* e = std::get_if<Explicit>(&rep_)) return e->points;
  const auto& l = std::get<Lattice>(rep_);

  mpz_class volume = 1;
  for (const auto& [lo, hi] : l.box)
    volume *= mpz_class(static_cast<long>(hi)) - mpz_class(static_cast<long>(lo)) + 1;
  if (volume > static_cast<long>(cap))
    throw BoxTooLarge("integer box volume " + volume.get_str() +
                      " exceeds enumeration cap " + std::to_string(cap));

  std::vector<Vector> out;
  std::vector<long long> cur(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cur[j] = l.box[j].first;
  for (;;) {
    Vector x(dim_);
    for (std::size_t j = 0; j < dim_; ++j) x[j] = Rational(cur[j]);
    if (l.constraints.contains(x)) out.push_back(std::move(x));
    // Odometer, last coordinate fastest: lexicographic ascending output.
    std::size_t j = dim_;
    while (j > 0) {
      --j;
      if (cur[j] < l.box[j].second) {
        ++cur[j];
        for (std::size_t k = j + 1; k < dim_; ++k) cur[k] = l.box[k].first;
        break;
      }
      if (j == 0) return out;
    }
    if (dim_ == 0) return out;
  }
}

Box DiscreteSet::bounding_box() const {
  std::vector<std::pair<Rational, Rational>> bounds;
  if (const auto* e = std::get_if<Explicit>(&rep_)) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Rational lo = e->points.front()[j], hi = lo;
      for (const auto& p : e->points) {
        lo = std::min(lo, p[j]);
        hi = std::max(hi, p[j]);
      }
      bounds.emplace_back(lo, hi);
    }
  } else {
    for (const auto& [lo, hi] : std::get<Lattice>(rep_).box)
      bounds.emplace_back(Rational(lo), Rational(hi));
  }
  return Box(std::move(bounds));
}

namespace {

// Face dimension depends only on the face polyhedron, which for the pure
// variants is determined by the subgradient structure; caching by that key
// avoids recomputing affine dimensions across value-tied candidates.
std::string face_cache_key(const ConvexFunction& f, const SubgradientChoice& choice) {
  switch (f.kind()) {
    case ConvexFunction::Kind::Quadratic:
      return "q|" + choice.subgradient.str();
    case ConvexFunction::Kind::MaxAffine: {
      std::string key = "m|";
      for (std::size_t j : choice.active_pieces) key += std::to_string(j) + ",";
      return key;
    }
    case ConvexFunction::Kind::Sum:
      return {};  // sums are not cached
  }
  return {};
}

}  // namespace

std::optional<OracleResult> argmin_interior(const ConvexFunction& f,
                                            const DiscreteSet& S, const Polyhedron& Q,
                                            long long cap) {
  std::optional<Rational> best;
  std::vector<Vector> candidates;
  for (auto& s : S.enumerate(cap)) {
    if (!Q.strictly_contains(s)) continue;
    Rational v = f.evaluate(s);
    if (!best || v < *best) {
      best = std::move(v);
      candidates.clear();
      candidates.push_back(std::move(s));
    } else if (v == *best) {
      candidates.push_back(std::move(s));
    }
  }
  if (!best) return std::nullopt;

  std::map<std::string, int> cache;
  OracleResult result{Vector(), Rational(), -1, candidates.size()};
  for (const auto& s : candidates) {
    const SubgradientChoice choice = f.relint_subgradient(s);
    const std::string key = face_cache_key(f, choice);
    int dim;
    if (const auto it = cache.find(key); !key.empty() && it != cache.end()) {
      dim = it->second;
    } else {
      dim = f.face_dimension(s, choice.subgradient, *best);
      if (!key.empty()) cache[key] = dim;
    }
    if (dim > result.face_dim || (dim == result.face_dim && s < result.minimizer)) {
      result.minimizer = s;
      result.face_dim = dim;
    }
  }
  result.value = *best;
  return result;
}

}  // namespace discert
