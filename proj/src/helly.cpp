#include "discert/helly.hpp"

#include <algorithm>

#include "discert/errors.hpp"

namespace discert {

HellyBound bound_for(const DiscreteSet& S) {
  if (S.is_explicit()) {
    return HellyBound{"explicit", static_cast<long long>(S.points().size())};
  }
  return HellyBound{"integer", 1LL << S.dimension()};
}

long long mixed_integer_bound(int continuous_dim, int integer_dim) {
  if (continuous_dim < 0 || integer_dim < 0 || integer_dim >= 62)
    throw ContractViolation("mixed bound out of supported range");
  return (1LL << integer_dim) * (continuous_dim + 1);
}

bool WitnessSet::contains(const Vector& x) const {
  if (const auto* p = std::get_if<Polyhedron>(&rep)) return p->contains(x);
  const auto& pts = std::get<std::vector<Vector>>(rep);
  if (pts.empty()) return false;
  return hull_membership(pts, x);
}

std::size_t WitnessSet::dimension() const {
  if (const auto* p = std::get_if<Polyhedron>(&rep)) return p->dimension();
  const auto& pts = std::get<std::vector<Vector>>(rep);
  return pts.empty() ? 0 : pts.front().dimension();
}

bool check_v_condition(const std::vector<Vector>& V, const DiscreteSet& S,
                       long long cap) {
  for (std::size_t i = 0; i < V.size(); ++i) {
    if (!S.contains(V[i]))
      throw VNotSubsetOfS("V point " + V[i].str() + " is not in S");
    for (std::size_t j = i + 1; j < V.size(); ++j)
      if (V[i] == V[j]) throw VNotSubsetOfS("duplicate point in V: " + V[i].str());
  }
  if (V.empty()) return true;

  // (a) conv(V) captures no point of S beyond V itself.
  for (const auto& s : S.enumerate(cap)) {
    if (std::find(V.begin(), V.end(), s) != V.end()) continue;
    if (hull_membership(V, s)) return false;
  }
  // (b) every point of V is a vertex of conv(V).
  if (V.size() >= 2) {
    for (std::size_t i = 0; i < V.size(); ++i) {
      std::vector<Vector> rest;
      rest.reserve(V.size() - 1);
      for (std::size_t j = 0; j < V.size(); ++j)
        if (j != i) rest.push_back(V[j]);
      if (hull_membership(rest, V[i])) return false;
    }
  }
  return true;
}

bool verify_witness(const WitnessConfiguration& w, long long cap) {
  for (const auto& c : w.sets) {
    const bool empty_hull = std::holds_alternative<std::vector<Vector>>(c.rep) &&
                            std::get<std::vector<Vector>>(c.rep).empty();
    if (!empty_hull && c.dimension() != w.S.dimension())
      throw DimensionMismatch("witness set dimension != S dimension");
  }
  const auto points = w.S.enumerate(cap);
  const std::size_t m = w.sets.size();

  std::vector<std::vector<bool>> member(points.size(), std::vector<bool>(m));
  for (std::size_t s = 0; s < points.size(); ++s)
    for (std::size_t i = 0; i < m; ++i) member[s][i] = w.sets[i].contains(points[s]);

  for (std::size_t s = 0; s < points.size(); ++s) {
    if (std::all_of(member[s].begin(), member[s].end(), [](bool b) { return b; }))
      return false;  // full intersection meets S
  }
  for (std::size_t j = 0; j < m; ++j) {
    bool hit = false;
    for (std::size_t s = 0; s < points.size() && !hit; ++s) {
      bool in_all_but_j = true;
      for (std::size_t i = 0; i < m; ++i)
        if (i != j && !member[s][i]) in_all_but_j = false;
      hit = in_all_but_j;
    }
    if (!hit) return false;  // leave-one-out intersection misses S
  }
  return true;
}

WitnessConfiguration leave_one_out_witness(const std::vector<Vector>& V,
                                           const DiscreteSet& S) {
  WitnessConfiguration w{{}, S};
  for (std::size_t i = 0; i < V.size(); ++i) {
    std::vector<Vector> rest;
    rest.reserve(V.size() - 1);
    for (std::size_t j = 0; j < V.size(); ++j)
      if (j != i) rest.push_back(V[j]);
    w.sets.push_back(WitnessSet{std::move(rest)});
  }
  return w;
}

}  // namespace discert
