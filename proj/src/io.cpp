#include "discert/io.hpp"

#include <fstream>

#include "discert/errors.hpp"
#include "discert/version.hpp"

namespace discert {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

long long to_integer(const json& v, const std::string& path) {
  if (v.is_number_float()) throw ParseError(path + ": floats not accepted; use p/q");
  if (!v.is_number_integer()) throw ParseError(path + ": expected an integer");
  return v.get<long long>();
}

Vector to_vector(const json& v, std::size_t dim, const std::string& path) {
  if (!v.is_array() || v.size() != dim)
    throw ParseError(path + ": expected an array of length " + std::to_string(dim));
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    out[i] = json_to_rational(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

Halfspace to_halfspace(const json& v, std::size_t dim, const std::string& path) {
  Vector normal = to_vector(require(v, "normal", path), dim, path + ".normal");
  Rational offset = json_to_rational(require(v, "offset", path), path + ".offset");
  if (normal.is_zero()) throw ParseError(path + ".normal: zero normal is not a constraint");
  return Halfspace(std::move(normal), std::move(offset));
}

Polyhedron to_polyhedron(const json& v, std::size_t dim, const std::string& path) {
  if (!v.is_array()) throw ParseError(path + ": expected an array of halfspaces");
  std::vector<Halfspace> rows;
  for (std::size_t i = 0; i < v.size(); ++i)
    rows.push_back(to_halfspace(v[i], dim, path + "[" + std::to_string(i) + "]"));
  return Polyhedron(dim, std::move(rows));
}

ConvexFunction to_objective(const json& v, std::size_t dim, const std::string& path) {
  const std::string type = require(v, "type", path).get<std::string>();
  if (type == "max_affine") {
    const json& pieces = require(v, "pieces", path);
    if (!pieces.is_array() || pieces.empty())
      throw ParseError(path + ".pieces: expected a nonempty array");
    std::vector<AffinePiece> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::string p = path + ".pieces[" + std::to_string(i) + "]";
      out.push_back({to_vector(require(pieces[i], "gradient", p), dim, p + ".gradient"),
                     json_to_rational(require(pieces[i], "offset", p), p + ".offset")});
    }
    return ConvexFunction::max_affine(std::move(out));
  }
  if (type == "quadratic") {
    const json& rows = require(v, "matrix", path);
    if (!rows.is_array() || rows.size() != dim)
      throw ParseError(path + ".matrix: expected " + std::to_string(dim) + " rows");
    Matrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string p = path + ".matrix[" + std::to_string(i) + "]";
      const Vector row = to_vector(rows[i], dim, p);
      for (std::size_t j = 0; j < dim; ++j) a.at(i, j) = row[j];
    }
    Vector b = to_vector(require(v, "linear", path), dim, path + ".linear");
    Rational c = json_to_rational(require(v, "constant", path), path + ".constant");
    try {
      return ConvexFunction::quadratic(std::move(a), std::move(b), std::move(c));
    } catch (const ContractViolation& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (type == "sum") {
    const json& terms = require(v, "terms", path);
    if (!terms.is_array() || terms.empty())
      throw ParseError(path + ".terms: expected a nonempty array");
    std::vector<ConvexFunction> out;
    for (std::size_t i = 0; i < terms.size(); ++i)
      out.push_back(to_objective(terms[i], dim, path + ".terms[" + std::to_string(i) + "]"));
    return ConvexFunction::sum(std::move(out));
  }
  throw ParseError(path + ".type: unknown objective type '" + type + "'");
}

DiscreteSet to_set(const json& v, std::size_t dim, const std::string& path) {
  const std::string type = require(v, "type", path).get<std::string>();
  if (type == "points") {
    const json& pts = require(v, "points", path);
    if (!pts.is_array() || pts.empty())
      throw ParseError(path + ".points: expected a nonempty array");
    std::vector<Vector> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
      out.push_back(to_vector(pts[i], dim, path + ".points[" + std::to_string(i) + "]"));
    return DiscreteSet::explicit_points(std::move(out));
  }
  if (type == "integer_polytope") {
    const json& box = require(v, "box", path);
    if (!box.is_array() || box.size() != dim)
      throw ParseError(path + ".box: expected " + std::to_string(dim) + " coordinate ranges");
    std::vector<std::pair<long long, long long>> bounds;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string p = path + ".box[" + std::to_string(i) + "]";
      if (!box[i].is_array() || box[i].size() != 2)
        throw ParseError(p + ": expected [lo, hi]");
      const long long lo = to_integer(box[i][0], p + "[0]");
      const long long hi = to_integer(box[i][1], p + "[1]");
      if (hi < lo) throw ParseError(p + ": lo > hi");
      bounds.emplace_back(lo, hi);
    }
    Polyhedron constraints(dim);
    if (v.contains("constraints"))
      constraints = to_polyhedron(v["constraints"], dim, path + ".constraints");
    return DiscreteSet::integer_polytope(std::move(constraints), std::move(bounds));
  }
  if (type == "mixed_integer") {
    throw ParseError(path +
                     ".type: mixed-integer sets with continuous factors are not "
                     "supported; this tool only handles finite discrete sets "
                     "(explicit points or integer points in a box)");
  }
  throw ParseError(path + ".type: unknown set type '" + type + "'");
}

json halfspace_to_json(const Halfspace& h) {
  return json{{"normal", vector_to_json(h.normal)}, {"offset", rational_to_json(h.offset)}};
}

}  // namespace

Rational json_to_rational(const json& v, const std::string& path) {
  if (v.is_number_float()) throw ParseError(path + ": floats not accepted; use p/q");
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  throw ParseError(path + ": expected an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p())
    return json(static_cast<long long>(r.numerator().get_si()));
  return json(r.str());
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& e : v.entries()) out.push_back(rational_to_json(e));
  return out;
}

Instance parse_instance(const json& j) {
  const long long dim = to_integer(require(j, "dimension", "$"), "$.dimension");
  if (dim < 1 || dim > 12)
    throw ParseError("$.dimension: expected an integer in [1, 12]");
  const auto n = static_cast<std::size_t>(dim);
  ConvexFunction f = to_objective(require(j, "objective", "$"), n, "$.objective");
  DiscreteSet s = to_set(require(j, "set", "$"), n, "$.set");
  SolverOptions opts;
  if (j.contains("options")) {
    const json& o = j["options"];
    if (o.contains("enum_cap")) opts.enum_cap = to_integer(o["enum_cap"], "$.options.enum_cap");
    if (o.contains("box_inflate"))
      opts.box_inflate = to_integer(o["box_inflate"], "$.options.box_inflate");
    if (o.contains("epsilon"))
      opts.epsilon = json_to_rational(o["epsilon"], "$.options.epsilon");
    if (opts.enum_cap < 1) throw ParseError("$.options.enum_cap: must be positive");
    if (opts.box_inflate < 1) throw ParseError("$.options.box_inflate: must be >= 1");
    if (opts.epsilon < Rational(0)) throw ParseError("$.options.epsilon: must be >= 0");
  }
  return Instance{n, std::move(f), std::move(s), std::move(opts)};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_instance(j);
}

json certificate_to_json(const SolveResult& result, std::size_t dimension) {
  json doc;
  doc["format"] = "discert-certificate";
  doc["tool_version"] = kToolVersion;
  doc["dimension"] = dimension;

  json iterations = json::array();
  for (const auto& it : result.iterations) {
    iterations.push_back({{"point", vector_to_json(it.point)},
                          {"value", rational_to_json(it.value)},
                          {"face_dim", it.face_dim},
                          {"tie_set_size", it.tie_set_size}});
  }
  doc["provenance"] = {
      {"tie_break", "max face dimension, then lexicographically smallest point"},
      {"iterations", std::move(iterations)}};

  if (const auto* cert = std::get_if<CertificateOutcome>(&result.outcome)) {
    doc["outcome"] = "certificate";
    json points = json::array(), subgradients = json::array(), values = json::array();
    for (const auto& z : cert->certificate.points) points.push_back(vector_to_json(z));
    for (const auto& a : cert->certificate.subgradients)
      subgradients.push_back(vector_to_json(a));
    for (const auto& v : cert->certificate.values) values.push_back(rational_to_json(v));
    json polyhedron = json::array();
    for (const auto& h : cert->certificate.polyhedron.halfspaces())
      polyhedron.push_back(halfspace_to_json(h));
    doc["points"] = std::move(points);
    doc["subgradients"] = std::move(subgradients);
    doc["values"] = std::move(values);
    doc["polyhedron"] = std::move(polyhedron);
    doc["optimum"] = rational_to_json(cert->optimum);
    doc["argmin"] = vector_to_json(cert->argmin);
  } else if (const auto* cont = std::get_if<ContinuousOptimum>(&result.outcome)) {
    doc["outcome"] = "continuous_optimum";
    doc["point"] = vector_to_json(cont->point);
    doc["value"] = rational_to_json(cont->value);
    doc["note"] = cont->note;
  } else {
    doc["outcome"] = "infeasible";
    doc["note"] = "the discrete set has no points; all of space is free of it";
  }
  return doc;
}

CertificateDocument parse_certificate(const json& j) {
  const long long dim = to_integer(require(j, "dimension", "$"), "$.dimension");
  if (dim < 1) throw ParseError("$.dimension: expected a positive integer");
  const auto n = static_cast<std::size_t>(dim);
  CertificateDocument doc;
  doc.outcome = require(j, "outcome", "$").get<std::string>();
  if (doc.outcome == "certificate") {
    const json& pts = require(j, "points", "$");
    const json& subs = require(j, "subgradients", "$");
    const json& vals = require(j, "values", "$");
    if (!pts.is_array() || !subs.is_array() || !vals.is_array() ||
        pts.size() != subs.size() || pts.size() != vals.size() || pts.empty())
      throw ParseError("$: points/subgradients/values must be nonempty arrays of equal length");
    std::vector<Vector> points, subgradients;
    std::vector<Rational> values;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      points.push_back(to_vector(pts[i], n, "$.points[" + std::to_string(i) + "]"));
      subgradients.push_back(
          to_vector(subs[i], n, "$.subgradients[" + std::to_string(i) + "]"));
      values.push_back(json_to_rational(vals[i], "$.values[" + std::to_string(i) + "]"));
    }
    Polyhedron q = to_polyhedron(require(j, "polyhedron", "$"), n, "$.polyhedron");
    try {
      doc.certificate = StrongCertificate(std::move(points), std::move(subgradients),
                                          std::move(values), std::move(q));
    } catch (const Error& e) {
      throw ParseError(std::string("$: ") + e.what());
    }
    doc.optimum = json_to_rational(require(j, "optimum", "$"), "$.optimum");
    doc.argmin = to_vector(require(j, "argmin", "$"), n, "$.argmin");
  } else if (doc.outcome == "continuous_optimum") {
    doc.point = to_vector(require(j, "point", "$"), n, "$.point");
    doc.value = json_to_rational(require(j, "value", "$"), "$.value");
  } else if (doc.outcome != "infeasible") {
    throw ParseError("$.outcome: unknown outcome '" + doc.outcome + "'");
  }
  return doc;
}

CertificateDocument load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open certificate file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_certificate(j);
}

WitnessConfiguration parse_witness(const json& j) {
  const long long dim = to_integer(require(j, "dimension", "$"), "$.dimension");
  if (dim < 1) throw ParseError("$.dimension: expected a positive integer");
  const auto n = static_cast<std::size_t>(dim);
  DiscreteSet s = to_set(require(j, "set", "$"), n, "$.set");
  const json& sets = require(j, "convex_sets", "$");
  if (!sets.is_array() || sets.empty())
    throw ParseError("$.convex_sets: expected a nonempty array");
  WitnessConfiguration w{{}, std::move(s)};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string path = "$.convex_sets[" + std::to_string(i) + "]";
    const std::string type = require(sets[i], "type", path).get<std::string>();
    if (type == "hull") {
      const json& pts = require(sets[i], "points", path);
      if (!pts.is_array()) throw ParseError(path + ".points: expected an array");
      std::vector<Vector> hull;
      for (std::size_t p = 0; p < pts.size(); ++p)
        hull.push_back(to_vector(pts[p], n, path + ".points[" + std::to_string(p) + "]"));
      w.sets.push_back(WitnessSet{std::move(hull)});
    } else if (type == "polyhedron") {
      w.sets.push_back(WitnessSet{
          to_polyhedron(require(sets[i], "constraints", path), n, path + ".constraints")});
    } else {
      throw ParseError(path + ".type: unknown convex set type '" + type + "'");
    }
  }
  return w;
}

WitnessConfiguration load_witness(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open witness file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_witness(j);
}

}  // namespace discert
