#ifndef DISCERT_IO_HPP
#define DISCERT_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "discert/certificate.hpp"
#include "discert/discrete_set.hpp"
#include "discert/helly.hpp"
#include "discert/objective.hpp"

namespace discert {

// Options carried inside an instance document; CLI flags override them.
struct SolverOptions {
  long long enum_cap = kDefaultEnumCap;
  long long box_inflate = 4;
  Rational epsilon = Rational(1);
};

struct Instance {
  std::size_t dimension;
  ConvexFunction objective;
  DiscreteSet set;
  SolverOptions options;
};

// Parsed certificate document; exactly one of the outcome payloads is set.
struct CertificateDocument {
  std::string outcome;  // "certificate" | "continuous_optimum" | "infeasible"
  std::optional<StrongCertificate> certificate;
  std::optional<Rational> optimum;
  std::optional<Vector> argmin;
  std::optional<Vector> point;  // continuous optimum
  std::optional<Rational> value;
};

// All numbers in documents are integers or "p/q" strings; floats are
// rejected. Errors carry the JSON path of the offending field.
Rational json_to_rational(const nlohmann::json& v, const std::string& path);
nlohmann::json rational_to_json(const Rational& r);
nlohmann::json vector_to_json(const Vector& v);

Instance parse_instance(const nlohmann::json& j);
Instance load_instance(const std::string& path);

nlohmann::json certificate_to_json(const SolveResult& result, std::size_t dimension);
CertificateDocument parse_certificate(const nlohmann::json& j);
CertificateDocument load_certificate(const std::string& path);

WitnessConfiguration parse_witness(const nlohmann::json& j);
WitnessConfiguration load_witness(const std::string& path);

}  // namespace discert

#endif
