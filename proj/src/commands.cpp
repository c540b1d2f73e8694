#include "discert/commands.hpp"

#include <fstream>
#include <iostream>

#include "discert/duality.hpp"
#include "discert/errors.hpp"
#include "discert/io.hpp"
#include "discert/oracles.hpp"

namespace discert {

using nlohmann::json;

namespace {

void emit_error(const std::string& type, const std::string& message) {
  const json err = {{"error", {{"type", type}, {"message", message}}}};
  std::cerr << err.dump(2) << "\n";
}

// Maps a thrown error to the exit code contract. Anything unexpected is
// reported as an internal error, still without crashing.
int run_guarded(const std::string& log_level, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    emit_error("parse_error", e.what());
  } catch (const BoxTooLarge& e) {
    emit_error("box_too_large", e.what());
  } catch (const DimensionMismatch& e) {
    emit_error("dimension_mismatch", e.what());
  } catch (const InternalInvariantBroken& e) {
    emit_error("internal_invariant_broken", e.what());
  } catch (const Error& e) {
    emit_error("error", e.what());
  } catch (const std::exception& e) {
    emit_error("internal_error", e.what());
  }
  (void)log_level;
  return kExitUsage;
}

SolverOptions effective_options(const Instance& instance, const CliConfig& config) {
  SolverOptions opts = instance.options;
  if (config.enum_cap) opts.enum_cap = *config.enum_cap;
  if (config.box_inflate) opts.box_inflate = *config.box_inflate;
  if (config.epsilon) opts.epsilon = *config.epsilon;
  return opts;
}

json facet_minima_to_json(const std::vector<FacetMinimum>& minima) {
  json arr = json::array();
  for (const auto& fm : minima) {
    arr.push_back({{"facet", fm.facet_index},
                   {"value", rational_to_json(fm.value)},
                   {"minimizer", vector_to_json(fm.minimizer)}});
  }
  return arr;
}

json box_to_json(const Box& box) {
  json arr = json::array();
  for (const auto& [lo, hi] : box.bounds)
    arr.push_back({rational_to_json(lo), rational_to_json(hi)});
  return arr;
}

}  // namespace

int cmd_solve(const std::string& instance_path, const std::string& output_path,
              const CliConfig& config) {
  return run_guarded(config.log_level, [&] {
    const Instance instance = load_instance(instance_path);
    const SolverOptions opts = effective_options(instance, config);

    const SolveResult result = solve(instance.objective, instance.set, opts.enum_cap);
    json doc = certificate_to_json(result, instance.dimension);

    if (config.cross_check &&
        !std::holds_alternative<Infeasible>(result.outcome)) {
      const auto brute = oracle::brute_min(instance.objective, instance.set, opts.enum_cap);
      Rational claimed;
      if (const auto* c = std::get_if<CertificateOutcome>(&result.outcome))
        claimed = c->optimum;
      else
        claimed = std::get<ContinuousOptimum>(result.outcome).value;
      json cross = {{"brute_force_minimum", rational_to_json(brute.value)},
                    {"brute_force_argmin", vector_to_json(brute.minimizer)},
                    {"matches", claimed == brute.value}};
      if (const auto* c = std::get_if<CertificateOutcome>(&result.outcome)) {
        const auto witness =
            oracle::brute_sfree(c->certificate.polyhedron, instance.set, opts.enum_cap);
        cross["interior_free"] = !witness.has_value();
      }
      doc["cross_check"] = cross;
      if (!cross["matches"].get<bool>()) {
        std::ofstream out(output_path);
        out << doc.dump(2) << "\n";
        emit_error("cross_check_failed", "solver optimum differs from brute force");
        return kExitVerificationFailed;
      }
    }

    std::ofstream out(output_path);
    if (!out) {
      emit_error("io_error", "cannot write output file: " + output_path);
      return kExitUsage;
    }
    out << doc.dump(2) << "\n";

    if (config.log_level == "debug") {
      std::size_t k = 1;
      for (const auto& it : result.iterations)
        std::cerr << "iteration " << k++ << ": point " << it.point.str() << " value "
                  << it.value.str() << " face_dim " << it.face_dim << " ties "
                  << it.tie_set_size << "\n";
    }

    if (std::holds_alternative<Infeasible>(result.outcome)) {
      if (config.log_level != "quiet") std::cout << "infeasible: the set has no points\n";
      return kExitInfeasible;
    }
    if (config.log_level == "quiet") return kExitOk;
    if (const auto* c = std::get_if<CertificateOutcome>(&result.outcome)) {
      std::cout << "certificate of size " << c->certificate.size() << ", optimum "
                << c->optimum.str() << " at " << c->argmin.str() << "\n";
    } else {
      const auto& cont = std::get<ContinuousOptimum>(result.outcome);
      std::cout << "continuous optimum " << cont.value.str() << " at "
                << cont.point.str() << " (zero subgradient)\n";
    }
    return kExitOk;
  });
}

int cmd_verify(const std::string& instance_path, const std::string& certificate_path,
               const CliConfig& config) {
  return run_guarded(config.log_level, [&] {
    const Instance instance = load_instance(instance_path);
    const SolverOptions opts = effective_options(instance, config);
    const CertificateDocument doc = load_certificate(certificate_path);

    json out;
    bool verified = false;

    if (doc.outcome == "certificate") {
      const StrongCertificate& cert = *doc.certificate;
      if (cert.dimension() != instance.dimension)
        throw DimensionMismatch("certificate dimension " +
                                std::to_string(cert.dimension()) +
                                " does not match instance dimension " +
                                std::to_string(instance.dimension));
      const VerificationReport report =
          verify(cert, instance.objective, instance.set, opts.enum_cap);

      json verdicts = json::array();
      for (const auto& v : report.verdicts)
        verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
      out["verification"] = {{"verdicts", std::move(verdicts)},
                             {"all_pass", report.all_pass()}};

      bool strong = false;
      if (report.all_pass()) {
        const DualReport dual = duality_report(cert, instance.objective, instance.set,
                                               std::nullopt, opts.box_inflate,
                                               opts.enum_cap);
        out["duality"] = {{"facet_minima", facet_minima_to_json(dual.facet_minima)},
                          {"bound", rational_to_json(dual.bound)},
                          {"primal", rational_to_json(dual.primal)},
                          {"gap", rational_to_json(dual.gap)},
                          {"strong", dual.strong},
                          {"box", box_to_json(dual.box_used)}};
        strong = dual.strong;

        const auto probes =
            probe_maximality(cert, instance.set, opts.epsilon, opts.enum_cap);
        out["maximality"] = {{"epsilon", rational_to_json(opts.epsilon)},
                             {"relaxation_admits_interior_point", probes}};
      }
      verified = report.all_pass() && strong;
    } else if (doc.outcome == "continuous_optimum") {
      const Vector& z = *doc.point;
      if (z.dimension() != instance.dimension)
        throw DimensionMismatch("certificate dimension does not match instance");
      std::string detail;
      if (!instance.set.contains(z)) detail += "point not in S; ";
      if (!instance.objective.zero_in_subdifferential(z))
        detail += "zero vector is not a subgradient at the point; ";
      if (instance.objective.evaluate(z) != *doc.value)
        detail += "stored value differs from f; ";
      const auto brute = oracle::brute_min(instance.objective, instance.set, opts.enum_cap);
      if (brute.value != *doc.value) detail += "value is not the minimum over S; ";
      verified = detail.empty();
      out["verification"] = {{"outcome", "continuous_optimum"},
                             {"all_pass", verified},
                             {"detail", detail}};
    } else {
      bool empty = true;
      try {
        empty = instance.set.enumerate(opts.enum_cap).empty();
      } catch (const BoxTooLarge&) {
        empty = false;
      }
      verified = empty;
      out["verification"] = {{"outcome", "infeasible"},
                             {"all_pass", verified},
                             {"detail", empty ? "" : "the set has points"}};
    }

    out["verified"] = verified;
    std::cout << out.dump(2) << "\n";
    return verified ? kExitOk : kExitVerificationFailed;
  });
}

int cmd_helly(const std::string& witness_path, const CliConfig& config) {
  return run_guarded(config.log_level, [&] {
    const WitnessConfiguration w = load_witness(witness_path);
    const long long cap = config.enum_cap.value_or(kDefaultEnumCap);
    const bool valid = verify_witness(w, cap);
    const json out = {{"valid", valid},
                      {"sets", w.sets.size()},
                      {"implied_lower_bound", valid ? json(w.sets.size()) : json(nullptr)}};
    std::cout << out.dump(2) << "\n";
    return valid ? kExitOk : kExitVerificationFailed;
  });
}

int cmd_report(const std::string& certificate_path, const CliConfig& config) {
  return run_guarded(config.log_level, [&] {
    std::ifstream in(certificate_path);
    if (!in) throw ParseError("cannot open certificate file: " + certificate_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError(certificate_path + ": " + e.what());
    }

    std::cout << "iteration\tpoint\tvalue\tface_dim\ttie_set_size\n";
    if (j.contains("provenance") && j["provenance"].contains("iterations")) {
      std::size_t k = 1;
      for (const auto& it : j["provenance"]["iterations"]) {
        std::string point;
        for (const auto& coord : it.at("point")) {
          if (!point.empty()) point += ",";
          point += json_to_rational(coord, "$.point").str();
        }
        std::cout << k++ << "\t(" << point << ")\t"
                  << json_to_rational(it.at("value"), "$.value").str() << "\t"
                  << it.at("face_dim").get<long long>() << "\t"
                  << it.at("tie_set_size").get<long long>() << "\n";
      }
    }
    return kExitOk;
  });
}

}  // namespace discert
