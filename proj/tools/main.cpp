#include <CLI11.hpp>
#include <string>

#include "discert/commands.hpp"
#include "discert/errors.hpp"
#include "discert/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "discert: compute and verify exact optimality certificates for convex "
      "minimization over finite discrete sets"};
  app.set_version_flag("--version", discert::kToolVersion);
  app.require_subcommand(1);

  discert::CliConfig config;
  std::string epsilon_text;
  app.add_option("--enum-cap", config.enum_cap,
                 "maximum integer-box volume enumerated");
  app.add_option("--box-inflate", config.box_inflate,
                 "inflation factor for the default duality box");
  app.add_option("--epsilon", epsilon_text,
                 "relaxation amount for the maximality probe (integer or p/q)");
  app.add_option("--log-level", config.log_level, "log verbosity")
      ->check(CLI::IsMember({"quiet", "info", "debug"}));
  app.add_flag("--cross-check", config.cross_check,
               "re-run the brute-force oracles and compare");

  std::string instance_path, output_path = "certificate.json", certificate_path,
              witness_path;
  bool tsv = false;

  auto* solve = app.add_subcommand("solve", "solve an instance and write a certificate");
  solve->fallthrough();
  solve->add_option("instance", instance_path, "instance JSON file")->required();
  solve->add_option("-o,--output", output_path, "output certificate file");

  auto* verify = app.add_subcommand("verify", "verify a certificate against an instance");
  verify->fallthrough();
  verify->add_option("instance", instance_path, "instance JSON file")->required();
  verify->add_option("certificate", certificate_path, "certificate JSON file")->required();

  auto* helly = app.add_subcommand("helly", "verify a witness configuration");
  helly->fallthrough();
  helly->add_option("witness", witness_path, "witness JSON file")->required();

  auto* report = app.add_subcommand("report", "emit TSV tables from a certificate");
  report->fallthrough();
  report->add_option("certificate", certificate_path, "certificate JSON file")->required();
  report->add_flag("--tsv", tsv, "tab-separated output (always on)");

  CLI11_PARSE(app, argc, argv);

  if (!epsilon_text.empty()) {
    try {
      config.epsilon = discert::Rational::parse(epsilon_text);
    } catch (const discert::ParseError& e) {
      std::cerr << "--epsilon: " << e.what() << "\n";
      return discert::kExitUsage;
    }
  }

  if (solve->parsed()) return discert::cmd_solve(instance_path, output_path, config);
  if (verify->parsed()) return discert::cmd_verify(instance_path, certificate_path, config);
  if (helly->parsed()) return discert::cmd_helly(witness_path, config);
  if (report->parsed()) return discert::cmd_report(certificate_path, config);
  return discert::kExitUsage;
}
