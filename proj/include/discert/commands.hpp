#ifndef DISCERT_COMMANDS_HPP
#define DISCERT_COMMANDS_HPP

#include <optional>
#include <string>

#include "discert/rational.hpp"

namespace discert {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitVerificationFailed = 3;

// Command-line overrides; unset fields fall back to the instance options.
struct CliConfig {
  std::optional<long long> enum_cap;
  std::optional<long long> box_inflate;
  std::optional<Rational> epsilon;
  bool cross_check = false;
  std::string log_level = "info";
};

int cmd_solve(const std::string& instance_path, const std::string& output_path,
              const CliConfig& config = {});
int cmd_verify(const std::string& instance_path, const std::string& certificate_path,
               const CliConfig& config = {});
int cmd_helly(const std::string& witness_path, const CliConfig& config = {});
int cmd_report(const std::string& certificate_path, const CliConfig& config = {});

}  // namespace discert

#endif
