#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace finsler::cli {

struct Invocation {
  std::string command;
  std::string config_path;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  /// Replaces every asserted tolerance of the command.
  std::optional<double> tol;
};

const std::vector<std::string>& command_names();

/// Runs one command against an already parsed config. Failures raised by the
/// library are recorded in the report rather than thrown.
Report run_command(const std::string& command, const SpaceConfig& config);

/// Applies the seed/samples/tol overrides to the config.
void apply_overrides(SpaceConfig& config, const Invocation& inv);

/// Full pipeline: load, run, print. Returns the process exit code:
/// 2 for config or usage errors, 1 for failed checks, 0 otherwise.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

}  // namespace finsler::cli
