#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "finsler/norm.hpp"
#include "finsler/ortho.hpp"

namespace finsler::cli {

/// Malformed or invalid configuration. The message names the source and
/// either a line:column position or a JSON-pointer field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-command overrides; unset values fall back to the library defaults.
struct Tolerances {
  std::optional<double> identities;
  std::optional<double> profile;
  std::optional<double> closure;
  std::optional<double> angle;
  std::optional<double> bracket;
  double drift_min_order = 1.9;
};

struct SpaceConfig {
  int dimension = 0;
  NormModel norm;
  /// Configured basis, standard basis when the block is absent.
  Basis basis;
  DerivativeMethod method = DerivativeMethod::Automatic;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  Tolerances tolerances;
  /// Normalized copy of the input, echoed into reports.
  nlohmann::json echo;
};

SpaceConfig parse_config(std::string_view text, const std::string& source = "<config>");
SpaceConfig load_config(const std::string& path);

DerivativeMethod parse_method(std::string_view name);

}  // namespace finsler::cli
