#ifndef STPURSUIT_CONFIG_HPP
#define STPURSUIT_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "stpursuit/simulator.hpp"

namespace stpursuit {

/// Scenario plus plumbing, read from a flat `key = value` file. `#` starts a
/// comment. Keys:
///   pursuer_x pursuer_y evader_x evader_y nu epsilon noise gamma evader_policy
///   trigger_mode memory_window dt rng_seed max_time output_dir
/// Unset keys keep the values of default_run_config().
struct RunConfig {
  Scenario scenario;
  std::optional<std::string> output_dir;
};

/// D0 = 15, nu = 0.5, gamma = 0.1 uniform-disc noise, epsilon = 0.75,
/// four-direction evader, memory mode with one retained estimate.
RunConfig default_run_config();

/// Throws DomainError naming the offending line. The scenario is validated.
RunConfig parse_run_config(std::istream& in, const RunConfig& base = default_run_config());
RunConfig load_run_config(const std::string& path);

}  // namespace stpursuit

#endif  // STPURSUIT_CONFIG_HPP
