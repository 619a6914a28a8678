#ifndef STPURSUIT_SIMULATOR_HPP
#define STPURSUIT_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stpursuit/geometry.hpp"

namespace stpursuit {

enum class NoiseKind { none, uniform_disc, worst_case_boundary };
enum class EvaderPolicy { static_, pure_flee, four_direction, random };
enum class TriggerMode { exact, noisy, memory };

struct NoiseModel {
  NoiseKind kind = NoiseKind::none;
  double gamma = 0.0;
};

struct Scenario {
  Vec2 pursuer_start;
  Vec2 evader_start;
  double nu = 0.5;
  double epsilon = 0.75;
  NoiseModel noise;
  EvaderPolicy evader_policy = EvaderPolicy::pure_flee;
  TriggerMode trigger_mode = TriggerMode::exact;
  int memory_window = 1;  // retained estimates in memory mode
  double dt = 1e-3;
  std::uint64_t rng_seed = 0;
  double max_time = 1000.0;

  /// Throws DomainError naming the first broken invariant.
  void validate() const;
};

struct Observation {
  double time = 0.0;
  Vec2 estimate;
  double error_radius = 0.0;
};

struct EventRow {
  std::int64_t k = 0;
  double t = 0.0;
  double d_true = 0.0;
  double d_hat = 0.0;
  double phi = 0.0;

  friend bool operator==(const EventRow&, const EventRow&) = default;
};

struct EventLog {
  std::vector<EventRow> rows;
  std::optional<double> capture_time;
  std::int64_t samples_used = 0;
  // Samples where the measured separation was too small for the tolerable-error
  // bound and the positive-duration law was used instead.
  std::int64_t out_of_tolerance_samples = 0;

  friend bool operator==(const EventLog&, const EventLog&) = default;
};

/// Guaranteed bounds for a scenario and the checks a finished run must pass.
struct Verification {
  std::int64_t n_max = 0;
  double t_cap_bound = 0.0;      // exact sensing only; 0 otherwise
  double min_interevent = 0.0;   // noisy modes only; 0 otherwise
  std::vector<std::string> violations;
};

struct PursuitState {
  AgentState pursuer;
  AgentState evader;
};

/// Forward-Euler step: pursuer at unit speed, evader at speed nu, along their headings.
PursuitState step_dynamics(const PursuitState& state, double pursuer_heading,
                           double evader_heading, double nu, double dt);

/// Heading toward the last estimate, held until the next sample.
double pursuer_control(const Vec2& pursuer, const Vec2& last_estimate);

/// Draws a noisy observation of the evader. `pursuer` orients the worst-case
/// displacement, which is perpendicular to the pursuer-evader line.
Observation sample_evader(const Vec2& true_position, const Vec2& pursuer,
                          const NoiseModel& noise, std::mt19937_64& rng);

/// Evader heading, or nullopt when it stays put.
std::optional<double> evader_policy(EvaderPolicy kind, const Vec2& evader,
                                    const Vec2& pursuer_true, std::mt19937_64& rng);

/// Full event-driven pursuit. Deterministic for a fixed scenario.
EventLog run(const Scenario& scenario);

/// Checks a log against the capture guarantees for its scenario.
Verification verify(const Scenario& scenario, const EventLog& log);

std::string_view to_string(NoiseKind kind);
std::string_view to_string(EvaderPolicy kind);
std::string_view to_string(TriggerMode mode);
/// Parsers throw DomainError on unknown names.
NoiseKind parse_noise_kind(std::string_view name);
EvaderPolicy parse_evader_policy(std::string_view name);
TriggerMode parse_trigger_mode(std::string_view name);

}  // namespace stpursuit

#endif  // STPURSUIT_SIMULATOR_HPP
