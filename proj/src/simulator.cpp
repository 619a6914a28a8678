#include "stpursuit/simulator.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <sstream>

#include "stpursuit/reachability.hpp"
#include "stpursuit/trigger_laws.hpp"

namespace stpursuit {

namespace {

// Second stream for evader decisions so that paired runs share noise draws even
// when their evaders behave differently.
constexpr std::uint64_t kPolicyStreamSalt = 0x9e3779b97f4a7c15ULL;
constexpr double kStepNudge = 1e-9;

std::string describe(std::string_view what, std::int64_t k, double lhs, double rhs) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " at k=" << k << ": " << lhs << " vs bound " << rhs;
  return msg.str();
}

struct SleepDecision {
  double phi = 0.0;
  bool out_of_tolerance = false;
};

SleepDecision sleep_duration(const Scenario& sc, const Vec2& pursuer, const Observation& obs,
                             const std::deque<Observation>& window) {
  const double d_hat = distance(obs.estimate, pursuer);
  if (sc.trigger_mode == TriggerMode::exact) return {phi_exact(d_hat, sc.nu), false};

  const double gamma = obs.error_radius;
  const bool tolerable = gamma < d_hat * beta_max(sc.nu);
  if (sc.trigger_mode == TriggerMode::noisy || window.empty()) {
    return {tolerable ? phi_noisy(d_hat, gamma, sc.nu) : phi_noisy_positive(d_hat, gamma, sc.nu),
            !tolerable};
  }

  const CanonicalFrame frame = canonical_frame(pursuer, obs.estimate);
  EstimateHistory history;
  for (const Observation& past : window) {
    history.entries.push_back({frame.apply(past.estimate), past.error_radius, obs.time - past.time});
  }
  const Disc current{{d_hat, 0.0}, gamma};
  const auto forgotten = forget_set(current, history, sc.nu);
  return {trigger_time(sc.nu, d_hat, gamma, prune_history(history, forgotten)), !tolerable};
}

}  // namespace

void Scenario::validate() const {
  if (!pursuer_start.finite() || !evader_start.finite()) {
    throw DomainError("start positions must be finite");
  }
  if (!(nu >= 0.0 && nu < 1.0)) throw DomainError("nu must lie in [0, 1)");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
  if (!(distance(pursuer_start, evader_start) > epsilon)) {
    throw DomainError("initial separation must exceed epsilon");
  }
  if (!(dt > 0.0)) throw DomainError("dt must be > 0");
  if (!(max_time > 0.0)) throw DomainError("max_time must be > 0");
  if (!(noise.gamma >= 0.0)) throw DomainError("noise gamma must be >= 0");
  if (noise.kind == NoiseKind::none && noise.gamma != 0.0) {
    throw DomainError("noise kind none requires gamma = 0");
  }
  if (noise.kind != NoiseKind::none) {
    if (trigger_mode == TriggerMode::exact) {
      throw DomainError("exact trigger mode cannot be used with noisy sensing");
    }
    if (!(noise.gamma < max_allowable_error(epsilon, nu))) {
      throw DomainError("epsilon must exceed gamma/beta_max(nu) when noise is active");
    }
  }
  if (trigger_mode == TriggerMode::memory && memory_window < 1) {
    throw DomainError("memory_window must be >= 1");
  }
}

PursuitState step_dynamics(const PursuitState& state, double pursuer_heading,
                           double evader_heading, double nu, double dt) {
  PursuitState next = state;
  next.pursuer.heading = wrap_angle(pursuer_heading);
  next.evader.heading = wrap_angle(evader_heading);
  next.pursuer.position += dt * unit(next.pursuer.heading);
  next.evader.position += (nu * dt) * unit(next.evader.heading);
  return next;
}

double pursuer_control(const Vec2& pursuer, const Vec2& last_estimate) {
  const Vec2 rel = last_estimate - pursuer;
  if (rel.norm() < kGeomTol) {
    throw CoincidentPointsError("pursuer_control: estimate coincides with pursuer");
  }
  return wrap_angle(std::atan2(rel.y, rel.x));
}

Observation sample_evader(const Vec2& true_position, const Vec2& pursuer,
                          const NoiseModel& noise, std::mt19937_64& rng) {
  Observation obs{0.0, true_position, noise.gamma};
  switch (noise.kind) {
    case NoiseKind::none:
      break;
    case NoiseKind::uniform_disc: {
      std::uniform_real_distribution<double> u01(0.0, 1.0);
      const double r = noise.gamma * std::sqrt(u01(rng));
      const double theta = 2.0 * std::numbers::pi * u01(rng);
      obs.estimate += r * unit(theta);
      break;
    }
    case NoiseKind::worst_case_boundary: {
      const Vec2 rel = true_position - pursuer;
      const double line = rel.norm() > kGeomTol ? std::atan2(rel.y, rel.x) : 0.0;
      obs.estimate += noise.gamma * unit(line + 0.5 * std::numbers::pi);
      break;
    }
  }
  return obs;
}

std::optional<double> evader_policy(EvaderPolicy kind, const Vec2& evader,
                                    const Vec2& pursuer_true, std::mt19937_64& rng) {
  const Vec2 flee = evader - pursuer_true;
  switch (kind) {
    case EvaderPolicy::static_:
      return std::nullopt;
    case EvaderPolicy::pure_flee:
      return std::atan2(flee.y, flee.x);
    case EvaderPolicy::four_direction: {
      // +x, +y, -x, -y; strict comparison keeps the earlier entry on ties.
      constexpr std::array<double, 4> headings{0.0, 0.5 * std::numbers::pi, std::numbers::pi,
                                               -0.5 * std::numbers::pi};
      const std::array<double, 4> gains{flee.x, flee.y, -flee.x, -flee.y};
      std::size_t best = 0;
      for (std::size_t i = 1; i < gains.size(); ++i) {
        if (gains[i] > gains[best]) best = i;
      }
      return headings[best];
    }
    case EvaderPolicy::random: {
      std::uniform_real_distribution<double> heading(-std::numbers::pi, std::numbers::pi);
      return heading(rng);
    }
  }
  throw DomainError("unknown evader policy");
}

EventLog run(const Scenario& sc) {
  sc.validate();
  std::mt19937_64 noise_rng(sc.rng_seed);
  std::mt19937_64 policy_rng(sc.rng_seed ^ kPolicyStreamSalt);

  PursuitState state{{sc.pursuer_start, 0.0}, {sc.evader_start, 0.0}};
  EventLog log;
  std::deque<Observation> window;  // most recent first
  std::int64_t step = 0;
  const auto now = [&] { return static_cast<double>(step) * sc.dt; };

  for (std::int64_t k = 0; now() < sc.max_time; ++k) {
    Observation obs = sample_evader(state.evader.position, state.pursuer.position, sc.noise, noise_rng);
    obs.time = now();
    const SleepDecision sleep = sleep_duration(sc, state.pursuer.position, obs, window);
    const double heading = pursuer_control(state.pursuer.position, obs.estimate);

    log.rows.push_back({k, obs.time, distance(state.pursuer.position, state.evader.position),
                        distance(state.pursuer.position, obs.estimate), sleep.phi});
    log.samples_used = k + 1;
    if (sleep.out_of_tolerance) ++log.out_of_tolerance_samples;

    // Never oversleep the certificate: truncate to whole steps.
    const auto steps = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor(sleep.phi / sc.dt + kStepNudge)));
    for (std::int64_t i = 0; i < steps; ++i) {
      const auto evader_heading =
          evader_policy(sc.evader_policy, state.evader.position, state.pursuer.position, policy_rng);
      const double nu = evader_heading ? sc.nu : 0.0;
      state = step_dynamics(state, heading, evader_heading.value_or(state.evader.heading), nu, sc.dt);
      ++step;
      if (distance(state.pursuer.position, state.evader.position) <= sc.epsilon) {
        log.capture_time = now();
        return log;
      }
      if (now() >= sc.max_time) return log;
    }

    window.push_front(obs);
    while (static_cast<int>(window.size()) > sc.memory_window) window.pop_back();
  }
  return log;
}

Verification verify(const Scenario& sc, const EventLog& log) {
  Verification out;
  auto& bad = out.violations;
  const double slack = 2.0 * sc.dt;
  const double d0 = distance(sc.pursuer_start, sc.evader_start);

  for (std::size_t i = 1; i < log.rows.size(); ++i) {
    if (!(log.rows[i].t > log.rows[i - 1].t)) {
      bad.push_back(describe("event times not increasing", log.rows[i].k, log.rows[i].t,
                             log.rows[i - 1].t));
    }
  }
  for (const auto& row : log.rows) {
    if (!(row.phi > 0.0)) bad.push_back(describe("non-positive sleep", row.k, row.phi, 0.0));
  }

  if (sc.trigger_mode == TriggerMode::exact) {
    const double h = contraction_h(sc.nu);
    out.n_max = max_samples(d0, sc.epsilon, sc.nu);
    out.t_cap_bound = capture_time_bound(d0, sc.epsilon, sc.nu);
    for (std::size_t i = 1; i < log.rows.size(); ++i) {
      const auto& prev = log.rows[i - 1];
      const auto& cur = log.rows[i];
      if (!(cur.d_true < prev.d_true)) {
        bad.push_back(describe("separation did not decrease", cur.k, cur.d_true, prev.d_true));
      }
      if (cur.d_true > h * prev.d_true + slack) {
        bad.push_back(describe("contraction bound exceeded", cur.k, cur.d_true, h * prev.d_true + slack));
      }
    }
    if (log.capture_time && *log.capture_time > out.t_cap_bound + slack) {
      bad.push_back(describe("capture time bound exceeded", log.samples_used, *log.capture_time,
                             out.t_cap_bound + slack));
    }
    if (!log.capture_time && sc.max_time >= out.t_cap_bound + slack) {
      bad.push_back(describe("no capture although the capture-time bound has passed",
                             log.samples_used, sc.max_time, out.t_cap_bound));
    }
  } else if (!log.rows.empty()) {
    const double gamma = sc.noise.gamma;
    const double d0_hat = log.rows.front().d_hat;
    const double run_beta = gamma / sc.epsilon;
    out.min_interevent = min_interevent(sc.epsilon, sc.nu);
    if (sc.epsilon < d0_hat && run_beta < beta_max(sc.nu)) {
      out.n_max = max_samples_beta(d0_hat, sc.epsilon, run_beta, sc.nu);
    }
    for (const auto& row : log.rows) {
      // The lower bound presumes the measured separation is still outside the
      // capture radius.
      if (row.d_hat >= sc.epsilon && row.phi < out.min_interevent - 1e-9) {
        bad.push_back(describe("inter-event duration below epsilon*q(nu)", row.k, row.phi,
                               out.min_interevent));
      }
    }
    for (std::size_t i = 1; i < log.rows.size(); ++i) {
      const auto& prev = log.rows[i - 1];
      const auto& cur = log.rows[i];
      const double d_max = d_max_after_sleep(prev.d_hat, prev.phi, gamma, gamma, sc.nu);
      if (cur.d_hat > d_max + slack) {
        bad.push_back(describe("measured separation above worst case", cur.k, cur.d_hat, d_max + slack));
      }
      // gamma < d_hat * beta_max(nu) is exactly the condition for d_max < d_hat.
      if (gamma < prev.d_hat * beta_max(sc.nu) && !(cur.d_hat < prev.d_hat + slack)) {
        bad.push_back(describe("measured separation did not decrease", cur.k, cur.d_hat, prev.d_hat));
      }
    }
    if (!log.capture_time && out.n_max > 0 && log.samples_used >= out.n_max) {
      bad.push_back(describe("sample budget exhausted without capture", log.samples_used,
                             static_cast<double>(log.samples_used), static_cast<double>(out.n_max)));
    }
  }

  if (out.n_max > 0 && log.samples_used > out.n_max) {
    bad.push_back(describe("sample bound exceeded", log.samples_used,
                           static_cast<double>(log.samples_used), static_cast<double>(out.n_max)));
  }
  return out;
}

std::string_view to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::none: return "none";
    case NoiseKind::uniform_disc: return "uniform_disc";
    case NoiseKind::worst_case_boundary: return "worst_case_boundary";
  }
  return "?";
}

std::string_view to_string(EvaderPolicy kind) {
  switch (kind) {
    case EvaderPolicy::static_: return "static";
    case EvaderPolicy::pure_flee: return "pure_flee";
    case EvaderPolicy::four_direction: return "four_direction";
    case EvaderPolicy::random: return "random";
  }
  return "?";
}

std::string_view to_string(TriggerMode mode) {
  switch (mode) {
    case TriggerMode::exact: return "exact";
    case TriggerMode::noisy: return "noisy";
    case TriggerMode::memory: return "memory";
  }
  return "?";
}

NoiseKind parse_noise_kind(std::string_view name) {
  for (auto kind : {NoiseKind::none, NoiseKind::uniform_disc, NoiseKind::worst_case_boundary}) {
    if (name == to_string(kind)) return kind;
  }
  throw DomainError("unknown noise kind '" + std::string(name) + "'");
}

EvaderPolicy parse_evader_policy(std::string_view name) {
  for (auto kind : {EvaderPolicy::static_, EvaderPolicy::pure_flee, EvaderPolicy::four_direction,
                    EvaderPolicy::random}) {
    if (name == to_string(kind)) return kind;
  }
  throw DomainError("unknown evader policy '" + std::string(name) + "'");
}

TriggerMode parse_trigger_mode(std::string_view name) {
  for (auto mode : {TriggerMode::exact, TriggerMode::noisy, TriggerMode::memory}) {
    if (name == to_string(mode)) return mode;
  }
  throw DomainError("unknown trigger mode '" + std::string(name) + "'");
}

}  // namespace stpursuit
