#ifndef STPURSUIT_TRIGGER_LAWS_HPP
#define STPURSUIT_TRIGGER_LAWS_HPP

#include <cstdint>

#include "stpursuit/geometry.hpp"

// Closed-form self-triggered sleep durations and the bounds derived from them.
//
// Every law divides by (2 nu^2 - 1) in its textbook form. That denominator factors
// as (nu - s)(nu + s) with s = sqrt(1 - nu^2), and each numerator carries the same
// (nu - s) factor, so the laws are evaluated in the reduced form over (nu + s),
// which is finite and smooth on all of [0, 1). The same trick removes the
// (5 nu - 3) singularity of the tolerable relative error.

namespace stpursuit {

struct LawOutputs {
  double phi = 0.0;    // sleep duration
  double h = 0.0;      // per-event contraction of the measured separation
  double d_max = 0.0;  // worst-case separation at the next sample
};

/// Sleep duration with exact sensing at separation `d`.
double phi_exact(double d, double nu);

/// Guaranteed per-event contraction D_{k+1} <= h D_k with exact sensing.
double contraction_h(double nu);

/// Samples needed before the separation must fall below `epsilon`.
std::int64_t max_samples(double d0, double epsilon, double nu);

/// Time-to-capture bound (d0 - epsilon) / (1 - nu).
double capture_time_bound(double d0, double epsilon, double nu);

/// Sleep duration when the evader is only known to lie within `gamma` of the
/// estimate. Rejects gamma >= d_hat * beta_max(nu): beyond that bound the measured
/// separation is no longer guaranteed to shrink between samples.
double phi_noisy(double d_hat, double gamma, double nu);

/// Same formula as phi_noisy but only requires a positive duration
/// (gamma < d_hat * sqrt(1 - nu^2)). The simulator falls back to it once the
/// measured separation drops so close to capture that the tolerable-error bound
/// no longer holds.
double phi_noisy_positive(double d_hat, double gamma, double nu);

/// phi_noisy with gamma = beta * d_hat.
double phi_beta(double d_hat, double beta, double nu);

/// Supremum of admissible relative errors beta = gamma / d_hat.
double beta_max(double nu);

/// Largest constant error radius valid for the whole pursuit (strict bound).
double max_allowable_error(double epsilon, double nu);

/// Contraction of the measured separation under relative error beta.
double contraction_h_beta(double beta, double nu);

std::int64_t max_samples_beta(double d0_hat, double epsilon, double beta, double nu);

/// Lower bound epsilon * q(nu) on every noisy inter-event duration.
double min_interevent(double epsilon, double nu);

/// Worst-case separation after sleeping `phi`:
/// d_hat + nu phi + gamma_k + gamma_k1 - phi.
double d_max_after_sleep(double d_hat, double phi, double gamma_k, double gamma_k1, double nu);

/// phi_noisy, contraction_h_beta and d_max_after_sleep evaluated together.
LawOutputs evaluate_laws(const TriggerParams& params);

namespace detail {
/// sqrt(1 - nu^2) without cancellation near nu = 1.
inline double cosine_complement(double nu) { return std::sqrt((1.0 - nu) * (1.0 + nu)); }
void require_speed_ratio(double nu);
}  // namespace detail

}  // namespace stpursuit

#endif  // STPURSUIT_TRIGGER_LAWS_HPP
