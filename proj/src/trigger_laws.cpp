#include "stpursuit/trigger_laws.hpp"

#include <sstream>

namespace stpursuit {

namespace detail {

void require_speed_ratio(double nu) {
  if (!(nu >= 0.0 && nu < 1.0)) {
    std::ostringstream msg;
    msg << "speed ratio nu=" << nu << " outside [0, 1)";
    throw DomainError(msg.str());
  }
}

}  // namespace detail

namespace {

using detail::cosine_complement;
using detail::require_speed_ratio;

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) throw DomainError(std::string(name) + " must be > 0");
}

void require_capture_radius(double d0, double epsilon) {
  require_positive(epsilon, "epsilon");
  if (!(epsilon < d0)) throw DomainError("epsilon must be < initial separation d0");
}

// ceil() with a 1e-9 downward nudge so values like 19.0000000001 stay 19.
std::int64_t stable_ceil(double x) { return static_cast<std::int64_t>(std::ceil(x - 1e-9)); }

// (d_hat s - gamma) / (nu + s); callers check the domain.
double noisy_kernel(double d_hat, double gamma, double nu) {
  const double s = cosine_complement(nu);
  return (d_hat * s - gamma) / (nu + s);
}

}  // namespace

double phi_exact(double d, double nu) {
  require_speed_ratio(nu);
  require_positive(d, "separation d");
  const double s = cosine_complement(nu);
  return d * s / (nu + s);
}

double contraction_h(double nu) {
  require_speed_ratio(nu);
  const double s = cosine_complement(nu);
  return nu * (1.0 + s) / (nu + s);
}

std::int64_t max_samples(double d0, double epsilon, double nu) {
  require_capture_radius(d0, epsilon);
  const double h = contraction_h(nu);
  if (h == 0.0) return 1;
  return stable_ceil(std::log(epsilon / d0) / std::log(h));
}

double capture_time_bound(double d0, double epsilon, double nu) {
  require_speed_ratio(nu);
  require_capture_radius(d0, epsilon);
  return (d0 - epsilon) / (1.0 - nu);
}

double beta_max(double nu) {
  require_speed_ratio(nu);
  const double s = cosine_complement(nu);
  const double a = 1.0 - nu;
  return a * a / (s + 2.0 * a);
}

double phi_noisy(double d_hat, double gamma, double nu) {
  require_speed_ratio(nu);
  require_positive(d_hat, "d_hat");
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  const double bound = d_hat * beta_max(nu);
  if (!(gamma < bound)) {
    std::ostringstream msg;
    msg << "gamma=" << gamma << " violates tolerable-error bound gamma < d_hat*beta_max(nu)="
        << bound;
    throw DomainError(msg.str());
  }
  return noisy_kernel(d_hat, gamma, nu);
}

double phi_noisy_positive(double d_hat, double gamma, double nu) {
  require_speed_ratio(nu);
  require_positive(d_hat, "d_hat");
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  if (!(gamma < d_hat * cosine_complement(nu))) {
    throw DomainError("gamma must be < d_hat*sqrt(1-nu^2) for a positive sleep duration");
  }
  return noisy_kernel(d_hat, gamma, nu);
}

double phi_beta(double d_hat, double beta, double nu) {
  require_speed_ratio(nu);
  require_positive(d_hat, "d_hat");
  if (!(beta >= 0.0 && beta < beta_max(nu))) {
    std::ostringstream msg;
    msg << "beta=" << beta << " outside [0, beta_max(nu)=" << beta_max(nu) << ")";
    throw DomainError(msg.str());
  }
  return noisy_kernel(d_hat, beta * d_hat, nu);
}

double max_allowable_error(double epsilon, double nu) {
  require_positive(epsilon, "epsilon");
  return epsilon * beta_max(nu);
}

double contraction_h_beta(double beta, double nu) {
  const double normalized_phi = phi_beta(1.0, beta, nu);
  return (1.0 - (1.0 - nu) * normalized_phi + beta) / (1.0 - beta);
}

std::int64_t max_samples_beta(double d0_hat, double epsilon, double beta, double nu) {
  require_capture_radius(d0_hat, epsilon);
  const double h = contraction_h_beta(beta, nu);
  if (h == 0.0) return 1;
  return stable_ceil(std::log(epsilon / d0_hat) / std::log(h));
}

double min_interevent(double epsilon, double nu) {
  require_positive(epsilon, "epsilon");
  require_speed_ratio(nu);
  const double s = cosine_complement(nu);
  return epsilon * (s - beta_max(nu)) / (nu + s);
}

double d_max_after_sleep(double d_hat, double phi, double gamma_k, double gamma_k1, double nu) {
  require_speed_ratio(nu);
  require_positive(d_hat, "d_hat");
  if (!(phi >= 0.0 && gamma_k >= 0.0 && gamma_k1 >= 0.0)) {
    throw DomainError("phi and error radii must be >= 0");
  }
  return d_hat + nu * phi + gamma_k + gamma_k1 - phi;
}

LawOutputs evaluate_laws(const TriggerParams& params) {
  params.validate();
  LawOutputs out;
  out.phi = phi_noisy(params.d_hat, params.gamma, params.nu);
  out.h = contraction_h_beta(params.gamma / params.d_hat, params.nu);
  out.d_max = d_max_after_sleep(params.d_hat, out.phi, params.gamma, params.gamma, params.nu);
  return out;
}

}  // namespace stpursuit
