#ifndef LRD_ACCURACY_HPP
#define LRD_ACCURACY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrd/traffic.hpp"

namespace lrd {

// Model and sampling parameters the closed-form accuracy expressions
// depend on. All confidence intervals are CLT approximations derived
// for Bernoulli (geometric) sampling and require T >> tau.
struct AccuracyInputs {
  double hurst = 0.8;
  double variance = 1.0;   // sigma_Y^2
  double mean = 0.0;       // mu_Y
  double prefactor = 1.0;  // K in c_Y(tau) = K sigma_Y^2 tau^(2H-2)
  double mu_a = 0.1;
  double sigma2_a = 0.09;  // mu_A (1 - mu_A)
  std::int64_t sample_length = 0;

  static AccuracyInputs from(const LrdModel& model, double mu_a, std::int64_t T);
  double model_cov(double tau) const;  // K sigma^2 tau^(2H-2)
};

// Half-width of the 95% band of the sampled-iid covariance estimate:
// 2 sqrt((s2a muY^2 + muA sY^2)^2 + 4 muA^2 muY^2 (s2a muY^2 + muA sY^2)) / sqrt(T).
double noise_floor(const AccuracyInputs& in);

// Largest lag at which the model covariance of the observations stays
// above the noise floor.
double tau_star(const AccuracyInputs& in);

// Appendix-style 95% half-width of the sampling-indicator covariance
// estimate: 2 sigma_A sqrt(sigma_A^2 + 4 mu_A^2) / sqrt(T - tau).
double sampling_cov_ci(double mu_a, double sigma2_a, std::int64_t T, std::int64_t tau);

struct RelativeError {
  double value = 0.0;                   // exact expression
  std::optional<double> asymptote;      // large-lag power-law form
  std::optional<double> ratio;          // value / asymptote
};

// Relative 95% error of the reconstructed covariance induced by the
// sampling-covariance fluctuation; requires c_y_tau > 0.
RelativeError relative_error(const AccuracyInputs& in, std::int64_t tau, double c_y_tau);

// Sampling duration needed to hit target_eps at lag tau (large-lag form).
double required_duration(const AccuracyInputs& in, std::int64_t tau, double target_eps);

// Expected bias of the windowed-mean covariance estimator applied to
// the traffic process: -sigma_Y^2 / (T - tau)^(2 - 2H).
double bias_y(const AccuracyInputs& in, std::int64_t tau);

// Same bias applied to the observation process; c_w must hold the
// (analytic) observation covariance on lags 0..T-tau-1.
double bias_w(std::span<const double> c_w, std::int64_t T, std::int64_t tau);

// 95% half-width of the reconstructed c_Y(tau) induced by sampling
// fluctuations: sampling_ci * (c_Y + mu_Y^2) / |c_A + mu_A^2|.
double reconstruction_ci(const AccuracyInputs& in, double c_a_tau, std::int64_t tau,
                         double c_y_tau);

struct AccuracyReport {
  AccuracyInputs inputs;
  double tau_star = 0.0;
  double noise_floor_halfwidth = 0.0;
  bool lag_guard_violated = false;  // some requested lag exceeded T/10
  std::vector<std::int64_t> lags;
  std::vector<double> sampling_ci;    // per lag
  std::vector<double> relative_err;   // per lag, from the model covariance
  std::vector<double> bias;           // per lag (traffic estimator)
  std::string to_json() const;
};

AccuracyReport build_report(const AccuracyInputs& in, const std::vector<std::int64_t>& lags);

}  // namespace lrd

#endif
