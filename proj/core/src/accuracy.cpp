#include "lrd/accuracy.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace lrd {

AccuracyInputs AccuracyInputs::from(const LrdModel& model, double mu_a, std::int64_t T) {
  model.validate();
  if (!(mu_a > 0.0 && mu_a <= 1.0)) throw std::invalid_argument("mu_a must lie in (0, 1]");
  AccuracyInputs in;
  in.hurst = model.hurst;
  in.variance = model.variance;
  in.mean = model.mean_rate;
  in.prefactor = model.prefactor;
  in.mu_a = mu_a;
  in.sigma2_a = mu_a * (1.0 - mu_a);
  in.sample_length = T;
  return in;
}

double AccuracyInputs::model_cov(double tau) const {
  return prefactor * variance * std::pow(tau, 2.0 * hurst - 2.0);
}

namespace {

// sqrt((s2a muY^2 + muA sY^2)^2 + 4 muA^2 muY^2 (s2a muY^2 + muA sY^2))
double observation_noise_scale(const AccuracyInputs& in) {
  const double base = in.sigma2_a * in.mean * in.mean + in.mu_a * in.variance;
  return std::sqrt(base * base + 4.0 * in.mu_a * in.mu_a * in.mean * in.mean * base);
}

}  // namespace

double noise_floor(const AccuracyInputs& in) {
  if (in.sample_length < 1000)
    throw std::invalid_argument("noise floor needs T >= 1000 (CLT regime)");
  return 2.0 * observation_noise_scale(in) / std::sqrt(static_cast<double>(in.sample_length));
}

double tau_star(const AccuracyInputs& in) {
  if (!(in.hurst > 0.5 && in.hurst < 1.0))
    throw std::invalid_argument("hurst must lie in (0.5, 1)");
  const double num = in.prefactor * in.variance * in.mu_a * in.mu_a *
                     std::sqrt(static_cast<double>(in.sample_length));
  const double denom = 2.0 * observation_noise_scale(in);
  return std::pow(num / denom, 1.0 / (2.0 - 2.0 * in.hurst));
}

double sampling_cov_ci(double mu_a, double sigma2_a, std::int64_t T, std::int64_t tau) {
  if (tau >= T) throw std::invalid_argument("tau must be below T");
  const double sa = std::sqrt(sigma2_a);
  return 2.0 * sa * std::sqrt(sigma2_a + 4.0 * mu_a * mu_a) /
         std::sqrt(static_cast<double>(T - tau));
}

RelativeError relative_error(const AccuracyInputs& in, std::int64_t tau, double c_y_tau) {
  if (!(c_y_tau > 0.0)) throw std::invalid_argument("c_Y(tau) must be positive");
  const double pref = sampling_cov_ci(in.mu_a, in.sigma2_a, in.sample_length, tau) /
                      (in.mu_a * in.mu_a);
  RelativeError out;
  out.value = pref * (1.0 + in.mean * in.mean / c_y_tau);
  if (c_y_tau < in.mean * in.mean / 100.0) {
    const double asym = pref * in.mean * in.mean / in.variance *
                        std::pow(static_cast<double>(tau), 2.0 - 2.0 * in.hurst) /
                        in.prefactor;
    out.asymptote = asym;
    out.ratio = out.value / asym;
  }
  return out;
}

double required_duration(const AccuracyInputs& in, std::int64_t tau, double target_eps) {
  if (!(target_eps > 0.0)) throw std::invalid_argument("target_eps must be positive");
  const double sa = std::sqrt(in.sigma2_a);
  const double root = 2.0 * sa * std::sqrt(in.sigma2_a + 4.0 * in.mu_a * in.mu_a) *
                      in.mean * in.mean *
                      std::pow(static_cast<double>(tau), 2.0 - 2.0 * in.hurst) /
                      (target_eps * in.mu_a * in.mu_a * in.variance * in.prefactor);
  return static_cast<double>(tau) + root * root;
}

double bias_y(const AccuracyInputs& in, std::int64_t tau) {
  if (tau >= in.sample_length) throw std::invalid_argument("tau must be below T");
  const double n = static_cast<double>(in.sample_length - tau);
  return -in.variance / std::pow(n, 2.0 - 2.0 * in.hurst);
}

double bias_w(std::span<const double> c_w, std::int64_t T, std::int64_t tau) {
  const std::int64_t n = T - tau;
  if (n < 1) throw std::invalid_argument("tau must be below T");
  if (static_cast<std::int64_t>(c_w.size()) < n)
    throw std::invalid_argument("c_w must cover lags 0..T-tau-1");
  const double nd = static_cast<double>(n);
  double acc = 0.0;
  for (std::int64_t t = 1; t < n; ++t) acc += static_cast<double>(n - t) * c_w[t];
  return -c_w[0] / nd - 2.0 * acc / (nd * nd);
}

double reconstruction_ci(const AccuracyInputs& in, double c_a_tau, std::int64_t tau,
                         double c_y_tau) {
  const double ci = sampling_cov_ci(in.mu_a, in.sigma2_a, in.sample_length, tau);
  const double denom = std::abs(c_a_tau + in.mu_a * in.mu_a);
  return ci * (c_y_tau + in.mean * in.mean) / denom;
}

AccuracyReport build_report(const AccuracyInputs& in, const std::vector<std::int64_t>& lags) {
  AccuracyReport rep;
  rep.inputs = in;
  rep.tau_star = tau_star(in);
  rep.noise_floor_halfwidth = noise_floor(in);
  rep.lags = lags;
  for (std::int64_t tau : lags) {
    if (tau > in.sample_length / 10) rep.lag_guard_violated = true;
    rep.sampling_ci.push_back(sampling_cov_ci(in.mu_a, in.sigma2_a, in.sample_length, tau));
    rep.relative_err.push_back(
        relative_error(in, tau, in.model_cov(static_cast<double>(tau))).value);
    rep.bias.push_back(bias_y(in, tau));
  }
  return rep;
}

std::string AccuracyReport::to_json() const {
  nlohmann::json j;
  j["inputs"] = {{"hurst", inputs.hurst},       {"variance", inputs.variance},
                 {"mean", inputs.mean},         {"prefactor", inputs.prefactor},
                 {"mu_a", inputs.mu_a},         {"sigma2_a", inputs.sigma2_a},
                 {"sample_length", inputs.sample_length}};
  j["tau_star"] = tau_star;
  j["noise_floor_halfwidth"] = noise_floor_halfwidth;
  j["lag_guard_violated"] = lag_guard_violated;
  j["lags"] = lags;
  j["sampling_ci"] = sampling_ci;
  j["relative_err"] = relative_err;
  j["bias"] = bias;
  return j.dump(2);
}

}  // namespace lrd
