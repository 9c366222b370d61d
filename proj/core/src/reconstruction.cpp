#include "lrd/reconstruction.hpp"

#include <cmath>
#include <stdexcept>

#include "lrd/errors.hpp"
#include "lrd/estimation.hpp"

namespace lrd {

CovarianceSeries forward_cov(const CovarianceSeries& c_y, const InterSampleSpec& spec,
                             double mu_y) {
  const double mu_a = spec.mean_intensity();
  CovarianceSeries out = c_y;
  out.source = SeriesSource::observation;
  for (std::size_t i = 0; i < c_y.lags.size(); ++i) {
    const double ca = spec.autocov(c_y.lags[i]);
    out.values[i] = (ca + mu_a * mu_a) * c_y.values[i] + ca * mu_y * mu_y;
  }
  return out;
}

ReconstructedCov reconstruct_cov(const CovarianceSeries& c_w, const InterSampleSpec& spec,
                                 const TrafficMoments& moments) {
  const double mu_a = spec.mean_intensity();
  const double mu_y2 = moments.mean * moments.mean;
  ReconstructedCov out;
  out.series.sample_length = c_w.sample_length;
  out.series.source = SeriesSource::reconstructed;
  for (std::size_t i = 0; i < c_w.lags.size(); ++i) {
    const std::int64_t tau = c_w.lags[i];
    bool admissible = true;
    switch (spec.dist()) {
      case SamplingDist::periodic:
        admissible = tau % spec.delta() == 0;
        break;
      case SamplingDist::uniform:
        admissible = spec.autocov_exact(tau);
        break;
      default:
        break;
    }
    if (!admissible) {
      out.dropped_lags.push_back(tau);
      continue;
    }
    const double ca = spec.autocov(tau);
    const double denom = ca + mu_a * mu_a;
    if (std::abs(denom) < 1e-12 * mu_a * mu_a) {
      out.dropped_lags.push_back(tau);
      continue;
    }
    out.series.lags.push_back(tau);
    out.series.values.push_back((c_w.values[i] - ca * mu_y2) / denom);
  }
  return out;
}

TrafficMoments estimate_moments(const Trace& w, const InterSampleSpec& spec) {
  const SampleMoments m = sample_moments(w);
  const double mu_a = spec.mean_intensity();
  const double s2a = spec.indicator_variance();
  TrafficMoments out;
  out.mean = m.mean / mu_a;
  out.variance = (m.variance - s2a * out.mean * out.mean) / mu_a;
  if (out.variance < 0.0) {
    out.variance = 0.0;
    out.variance_clipped = true;
  }
  out.approximate = spec.dist() != SamplingDist::geometric;
  return out;
}

double aggvar_from_cov(double var0, const std::vector<double>& cov_tail, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("block size must be at least 1");
  if (static_cast<std::int64_t>(cov_tail.size()) < M - 1)
    throw std::invalid_argument("covariance tail too short for block size");
  double acc = 0.0;
  for (std::int64_t tau = 1; tau < M; ++tau)
    acc += static_cast<double>(M - tau) * cov_tail[tau - 1];
  const double Md = static_cast<double>(M);
  return var0 / Md + 2.0 * acc / (Md * Md);
}

AggVarSeries forward_aggvar(const AggVarSeries& var_y, const InterSampleSpec& spec,
                            double mu_y, const CovarianceSeries& c_y) {
  if (c_y.lags.empty() || c_y.lags.front() != 0)
    throw std::invalid_argument("c_y must start at lag 0 (sigma_Y^2)");
  const std::int64_t max_m =
      *std::max_element(var_y.block_sizes.begin(), var_y.block_sizes.end());
  // require a dense lag grid 0..max(M)-1
  for (std::int64_t tau = 0; tau < max_m; ++tau) {
    if (tau >= static_cast<std::int64_t>(c_y.lags.size()) || c_y.lags[tau] != tau)
      throw std::invalid_argument("c_y must be dense on lags 0..max(M)-1");
  }
  const double mu_a = spec.mean_intensity();
  const double s2a = spec.indicator_variance();
  const double s2y = c_y.values[0];

  AggVarSeries out = var_y;
  for (std::size_t i = 0; i < var_y.block_sizes.size(); ++i) {
    const std::int64_t M = var_y.block_sizes[i];
    const double Md = static_cast<double>(M);
    // Var(A^(M)) from the analytic sampling autocovariance
    double var_a = s2a / Md;
    double cross = 0.0;
    for (std::int64_t tau = 1; tau < M; ++tau) {
      const double ca = spec.autocov(tau);
      var_a += 2.0 * static_cast<double>(M - tau) * ca / (Md * Md);
      cross += 2.0 * static_cast<double>(M - tau) * c_y.values[tau] * ca / (Md * Md);
    }
    out.variances[i] = mu_y * mu_y * var_a + mu_a * mu_a * var_y.variances[i] +
                       s2y * s2a / Md + cross;
  }
  return out;
}

AggVarSeries reconstruct_aggvar(const AggVarSeries& var_w, const InterSampleSpec& spec,
                                const TrafficMoments& moments) {
  if (spec.dist() != SamplingDist::geometric)
    throw UnsupportedError(
        "aggregate-variance inversion is only defined for geometric sampling "
        "(the covariance cross term persists otherwise)");
  const double mu_a = spec.mean_intensity();
  const double s2a = spec.indicator_variance();
  AggVarSeries out = var_w;
  for (std::size_t i = 0; i < var_w.block_sizes.size(); ++i) {
    const double Md = static_cast<double>(var_w.block_sizes[i]);
    const double var_a = s2a / Md;
    out.variances[i] = (var_w.variances[i] - moments.mean * moments.mean * var_a -
                        moments.variance * s2a / Md) /
                       (mu_a * mu_a);
  }
  return out;
}

ReconstructedPsd reconstruct_psd(const SpectrumSeries& psd_w, const InterSampleSpec& spec,
                                 const TrafficMoments& moments) {
  switch (spec.dist()) {
    case SamplingDist::geometric:
      break;
    case SamplingDist::periodic:
      throw UnsupportedError(
          "periodic sampling aliases the spectrum irreversibly (the sampled "
          "process is not band limited); spectral inversion is refused");
    default:
      throw UnsupportedError(
          "spectral inversion is only available for geometric sampling");
  }
  const double mu_a = spec.mean_intensity();
  const double s2a = spec.indicator_variance();
  // The sampled spectrum is mu_A^2 Psi_Y(f) plus the white level
  // sigma_A^2 (sigma_Y^2 + mu_Y^2) contributed by the indicator noise.
  const double offset = s2a * (moments.variance + moments.mean * moments.mean);
  ReconstructedPsd out;
  out.series = psd_w;
  for (double& d : out.series.densities) {
    d = (d - offset) / (mu_a * mu_a);
    if (d < 0.0) {
      d = 0.0;
      ++out.floored_negative;
    }
  }
  return out;
}

}  // namespace lrd
