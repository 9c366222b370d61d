#ifndef LRD_ESTIMATION_HPP
#define LRD_ESTIMATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lrd/series.hpp"
#include "lrd/trace.hpp"

namespace lrd {

// Mean handling for the sample autocovariance
// c~(tau) = (1/(T-tau)) sum_t (y(t) - m0)(y(t+tau) - m_tau).
struct MeanMode {
  enum class Kind { per_window, global, known };
  Kind kind = Kind::per_window;
  double mu = 0.0;

  // the two window means m0, m_tau (default estimator)
  static MeanMode per_window() { return {Kind::per_window, 0.0}; }
  // one mean over the whole series
  static MeanMode global() { return {Kind::global, 0.0}; }
  // population mean supplied by the caller
  static MeanMode known(double mu) { return {Kind::known, mu}; }
};

// Sample autocovariance at the given lags. Lags must satisfy
// tau <= T/10 (bias guard) and be nonnegative.
CovarianceSeries sample_autocov(const Trace& series, const std::vector<std::int64_t>& lags,
                                const MeanMode& mode = MeanMode::per_window());

// Variance of non-overlapping M-block means; the trailing partial block
// is dropped. Requires at least 100 blocks per M.
AggVarSeries aggregate_variance(const Trace& series,
                                const std::vector<std::int64_t>& block_sizes);

// Welch-averaged periodogram over >= min_segments non-overlapping
// Hann-windowed segments with per-segment mean removal. Normalized so a
// zero-mean iid series of variance s^2 has mean density s^2. Requires
// T >= 4096.
SpectrumSeries periodogram(const Trace& series, int min_segments = 32);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;  // log10 units
  double slope_stderr = 0.0;
  int points_used = 0;
  int excluded_nonpositive = 0;
};

// OLS of log10(y) on log10(x) over points with x in [range_lo, range_hi]
// and y > 0; nonpositive y are excluded and counted. Throws when fewer
// than 5 usable points remain.
LogLogFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y,
                     double range_lo, double range_hi);

// cov_slope/agg_var: H = 1 + slope/2; psd: H = (1 - slope)/2. The value
// is clamped into [0, 1] with out_of_range set when clamping occurred.
HurstEstimate hurst_from_slope(double slope, HurstMethod method, double slope_stderr = 0.0,
                               double range_lo = 0.0, double range_hi = 0.0);
HurstEstimate hurst_from_fit(const LogLogFit& fit, HurstMethod method, double range_lo,
                             double range_hi);

// Log-spaced integer lag grid, ~points_per_decade per decade, deduplicated.
std::vector<std::int64_t> log_lags(std::int64_t lo, std::int64_t hi,
                                   int points_per_decade = 20);

// Mean and population variance (1/T normalization).
struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;
};
SampleMoments sample_moments(const Trace& series);

}  // namespace lrd

#endif
