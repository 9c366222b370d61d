#include "lrd/estimation.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "lrd/errors.hpp"

namespace lrd {

namespace {

std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

void write_metadata(std::ofstream& out, const std::map<std::string, std::string>& metadata) {
  for (const auto& [k, v] : metadata) out << "# " << k << "=" << v << "\n";
}

}  // namespace

const char* to_string(SeriesSource source) {
  switch (source) {
    case SeriesSource::traffic: return "traffic";
    case SeriesSource::observation: return "observation";
    case SeriesSource::sampling: return "sampling";
    case SeriesSource::reconstructed: return "reconstructed";
  }
  return "?";
}

const char* to_string(HurstMethod method) {
  switch (method) {
    case HurstMethod::cov_slope: return "cov_slope";
    case HurstMethod::agg_var: return "agg_var";
    case HurstMethod::psd: return "psd";
  }
  return "?";
}

void export_csv(const CovarianceSeries& series, const std::string& path,
                const std::map<std::string, std::string>& metadata) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_metadata(out, metadata);
  out << "# T=" << series.sample_length << "\n";
  out << "# source=" << to_string(series.source) << "\n";
  char buf[64];
  for (std::size_t i = 0; i < series.lags.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g\n",
                  static_cast<long long>(series.lags[i]), series.values[i]);
    out << buf;
  }
}

void export_csv(const AggVarSeries& series, const std::string& path,
                const std::map<std::string, std::string>& metadata) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_metadata(out, metadata);
  out << "# T=" << series.sample_length << "\n";
  char buf[64];
  for (std::size_t i = 0; i < series.block_sizes.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g\n",
                  static_cast<long long>(series.block_sizes[i]), series.variances[i]);
    out << buf;
  }
}

void export_csv(const SpectrumSeries& series, const std::string& path,
                const std::map<std::string, std::string>& metadata) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_metadata(out, metadata);
  out << "# T=" << series.sample_length << "\n";
  out << "# segments=" << series.segments << "\n";
  char buf[64];
  for (std::size_t i = 0; i < series.frequencies.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", series.frequencies[i],
                  series.densities[i]);
    out << buf;
  }
}

CovarianceSeries sample_autocov(const Trace& series, const std::vector<std::int64_t>& lags,
                                const MeanMode& mode) {
  const std::int64_t T = series.length();
  if (T < 2) throw std::invalid_argument("series too short");
  std::vector<std::int64_t> sorted = lags;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty()) {
    if (sorted.front() < 0) throw std::invalid_argument("negative lag");
    if (sorted.back() >= T) throw std::invalid_argument("lag exceeds series length");
    if (sorted.back() > T / 10)
      throw std::invalid_argument("max lag exceeds T/10; the estimator bias is unbounded");
  }

  // prefix sums for the window means
  std::vector<double> prefix(T + 1);
  prefix[0] = 0.0;
  for (std::int64_t t = 0; t < T; ++t) prefix[t + 1] = prefix[t] + series.values[t];

  CovarianceSeries out;
  out.lags = sorted;
  out.values.resize(sorted.size());
  out.sample_length = T;
  out.source = series.kind == TraceKind::observation ? SeriesSource::observation
               : series.kind == TraceKind::binary    ? SeriesSource::sampling
                                                     : SeriesSource::traffic;

  const double* y = series.values.data();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::int64_t tau = sorted[i];
    const std::int64_t n = T - tau;
    double cross = 0.0;
    for (std::int64_t t = 0; t < n; ++t) cross += y[t] * y[t + tau];
    cross /= static_cast<double>(n);
    const double m0 = (prefix[n] - prefix[0]) / static_cast<double>(n);
    const double mt = (prefix[T] - prefix[tau]) / static_cast<double>(n);
    switch (mode.kind) {
      case MeanMode::Kind::per_window:
        out.values[i] = cross - m0 * mt;
        break;
      case MeanMode::Kind::global: {
        const double g = prefix[T] / static_cast<double>(T);
        out.values[i] = cross - g * (m0 + mt) + g * g;
        break;
      }
      case MeanMode::Kind::known:
        out.values[i] = cross - mode.mu * (m0 + mt) + mode.mu * mode.mu;
        break;
    }
  }
  return out;
}

AggVarSeries aggregate_variance(const Trace& series,
                                const std::vector<std::int64_t>& block_sizes) {
  const std::int64_t T = series.length();
  std::vector<std::int64_t> sorted = block_sizes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw std::invalid_argument("no block sizes");
  if (sorted.front() < 1) throw std::invalid_argument("block size must be at least 1");
  if (T / sorted.back() < 100)
    throw std::invalid_argument("fewer than 100 blocks at the largest block size");

  std::vector<double> prefix(T + 1);
  prefix[0] = 0.0;
  for (std::int64_t t = 0; t < T; ++t) prefix[t + 1] = prefix[t] + series.values[t];

  AggVarSeries out;
  out.block_sizes = sorted;
  out.variances.resize(sorted.size());
  out.sample_length = T;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::int64_t M = sorted[i];
    const std::int64_t n = T / M;
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
      const double b = (prefix[(k + 1) * M] - prefix[k * M]) / static_cast<double>(M);
      sum += b;
      sumsq += b * b;
    }
    const double mean = sum / static_cast<double>(n);
    out.variances[i] = std::max(sumsq / static_cast<double>(n) - mean * mean, 0.0);
  }
  return out;
}

SpectrumSeries periodogram(const Trace& series, int min_segments) {
  const std::int64_t T = series.length();
  if (T < 4096) throw std::invalid_argument("series too short for a periodogram (need 4096)");
  if (min_segments < 1) throw std::invalid_argument("min_segments must be positive");

  std::int64_t L = 1;
  while (L * 2 * min_segments <= T) L *= 2;
  const std::int64_t n_seg = T / L;

  // periodic Hann window
  std::vector<double> window(L);
  double window_power = 0.0;
  for (std::int64_t t = 0; t < L; ++t) {
    window[t] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(t) /
                                      static_cast<double>(L)));
    window_power += window[t] * window[t];
  }

  std::vector<double> in(L);
  std::vector<double> spec(L / 2 + 1, 0.0);
  std::vector<fftw_complex> fout(L / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(L), in.data(), fout.data(), FFTW_ESTIMATE);
  }
  for (std::int64_t s = 0; s < n_seg; ++s) {
    const double* seg = series.values.data() + s * L;
    double mean = 0.0;
    for (std::int64_t t = 0; t < L; ++t) mean += seg[t];
    mean /= static_cast<double>(L);
    for (std::int64_t t = 0; t < L; ++t) in[t] = (seg[t] - mean) * window[t];
    fftw_execute(plan);
    for (std::int64_t k = 0; k <= L / 2; ++k)
      spec[k] += fout[k][0] * fout[k][0] + fout[k][1] * fout[k][1];
  }
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(plan);
  }

  SpectrumSeries out;
  out.sample_length = T;
  out.segments = static_cast<int>(n_seg);
  out.frequencies.reserve(L / 2);
  out.densities.reserve(L / 2);
  const double norm = 1.0 / (static_cast<double>(n_seg) * window_power);
  for (std::int64_t k = 1; k <= L / 2; ++k) {
    out.frequencies.push_back(static_cast<double>(k) / static_cast<double>(L));
    out.densities.push_back(spec[k] * norm);
  }
  return out;
}

LogLogFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y,
                     double range_lo, double range_hi) {
  if (x.size() != y.size()) throw std::invalid_argument("x/y size mismatch");
  LogLogFit fit;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < range_lo || x[i] > range_hi) continue;
    if (!(x[i] > 0.0)) throw std::invalid_argument("x values must be positive");
    if (!(y[i] > 0.0)) {
      ++fit.excluded_nonpositive;
      continue;
    }
    lx.push_back(std::log10(x[i]));
    ly.push_back(std::log10(y[i]));
  }
  const std::size_t n = lx.size();
  if (n < 5)
    throw std::invalid_argument("fewer than 5 usable points in the fit range (" +
                                std::to_string(fit.excluded_nonpositive) +
                                " nonpositive excluded)");
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("degenerate fit: all x equal");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ssr += r * r;
  }
  fit.slope_stderr = n > 2 ? std::sqrt(ssr / static_cast<double>(n - 2) / sxx) : 0.0;
  fit.points_used = static_cast<int>(n);
  return fit;
}

HurstEstimate hurst_from_slope(double slope, HurstMethod method, double slope_stderr,
                               double range_lo, double range_hi) {
  if (!std::isfinite(slope)) throw std::invalid_argument("slope must be finite");
  HurstEstimate est;
  est.slope = slope;
  est.slope_stderr = slope_stderr;
  est.method = method;
  est.range_lo = range_lo;
  est.range_hi = range_hi;
  double h = 0.0;
  switch (method) {
    case HurstMethod::cov_slope:
    case HurstMethod::agg_var:
      h = 1.0 + slope / 2.0;
      break;
    case HurstMethod::psd:
      h = (1.0 - slope) / 2.0;
      break;
  }
  est.value = std::clamp(h, 0.0, 1.0);
  est.out_of_range = est.value != h;
  return est;
}

HurstEstimate hurst_from_fit(const LogLogFit& fit, HurstMethod method, double range_lo,
                             double range_hi) {
  HurstEstimate est = hurst_from_slope(fit.slope, method, fit.slope_stderr, range_lo, range_hi);
  est.points_used = fit.points_used;
  est.excluded_nonpositive = fit.excluded_nonpositive;
  return est;
}

std::vector<std::int64_t> log_lags(std::int64_t lo, std::int64_t hi, int points_per_decade) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad lag range");
  if (points_per_decade < 1) throw std::invalid_argument("bad grid density");
  std::vector<std::int64_t> lags;
  const double step = 1.0 / points_per_decade;
  for (double e = std::log10(static_cast<double>(lo));
       e <= std::log10(static_cast<double>(hi)) + 1e-12; e += step) {
    const std::int64_t lag = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
    if (lag < lo || lag > hi) continue;
    if (lags.empty() || lags.back() != lag) lags.push_back(lag);
  }
  if (lags.empty() || lags.back() != hi) lags.push_back(hi);
  return lags;
}

SampleMoments sample_moments(const Trace& series) {
  const std::int64_t T = series.length();
  if (T < 1) throw std::invalid_argument("empty series");
  double sum = 0.0;
  for (double v : series.values) sum += v;
  const double mean = sum / static_cast<double>(T);
  double ss = 0.0;
  for (double v : series.values) ss += (v - mean) * (v - mean);
  return {mean, ss / static_cast<double>(T)};
}

}  // namespace lrd
