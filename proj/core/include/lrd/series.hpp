#ifndef LRD_SERIES_HPP
#define LRD_SERIES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lrd {

enum class SeriesSource { traffic, observation, sampling, reconstructed };

struct CovarianceSeries {
  std::vector<std::int64_t> lags;  // strictly increasing
  std::vector<double> values;
  std::int64_t sample_length = 0;
  SeriesSource source = SeriesSource::traffic;
};

struct AggVarSeries {
  std::vector<std::int64_t> block_sizes;  // increasing
  std::vector<double> variances;
  std::int64_t sample_length = 0;
};

struct SpectrumSeries {
  std::vector<double> frequencies;  // cycles/slot, in (0, 0.5]
  std::vector<double> densities;
  std::int64_t sample_length = 0;
  int segments = 0;
};

enum class HurstMethod { cov_slope, agg_var, psd };

struct HurstEstimate {
  double value = 0.0;
  double slope = 0.0;
  double slope_stderr = 0.0;
  HurstMethod method = HurstMethod::cov_slope;
  double range_lo = 0.0;  // lag or frequency range used for the fit
  double range_hi = 0.0;
  int points_used = 0;
  int excluded_nonpositive = 0;
  bool out_of_range = false;  // raw value fell outside (0, 1)
};

const char* to_string(SeriesSource source);
const char* to_string(HurstMethod method);

// CSV exports: `lag,value` / `M,variance` / `freq,density` preceded by
// `# key=value` metadata lines.
void export_csv(const CovarianceSeries& series, const std::string& path,
                const std::map<std::string, std::string>& metadata = {});
void export_csv(const AggVarSeries& series, const std::string& path,
                const std::map<std::string, std::string>& metadata = {});
void export_csv(const SpectrumSeries& series, const std::string& path,
                const std::map<std::string, std::string>& metadata = {});

}  // namespace lrd

#endif
