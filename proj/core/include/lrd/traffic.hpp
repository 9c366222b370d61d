#ifndef LRD_TRAFFIC_HPP
#define LRD_TRAFFIC_HPP

#include <cstdint>

#include "lrd/trace.hpp"

namespace lrd {

// Long-range-dependent traffic model: autocovariance decays as
// K * variance * tau^(2H-2) for large lags.
struct LrdModel {
  double hurst = 0.8;      // H in (0.5, 1)
  double variance = 1.0;   // sigma_Y^2 per slot
  double mean_rate = 0.0;  // mu_Y, volume per slot
  double prefactor = 1.0;  // K

  void validate() const;
};

// Exact autocovariance of fractional Gaussian noise at an integer lag:
// (sigma^2/2) * (|t+1|^2H - 2|t|^2H + |t-1|^2H).
// Evaluated through a series expansion at large lags, where the direct
// second difference loses all significant digits.
double fgn_autocov(const LrdModel& model, std::int64_t lag);

struct FgnOptions {
  double slot_seconds = 1e-3;
  // Clip negative values to zero (queue-feeding use); the clipped
  // fraction is recorded in the trace. Clipping shifts the moments, so
  // leave it off for sampling/estimation experiments.
  bool clip_negative = false;
};

// Exact fractional Gaussian noise of the requested length via circulant
// embedding of the fGn covariance; values are shifted by mean_rate.
// Deterministic per seed.
Trace gen_fgn(const LrdModel& model, std::int64_t length, std::uint64_t seed,
              const FgnOptions& options = {});

struct OnOffOptions {
  double slot_seconds = 1e-3;
  // Pareto location parameter (minimum on/off duration, slots). The
  // power-law covariance regime starts around this scale.
  double min_duration = 10.0;
};

// Superposition of n independent on-off sources whose on and off
// durations are Pareto with the given tail index in (1, 2); the
// aggregate has target Hurst parameter (3 - tail_index) / 2 and mean
// rate mean_rate. Sources start at a renewal epoch in a uniformly
// random state.
Trace gen_onoff(std::int64_t n_sources, double tail_index, double mean_rate,
                std::int64_t length, std::uint64_t seed,
                const OnOffOptions& options = {});

}  // namespace lrd

#endif
