#ifndef LRD_SAMPLING_HPP
#define LRD_SAMPLING_HPP

#include <cstdint>
#include <string>

#include "lrd/trace.hpp"

namespace lrd {

enum class SamplingDist { geometric, periodic, gamma, uniform };

// Parametrized inter-sample-time distribution of a renewal point
// process. Carries the mean intensity mu_A, the indicator variance
// sigma_A^2 = mu_A (1 - mu_A), and the closed-form indicator
// autocovariance c_A(tau).
class InterSampleSpec {
 public:
  static InterSampleSpec geometric(double p);
  static InterSampleSpec periodic(std::int64_t delta);
  // Erlang inter-sample times; only shape 2 and 4 have closed-form
  // autocovariances. rate = shape * mean_intensity.
  static InterSampleSpec gamma(int shape, double mean_intensity);
  static InterSampleSpec uniform(double support_b);

  SamplingDist dist() const { return dist_; }
  double mean_intensity() const;         // mu_A
  double indicator_variance() const;     // sigma_A^2
  double autocov(std::int64_t lag) const;  // c_A(tau)
  // False only for uniform sampling at lags beyond the support, where
  // c_A is returned as an approximate zero.
  bool autocov_exact(std::int64_t lag) const;

  double p() const { return p_; }
  std::int64_t delta() const { return delta_; }
  int shape() const { return shape_; }
  double support_b() const { return b_; }

  // {"dist": "...", params...}
  std::string to_json() const;
  static InterSampleSpec from_json(const std::string& text);

  bool operator==(const InterSampleSpec&) const = default;

 private:
  InterSampleSpec() = default;
  SamplingDist dist_ = SamplingDist::geometric;
  double p_ = 0.1;          // geometric
  std::int64_t delta_ = 0;  // periodic
  int shape_ = 0;           // gamma
  double gamma_mu_ = 0.0;   // gamma mean intensity
  double b_ = 0.0;          // uniform support
};

struct SamplingPattern {
  Trace indicator;  // binary
  InterSampleSpec spec;
  std::uint64_t seed = 0;
};

// Binary renewal pattern of the given length; gaps between events are
// iid draws from the spec, rounded to >= 1 slot for the continuous
// variants. Deterministic per seed.
SamplingPattern draw_pattern(const InterSampleSpec& spec, std::int64_t length,
                             std::uint64_t seed);

// Pattern containing exactly n_events ones; its length is one past the
// last event slot.
SamplingPattern draw_pattern_events(const InterSampleSpec& spec, std::int64_t n_events,
                                    std::uint64_t seed);

// W(t) = A(t) Y(t)
Trace apply(const SamplingPattern& pattern, const Trace& traffic);

}  // namespace lrd

#endif
