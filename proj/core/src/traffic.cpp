#include "lrd/traffic.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "lrd/rng.hpp"

namespace lrd {

namespace {

// FFTW planning is not thread safe; execution is.
std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

// Generalized binomial coefficient C(a, k) for real a.
double binom(double a, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r *= (a - (j - 1)) / j;
  return r;
}

double fgn_autocov_raw(double hurst, double variance, double lag) {
  const double h2 = 2.0 * hurst;
  if (lag == 0.0) return variance;
  const double t = std::abs(lag);
  if (t <= 64.0) {
    return 0.5 * variance *
           (std::pow(t + 1.0, h2) - 2.0 * std::pow(t, h2) + std::pow(t - 1.0, h2));
  }
  // (1+x)^2H + (1-x)^2H - 2 = 2 * sum_{k>=1} C(2H, 2k) x^(2k), x = 1/t.
  // Four terms reach machine precision for t > 64.
  const double x2 = 1.0 / (t * t);
  double sum = 0.0, xp = x2;
  for (int k = 1; k <= 4; ++k) {
    sum += binom(h2, 2 * k) * xp;
    xp *= x2;
  }
  return variance * std::pow(t, h2) * sum;
}

}  // namespace

void LrdModel::validate() const {
  if (!(hurst > 0.5 && hurst < 1.0))
    throw std::invalid_argument("hurst must lie in (0.5, 1)");
  if (!(variance > 0.0)) throw std::invalid_argument("variance must be positive");
  if (!(mean_rate >= 0.0)) throw std::invalid_argument("mean_rate must be nonnegative");
  if (!(prefactor > 0.0)) throw std::invalid_argument("prefactor must be positive");
}

double fgn_autocov(const LrdModel& model, std::int64_t lag) {
  if (lag < 0) throw std::invalid_argument("lag must be nonnegative");
  if (model.hurst == 0.5) return lag == 0 ? model.variance : 0.0;
  return fgn_autocov_raw(model.hurst, model.variance, static_cast<double>(lag));
}

Trace gen_fgn(const LrdModel& model, std::int64_t length, std::uint64_t seed,
              const FgnOptions& options) {
  model.validate();
  if (length < 2) throw std::invalid_argument("length must be at least 2");

  // Minimal circulant embedding for n' = m/2 + 1 >= length, m a power of
  // two. The embedding of the fGn covariance is nonnegative definite for
  // H in (0,1), so negative eigenvalues can only come from roundoff.
  std::uint64_t m = 1;
  while (m < 2 * static_cast<std::uint64_t>(length - 1)) m <<= 1;
  if (m < 4) m = 4;
  const std::uint64_t half = m / 2;

  std::vector<double> buf(m + 2);
  for (std::uint64_t j = 0; j <= half; ++j)
    buf[j] = fgn_autocov_raw(model.hurst, model.variance, static_cast<double>(j));
  for (std::uint64_t j = 1; j < half; ++j) buf[m - j] = buf[j];

  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(m), buf.data(),
                               reinterpret_cast<fftw_complex*>(buf.data()),
                               FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(static_cast<int>(m),
                               reinterpret_cast<fftw_complex*>(buf.data()),
                               buf.data(), FFTW_ESTIMATE);
  }
  fftw_execute(fwd);

  double lambda_max = 0.0;
  for (std::uint64_t k = 0; k <= half; ++k)
    lambda_max = std::max(lambda_max, buf[2 * k]);
  const double neg_tol = -1e-9 * lambda_max;

  Rng rng(seed);
  for (std::uint64_t k = 0; k <= half; ++k) {
    double lam = buf[2 * k];
    if (lam < 0.0) {
      if (lam < neg_tol) {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        throw std::runtime_error("circulant embedding produced a negative eigenvalue");
      }
      lam = 0.0;
    }
    const double a = rng.gaussian();
    const double b = rng.gaussian();
    if (k == 0 || k == half) {
      buf[2 * k] = std::sqrt(lam / static_cast<double>(m)) * a;
      buf[2 * k + 1] = 0.0;
    } else {
      const double s = std::sqrt(lam / (2.0 * static_cast<double>(m)));
      buf[2 * k] = s * a;
      buf[2 * k + 1] = s * b;
    }
  }
  fftw_execute(bwd);
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }

  Trace trace;
  trace.slot_seconds = options.slot_seconds;
  trace.kind = TraceKind::increments;
  trace.values.resize(length);
  std::int64_t clipped = 0;
  for (std::int64_t t = 0; t < length; ++t) {
    double v = buf[t] + model.mean_rate;
    if (options.clip_negative && v < 0.0) {
      v = 0.0;
      ++clipped;
    }
    trace.values[t] = v;
  }
  trace.clipped_fraction =
      options.clip_negative ? static_cast<double>(clipped) / static_cast<double>(length) : 0.0;
  return trace;
}

Trace gen_onoff(std::int64_t n_sources, double tail_index, double mean_rate,
                std::int64_t length, std::uint64_t seed, const OnOffOptions& options) {
  if (n_sources < 1) throw std::invalid_argument("n_sources must be at least 1");
  if (!(tail_index > 1.0 && tail_index < 2.0))
    throw std::invalid_argument("tail_index must lie in (1, 2)");
  if (length < 1) throw std::invalid_argument("length must be at least 1");
  if (!(mean_rate >= 0.0)) throw std::invalid_argument("mean_rate must be nonnegative");
  if (!(options.min_duration >= 1.0))
    throw std::invalid_argument("min_duration must be at least 1 slot");

  // Each source alternates on/off with Pareto(tail_index, min_duration)
  // durations, so it is on half the time; the per-source rate makes the
  // aggregate mean equal mean_rate.
  const double rate = 2.0 * mean_rate / static_cast<double>(n_sources);
  std::vector<double> diff(static_cast<std::size_t>(length) + 1, 0.0);
  const double inv_alpha = 1.0 / tail_index;

  for (std::int64_t s = 0; s < n_sources; ++s) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
    bool on = rng.uniform() < 0.5;
    std::int64_t t = 0;
    while (t < length) {
      const double draw = options.min_duration * std::pow(rng.uniform_pos(), -inv_alpha);
      std::int64_t d = static_cast<std::int64_t>(std::llround(draw));
      if (d < 1) d = 1;
      if (on) {
        const std::int64_t a = t;
        const std::int64_t b = std::min(t + d, length);
        diff[a] += rate;
        diff[b] -= rate;
      }
      t += d;
      on = !on;
    }
  }

  Trace trace;
  trace.slot_seconds = options.slot_seconds;
  trace.kind = TraceKind::increments;
  trace.values.resize(length);
  double acc = 0.0;
  for (std::int64_t t = 0; t < length; ++t) {
    acc += diff[t];
    // accumulation roundoff can leave a tiny negative residue
    trace.values[t] = acc > 0.0 ? acc : 0.0;
  }
  return trace;
}

}  // namespace lrd
