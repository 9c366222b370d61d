#include "lrd/sampling.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "lrd/errors.hpp"
#include "lrd/rng.hpp"

namespace lrd {

InterSampleSpec InterSampleSpec::geometric(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("geometric p must lie in (0, 1]");
  InterSampleSpec s;
  s.dist_ = SamplingDist::geometric;
  s.p_ = p;
  return s;
}

InterSampleSpec InterSampleSpec::periodic(std::int64_t delta) {
  if (delta < 1) throw std::invalid_argument("periodic delta must be at least 1");
  InterSampleSpec s;
  s.dist_ = SamplingDist::periodic;
  s.delta_ = delta;
  return s;
}

InterSampleSpec InterSampleSpec::gamma(int shape, double mean_intensity) {
  if (shape != 2 && shape != 4)
    throw UnsupportedError("gamma sampling supports shape 2 or 4 only");
  if (!(mean_intensity > 0.0 && mean_intensity < 1.0))
    throw std::invalid_argument("gamma mean intensity must lie in (0, 1)");
  InterSampleSpec s;
  s.dist_ = SamplingDist::gamma;
  s.shape_ = shape;
  s.gamma_mu_ = mean_intensity;
  return s;
}

InterSampleSpec InterSampleSpec::uniform(double support_b) {
  if (!(support_b > 2.0))
    throw std::invalid_argument("uniform support must exceed 2 slots (mu_A < 1)");
  InterSampleSpec s;
  s.dist_ = SamplingDist::uniform;
  s.b_ = support_b;
  return s;
}

double InterSampleSpec::mean_intensity() const {
  switch (dist_) {
    case SamplingDist::geometric: return p_;
    case SamplingDist::periodic: return 1.0 / static_cast<double>(delta_);
    case SamplingDist::gamma: return gamma_mu_;
    case SamplingDist::uniform: return 2.0 / b_;
  }
  return 0.0;
}

double InterSampleSpec::indicator_variance() const {
  const double mu = mean_intensity();
  return mu * (1.0 - mu);
}

double InterSampleSpec::autocov(std::int64_t lag) const {
  if (lag < 0) throw std::invalid_argument("lag must be nonnegative");
  if (lag == 0) return indicator_variance();
  const double mu = mean_intensity();
  const double tau = static_cast<double>(lag);
  switch (dist_) {
    case SamplingDist::geometric:
      return 0.0;
    case SamplingDist::periodic: {
      const double d = static_cast<double>(delta_);
      if (lag % delta_ == 0) return 1.0 / d - 1.0 / (d * d);
      return -1.0 / (d * d);
    }
    case SamplingDist::gamma: {
      const double beta = shape_ * mu;
      if (shape_ == 2) return -mu * mu * std::exp(-2.0 * beta * tau);
      return -mu * mu *
             (std::exp(-2.0 * beta * tau) + 2.0 * std::sin(beta * tau) * std::exp(-beta * tau));
    }
    case SamplingDist::uniform: {
      if (tau > b_) return 0.0;  // approximate, flagged via autocov_exact
      return mu * mu * (0.5 * std::exp(0.5 * mu * tau) - 1.0);
    }
  }
  return 0.0;
}

bool InterSampleSpec::autocov_exact(std::int64_t lag) const {
  return !(dist_ == SamplingDist::uniform && static_cast<double>(lag) > b_);
}

std::string InterSampleSpec::to_json() const {
  nlohmann::json j;
  switch (dist_) {
    case SamplingDist::geometric:
      j = {{"dist", "geometric"}, {"p", p_}};
      break;
    case SamplingDist::periodic:
      j = {{"dist", "periodic"}, {"delta", delta_}};
      break;
    case SamplingDist::gamma:
      j = {{"dist", "gamma"}, {"alpha", shape_}, {"mu", gamma_mu_}};
      break;
    case SamplingDist::uniform:
      j = {{"dist", "uniform"}, {"b", b_}};
      break;
  }
  return j.dump();
}

InterSampleSpec InterSampleSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad sampling spec JSON: ") + e.what());
  }
  const std::string dist = j.value("dist", "");
  if (dist == "geometric") return geometric(j.at("p").get<double>());
  if (dist == "periodic") return periodic(j.at("delta").get<std::int64_t>());
  if (dist == "gamma")
    return gamma(j.at("alpha").get<int>(), j.at("mu").get<double>());
  if (dist == "uniform") return uniform(j.at("b").get<double>());
  throw FormatError("unknown sampling dist '" + dist + "'");
}

namespace {

// Integer gap draw, >= 1 slot.
std::int64_t draw_gap(const InterSampleSpec& spec, Rng& rng) {
  switch (spec.dist()) {
    case SamplingDist::geometric: {
      const double p = spec.p();
      if (p >= 1.0) return 1;
      const double g = std::floor(std::log(rng.uniform_pos()) / std::log1p(-p));
      return 1 + static_cast<std::int64_t>(g);
    }
    case SamplingDist::periodic:
      return spec.delta();
    case SamplingDist::gamma: {
      const double beta = spec.shape() * spec.mean_intensity();
      double sum = 0.0;
      for (int i = 0; i < spec.shape(); ++i) sum += -std::log(rng.uniform_pos()) / beta;
      const std::int64_t d = static_cast<std::int64_t>(std::llround(sum));
      return d < 1 ? 1 : d;
    }
    case SamplingDist::uniform: {
      const std::int64_t d =
          static_cast<std::int64_t>(std::llround(rng.uniform() * spec.support_b()));
      return d < 1 ? 1 : d;
    }
  }
  return 1;
}

// Emits event slots >= 0 in increasing order until the callback returns
// false. The phase is stationary: geometric uses the memoryless first
// gap, periodic a uniformly random offset, and the continuous variants
// a 1000-gap burn-in.
void emit_events(const InterSampleSpec& spec, std::uint64_t seed,
                 const std::function<bool(std::int64_t)>& emit) {
  Rng rng(seed);
  std::int64_t pos = 0;
  switch (spec.dist()) {
    case SamplingDist::geometric: {
      const double p = spec.p();
      if (p >= 1.0) {
        pos = 0;
      } else {
        pos = static_cast<std::int64_t>(
            std::floor(std::log(rng.uniform_pos()) / std::log1p(-p)));
      }
      break;
    }
    case SamplingDist::periodic:
      pos = static_cast<std::int64_t>(rng.uniform() * static_cast<double>(spec.delta()));
      break;
    case SamplingDist::gamma:
    case SamplingDist::uniform: {
      std::int64_t burn = 0;
      for (int i = 0; i < 1000; ++i) burn += draw_gap(spec, rng);
      std::int64_t t = -burn;
      while (t < 0) t += draw_gap(spec, rng);
      pos = t;
      break;
    }
  }
  while (emit(pos)) pos += draw_gap(spec, rng);
}

}  // namespace

SamplingPattern draw_pattern(const InterSampleSpec& spec, std::int64_t length,
                             std::uint64_t seed) {
  if (length < 1) throw std::invalid_argument("length must be at least 1");
  SamplingPattern pattern;
  pattern.spec = spec;
  pattern.seed = seed;
  pattern.indicator.kind = TraceKind::binary;
  pattern.indicator.values.assign(length, 0.0);
  emit_events(spec, seed, [&](std::int64_t t) {
    if (t >= length) return false;
    pattern.indicator.values[t] = 1.0;
    return true;
  });
  return pattern;
}

SamplingPattern draw_pattern_events(const InterSampleSpec& spec, std::int64_t n_events,
                                    std::uint64_t seed) {
  if (n_events < 1) throw std::invalid_argument("n_events must be at least 1");
  std::vector<std::int64_t> slots;
  slots.reserve(n_events);
  emit_events(spec, seed, [&](std::int64_t t) {
    slots.push_back(t);
    return static_cast<std::int64_t>(slots.size()) < n_events;
  });
  SamplingPattern pattern;
  pattern.spec = spec;
  pattern.seed = seed;
  pattern.indicator.kind = TraceKind::binary;
  pattern.indicator.values.assign(slots.back() + 1, 0.0);
  for (std::int64_t t : slots) pattern.indicator.values[t] = 1.0;
  return pattern;
}

Trace apply(const SamplingPattern& pattern, const Trace& traffic) {
  if (pattern.indicator.length() != traffic.length())
    throw std::invalid_argument("pattern and traffic lengths differ");
  if (pattern.indicator.slot_seconds != traffic.slot_seconds)
    throw std::invalid_argument("pattern and traffic slot durations differ");
  Trace w;
  w.slot_seconds = traffic.slot_seconds;
  w.kind = TraceKind::observation;
  w.values.resize(traffic.values.size());
  for (std::size_t t = 0; t < traffic.values.size(); ++t)
    w.values[t] = pattern.indicator.values[t] * traffic.values[t];
  return w;
}

}  // namespace lrd
