#ifndef LRD_SIMNET_HPP
#define LRD_SIMNET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lrd/sampling.hpp"
#include "lrd/series.hpp"
#include "lrd/traffic.hpp"
#include "lrd/trace.hpp"

namespace lrd {

enum class CrossGenerator { fgn, onoff };

// Cross-traffic model attached to a queueing node. fGn traffic is
// clipped at zero before it enters the queue.
struct CrossTraffic {
  LrdModel model;
  CrossGenerator generator = CrossGenerator::fgn;
  std::uint64_t seed = 0;
  // on-off parameters (generator == onoff)
  std::int64_t n_sources = 1;
  double min_duration = 5.0;
};

struct NodeConfig {
  double capacity = 1.0;  // service units per slot
  CrossTraffic cross;
  double buffer = 5000.0;          // queue limit in service units
  std::int64_t latency_slots = 0;  // fixed forwarding latency to the next hop
};

struct PathConfig {
  std::vector<NodeConfig> nodes;

  std::string to_json() const;
  static PathConfig from_json(const std::string& text);
};

enum class ProbeKind { single, pair };

struct ProbeDelayRecord {
  std::int64_t send_slot = 0;
  double delay_slots = 0.0;
  bool dropped = false;
};

struct PairDispersionRecord {
  std::int64_t send_slot = 0;
  double dispersion = 0.0;  // g_r in slots
  // the servers stayed busy across the pair window, so the dispersion
  // formula's standing assumption held
  bool valid = true;
  bool dropped = false;
};

struct NodeAccounting {
  double arrived = 0.0;
  double served = 0.0;
  double dropped = 0.0;
  double final_backlog = 0.0;
  double utilization = 0.0;  // realized mean arrival / capacity
  bool unstable = false;     // utilization >= 1
};

struct SimResult {
  std::vector<Trace> busy;  // per node, binary
  std::vector<ProbeDelayRecord> probe_delays;
  std::vector<PairDispersionRecord> pair_dispersions;
  double d_min = 0.0;  // sum of fixed latencies, slots
  std::vector<NodeAccounting> accounting;
};

struct SimOptions {
  double pair_gap_slots = 1.0;  // g_s
  double probe_volume = 0.0;    // zero-volume observers by default
};

// Per-slot fluid FIFO tandem: q(t+1) = min(max(q(t) + y(t) - C, 0), B)
// with overflow dropped. A node is busy in slot t when q(t) + y(t) > 0.
// Probes observe accumulated queueing delay (q + y)/C per node at
// fixed-latency-shifted slots and are flagged dropped when a node
// overflows in their slot. Deterministic per seed.
SimResult simulate_path(const PathConfig& path, const SamplingPattern& probe_pattern,
                        ProbeKind probe_kind, std::uint64_t seed,
                        const SimOptions& options = {});

// Elementwise logical OR of binary traces via the recursion
// wic = w + y - w*y.
Trace or_compose(std::span<const Trace> indicators);

// Covariance of the OR-composed indicator at one lag from the per-node
// covariances and means:
//   c_i = c_{i-1} c_i + c_{i-1} (1-mu_i)^2 + c_i (1-mu_{W,i-1})^2,
//   mu_W updated by the OR rule.
double compose_cov(std::span<const double> cov_at_lag, std::span<const double> means);

// Series version; all series must share the same lag grid.
CovarianceSeries compose_cov_series(std::span<const CovarianceSeries> covs,
                                    std::span<const double> means);

}  // namespace lrd

#endif
