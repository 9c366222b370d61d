#ifndef LRD_TRACE_HPP
#define LRD_TRACE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lrd {

enum class TraceKind : std::uint16_t {
  increments = 0,   // traffic volume per slot
  binary = 1,       // {0,1} indicator (sampling pattern, busy state)
  observation = 2,  // sampled/derived observation process
};

// A discrete-time real-valued series on a fixed slot grid.
struct Trace {
  double slot_seconds = 1e-3;
  TraceKind kind = TraceKind::increments;
  // Fraction of slots clipped to zero at generation time (0 when no
  // clipping was applied).
  double clipped_fraction = 0.0;
  std::vector<double> values;

  std::int64_t length() const { return static_cast<std::int64_t>(values.size()); }
};

// Binary format: magic "LRDT" | u16 version=1 | u16 kind | u64 length |
// f64 slot_seconds | f64 clipped_fraction | length x f64, little-endian.
void store_trace(const Trace& trace, const std::string& path);
Trace load_trace(const std::string& path);

// One value per line with a "# slot_seconds=<v>" header.
void export_trace_csv(const Trace& trace, const std::string& path);

}  // namespace lrd

#endif
