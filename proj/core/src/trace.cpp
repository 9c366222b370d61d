#include "lrd/trace.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "lrd/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "trace format I/O assumes a little-endian host");

namespace lrd {

namespace {

constexpr char kMagic[4] = {'L', 'R', 'D', 'T'};
constexpr std::uint16_t kVersion = 1;

template <typename T>
void write_raw(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void read_raw(std::ifstream& in, T& v, const char* what) {
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw FormatError(std::string("trace file truncated reading ") + what);
}

}  // namespace

void store_trace(const Trace& trace, const std::string& path) {
  if (trace.values.empty()) throw std::invalid_argument("refusing to store an empty trace");
  if (trace.slot_seconds <= 0) throw std::invalid_argument("slot_seconds must be positive");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out.write(kMagic, 4);
  write_raw(out, kVersion);
  write_raw(out, static_cast<std::uint16_t>(trace.kind));
  write_raw(out, static_cast<std::uint64_t>(trace.values.size()));
  write_raw(out, trace.slot_seconds);
  write_raw(out, trace.clipped_fraction);
  out.write(reinterpret_cast<const char*>(trace.values.data()),
            static_cast<std::streamsize>(trace.values.size() * sizeof(double)));
  if (!out) throw FormatError("short write to " + path);
}

Trace load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw FormatError(path + ": bad magic, not a trace file");
  std::uint16_t version = 0, kind = 0;
  std::uint64_t length = 0;
  read_raw(in, version, "version");
  if (version != kVersion)
    throw FormatError(path + ": unsupported trace version " + std::to_string(version));
  read_raw(in, kind, "kind");
  if (kind > 2) throw FormatError(path + ": unknown trace kind");
  read_raw(in, length, "length");
  if (length == 0) throw FormatError(path + ": zero-length trace");
  Trace trace;
  trace.kind = static_cast<TraceKind>(kind);
  read_raw(in, trace.slot_seconds, "slot_seconds");
  read_raw(in, trace.clipped_fraction, "clipped_fraction");
  trace.values.resize(length);
  in.read(reinterpret_cast<char*>(trace.values.data()),
          static_cast<std::streamsize>(length * sizeof(double)));
  if (!in) throw FormatError(path + ": truncated payload");
  return trace;
}

void export_trace_csv(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "# slot_seconds=%.17g\n", trace.slot_seconds);
  out << buf;
  for (double v : trace.values) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    out << buf;
  }
}

}  // namespace lrd
