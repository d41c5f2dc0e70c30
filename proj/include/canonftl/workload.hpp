// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace canonftl {

enum class IoKind : uint8_t { Read, Write };

// One block-IO request in the enterprise-trace CSV schema
// (Timestamp,Hostname,DiskNumber,Type,Offset,Size,ResponseTime); the fields
// that matter to the simulator are kept, the rest are ignored on parse.
struct TraceRecord {
  uint64_t timestamp = 0;
  IoKind kind = IoKind::Read;
  uint64_t offset = 0;  // bytes
  uint64_t size = 0;    // bytes, > 0

  bool operator==(const TraceRecord&) const = default;
};

// Parses one CSV line. Throws MalformedLine on anything that is not a
// well-formed Read/Write record (wrong field count, bad numbers, unknown
// type, zero size).
TraceRecord parse_trace_line(const std::string& line);

// Canonical 7-field serialization of a record (placeholder host/disk/latency).
std::string format_trace_line(const TraceRecord& r);

struct VirtualOp {
  IoKind kind = IoKind::Write;
  uint64_t vblock = 0;
  bool sub_block = false;  // request covers only part of this virtual block
};

// Expands a byte-range request into the virtual blocks it touches, flagging
// partial first/last coverage. When total_vblocks > 0, any id outside
// [0, total_vblocks) raises VirtualBlockOutOfRange; with 0 the caller is
// responsible for range-checking.
std::vector<VirtualOp> to_virtual_ops(const TraceRecord& r,
                                      uint64_t vblock_bytes,
                                      uint64_t total_vblocks = 0);

struct SizeBucket {
  uint64_t bytes = 0;
  double probability = 0.0;
};

struct SyntheticSpec {
  uint64_t op_count = 0;
  uint64_t space_bytes = 0;
  std::vector<SizeBucket> size_distribution;
  double hotspot_fraction = 0.2;      // leading fraction of space that is hot
  double hot_traffic_fraction = 0.8;  // fraction of ops aimed at the hotspot
  uint64_t rng_seed = 1;
};

void validate(const SyntheticSpec& s);

// Size mixes measured from the week-long enterprise volumes commonly used to
// drive flash simulations; the residual bucket is represented as 32 KiB.
// Names: web_1, wdev_0, hm_0.
std::vector<SizeBucket> preset_size_mix(const std::string& name);

// Deterministic write-only stream: categorical size draw plus a two-region
// hotspot, all offsets 512-byte aligned and fully inside the space.
std::vector<TraceRecord> generate_synthetic(const SyntheticSpec& s);

// Streaming reader over plain or gzip-compressed trace files; one record per
// non-empty line. Throws MalformedLine (with line number) on bad input.
class TraceReader {
 public:
  explicit TraceReader(const std::string& path);
  ~TraceReader();
  TraceReader(const TraceReader&) = delete;
  TraceReader& operator=(const TraceReader&) = delete;

  bool next(TraceRecord& out);  // false at end of stream
  uint64_t line_number() const { return line_no_; }

 private:
  void* gz_ = nullptr;  // gzFile, kept opaque to avoid zlib.h in the header
  uint64_t line_no_ = 0;
};

void write_trace_file(const std::string& path,
                      const std::vector<TraceRecord>& records);

}  // namespace canonftl
