// SPDX-License-Identifier: Apache-2.0
//
// Whole-device harness: wires the chip, the logical-block layer and the
// translation layer together, replays host workloads against the result,
// and checks the core promise of the design — that a device's stored image
// is a function of its logical content alone, not of the path taken there.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "canonftl/ftl.hpp"
#include "canonftl/metrics.hpp"
#include "canonftl/nand.hpp"
#include "canonftl/ubi.hpp"
#include "canonftl/workload.hpp"

namespace canonftl {

struct DeviceConfig {
  FlashGeometry geometry;
  WearConfig wear;
  WearLevelConfig wl;
  FtlConfig ftl;
};

class Device {
 public:
  explicit Device(const DeviceConfig& cfg);  // fresh chip, formatted
  // Adopt an existing chip (e.g. one rebuilt from a snapshot after a crash).
  Device(const DeviceConfig& cfg, FlashArray chip, bool format_chip);

  void write(uint32_t vblock, uint32_t page_in_vblock,
             std::span<const uint8_t> data);
  void read(uint32_t vblock, uint32_t page_in_vblock, std::span<uint8_t> out);
  void trim(uint32_t vblock);
  FlushStats flush();
  void shutdown();  // drain the journal and commit the map durably

  std::vector<uint8_t> snapshot_image() const { return chip_.snapshot_image(); }
  RunStats stats() const;

  FlashArray& chip() { return chip_; }
  const FlashArray& chip() const { return chip_; }
  Ubi& ubi() { return *ubi_; }
  const Ubi& ubi() const { return *ubi_; }
  Ftl& ftl() { return *ftl_; }
  const Ftl& ftl() const { return *ftl_; }
  const DeviceConfig& config() const { return cfg_; }

 private:
  void capture_baseline();

  DeviceConfig cfg_;
  FlashArray chip_;
  std::unique_ptr<Ubi> ubi_;
  std::unique_ptr<Ftl> ftl_;
  uint64_t host_pages_ = 0;
  uint64_t pages_baseline_ = 0;
  std::vector<uint64_t> wear_baseline_;
  UbiCounters counter_baseline_;
};

struct ReplaySpec {
  uint64_t payload_seed = 0;  // write payloads are derived, not recorded
};

struct ReplayStats {
  uint64_t records_applied = 0;
  uint64_t read_records = 0;
  uint64_t write_records = 0;
  uint64_t pages_written = 0;
  uint64_t partial_page_writes = 0;  // splices of a partly-covered page
  uint64_t records_rejected = 0;     // malformed lines skipped (file replay)
};

// Replays block-level records against the device. Offsets wrap modulo the
// device's virtual capacity so full-scale traces drive desk-scale devices.
ReplayStats replay_trace(Device& dev, std::span<const TraceRecord> records,
                         const ReplaySpec& spec = {});
ReplayStats replay_trace_file(Device& dev, const std::string& path,
                              const ReplaySpec& spec = {});

// Flat key=value experiment description ('#' comments, later keys win).
class SimConfig {
 public:
  static SimConfig from_file(const std::string& path);
  void set_pair(const std::string& key_equals_value);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::string str(const std::string& key, const std::string& def) const;
  uint64_t u64(const std::string& key, uint64_t def) const;
  double dbl(const std::string& key, double def) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

DeviceConfig device_config_from(const SimConfig& cfg);

struct SimResult {
  RunStats stats;
  ReplayStats replay;
  std::string summary_path;
  std::string histogram_path;
  std::string image_path;
};

// Runs one experiment end to end and drops summary.csv, histogram.csv and
// final.img into out_dir.
SimResult run_simulation(const SimConfig& cfg, const std::string& out_dir);

enum class HiMode {
  // Two devices reach the same logical content along unrelated op
  // sequences; their stored images must match bit for bit.
  CanonicalState,
  // Journal-aligned windows with permuted write order, for devices whose
  // wear leveling draws swaps from a seeded stream: images, maps and the
  // swap schedules themselves must all agree.
  AlignedWindows,
};

struct HiSpec {
  DeviceConfig device;
  HiMode mode = HiMode::CanonicalState;
  uint32_t trials = 20;
  uint32_t ops_per_trial = 200;
  uint64_t seed = 1;
};

struct HiReport {
  uint32_t trials = 0;
  uint32_t image_mismatches = 0;
  uint32_t map_mismatches = 0;
  uint32_t swap_log_mismatches = 0;
  uint32_t readback_mismatches = 0;
  std::string detail;  // first failure, for the log
  bool ok() const {
    return image_mismatches + map_mismatches + swap_log_mismatches +
               readback_mismatches ==
           0;
  }
};

HiReport verify_hi(const HiSpec& spec);

}  // namespace canonftl
