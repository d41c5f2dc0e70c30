// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "canonftl/nand.hpp"

namespace canonftl {

enum class WearKind : uint8_t { None, Random, Epoch, Global };

struct WearLevelConfig {
  WearKind kind = WearKind::None;
  uint64_t epoch_size = 100;     // counted erases per epoch
  uint32_t swaps_per_epoch = 10; // pairs swapped at each boundary
  uint64_t seed = 1;
  // When true the boundary action runs from inside the erase that completes
  // the epoch; tests set false to drive run_wear_leveling() by hand.
  bool auto_run = true;
};

// Fixed partition of the physical blocks: a small ring of anchor blocks for
// the metadata record log, one block reserved for the flush-in-progress
// marker, a free pool for bad-block replacement, and the rest as mappable
// logical blocks.
struct UbiLayout {
  uint32_t anchor_pebs = 0;  // ring occupies PEBs [0, anchor_pebs)
  uint32_t pool_size = 0;
  uint32_t leb_count = 0;

  static UbiLayout for_geometry(const FlashGeometry& g);
};

enum class EraseReason : uint8_t { HostData, Journal };

struct UbiCounters {
  uint64_t host_erasures = 0;
  uint64_t journal_erasures = 0;
  uint64_t swap_erasures = 0;
  uint64_t anchor_erasures = 0;  // ring advances plus marker clears
  uint64_t epochs_elapsed = 0;
};

enum class BootResult : uint8_t { CleanBoot, CrashRecovered };

// Deterministic hot/cold pairing used at every epoch boundary; exposed as a
// free function so the selection rules are testable without a device.
// `counts` is indexed by PEB id (may be empty for Random/None). Returns the
// planned (hot, cold) PEB pairs.
std::vector<std::pair<uint32_t, uint32_t>> plan_swaps(
    WearKind kind, const std::vector<uint32_t>& candidates,
    const std::vector<uint64_t>& counts, uint32_t pairs, uint64_t seed,
    uint64_t epoch_index);

// Logical-to-physical block indirection with transparent bad-block
// replacement, pluggable wear leveling, an append-only anchor record log for
// shutdown commits, and a dedicated erased-when-quiescent marker block used
// by the journal flush protocol.
class Ubi {
 public:
  using StepHook = std::function<void()>;

  // format=true initializes a fresh device on the chip; format=false scans
  // the chip and recovers (clean boot via the anchor log, or a full header
  // scan after a crash).
  Ubi(FlashArray& chip, const WearLevelConfig& wl, bool format);

  uint32_t leb_count() const { return layout_.leb_count; }
  uint32_t pages_per_leb() const { return chip_.geometry().pages_per_block; }
  const FlashGeometry& geometry() const { return chip_.geometry(); }
  const UbiLayout& layout() const { return layout_; }
  uint32_t entry_bits() const { return entry_bits_; }
  BootResult boot_result() const { return boot_result_; }

  void read(uint32_t leb, uint32_t page, std::span<uint8_t> data) const;
  void read_spare(uint32_t leb, uint32_t page, std::span<uint8_t> spare) const;
  bool data_programmed(uint32_t leb, uint32_t page) const;
  bool spare_programmed(uint32_t leb, uint32_t page) const;
  void write(uint32_t leb, uint32_t page, std::span<const uint8_t> data,
             std::span<const uint8_t> spare);
  void erase(uint32_t leb, EraseReason reason);

  // Swap plan execution at an epoch boundary (public form validates the
  // boundary precondition). Returns the planned pairs.
  std::vector<std::pair<uint32_t, uint32_t>> run_wear_leveling();
  void swap_pebs(uint32_t a, uint32_t b);

  // Flush-in-progress marker: a single record on the marker block listing the
  // logical blocks a flush will rewrite; cleared (erased) once the flush has
  // retired its journal. Quiescent devices have an erased marker block.
  void write_flush_marker(const std::vector<uint32_t>& target_lebs);
  std::optional<std::vector<uint32_t>> active_flush_marker() const;
  void clear_flush_marker();

  // Appends a map commit plus a clean-shutdown flag to the anchor log.
  void commit_shutdown();

  uint32_t peb_of(uint32_t leb) const;
  const std::vector<uint32_t>& map_table() const { return map_; }
  std::vector<uint32_t> bad_pebs() const;
  std::vector<uint32_t> free_pool() const;
  const std::vector<uint64_t>& epoch_counts() const { return epoch_counts_; }
  // Per-PEB histogram of wear-accounted erases (host data + journal + swap);
  // metadata-ring and marker erases are deliberately outside wear accounting
  // and appear only in counters().anchor_erasures.
  const std::vector<uint64_t>& wear_counts() const { return wear_counts_; }
  uint64_t counted_in_epoch() const { return counted_in_epoch_; }
  uint64_t epoch_index() const { return epoch_index_; }
  const UbiCounters& counters() const { return counters_; }
  const std::vector<std::pair<uint32_t, uint32_t>>& swap_log() const {
    return swap_log_;
  }

  // Boot-time replay settles work that predates the reboot; those erases
  // wear the blocks and land in the reason ledgers, but they must not tick
  // the epoch clock — a reboot discards epoch progress outright, and replay
  // work must never be able to trigger wear leveling mid-boot.
  void pause_epoch_clock() { epoch_clock_paused_ = true; }
  void resume_epoch_clock() { epoch_clock_paused_ = false; }

  // An erase-then-rewrite of one block must land as a single unit: if the
  // erase completes an epoch, running the leveling pass right away would put
  // a crash point between the erase and the rewrites, exposing a blank block
  // whose old contents are unrecoverable. The caller brackets the sequence;
  // a boundary reached inside it is postponed until the rewrite lands.
  void begin_atomic_rewrite() { in_atomic_rewrite_ = true; }
  void finish_atomic_rewrite() {
    in_atomic_rewrite_ = false;
    unit_boundary();  // the rebuilt block is now a consistent crash point
    if (boundary_deferred_) {
      boundary_deferred_ = false;
      wl_boundary_reached();
    }
  }

  // Crash-point instrumentation: the hook fires after every atomic protocol
  // unit (journal append, anchor record, block rebuild, journal erase, swap
  // pair, ring/marker erase). The journal layer calls this for its units too.
  void set_step_hook(StepHook h) { hook_ = std::move(h); }
  void unit_boundary() {
    if (hook_) hook_();
  }

  // Size in bytes of a persisted map table of `entries` values packed at
  // `bits` bits each.
  static uint64_t map_table_bytes(uint64_t entries, uint32_t bits);

 private:
  struct AnchorRecord {
    uint8_t type = 0;
    uint64_t seq = 0;
    std::vector<uint8_t> body;  // bytes after seq
    uint32_t peb = 0;
    uint32_t page = 0;
  };

  void format();
  void boot();
  void derive_residual_pebs();
  void write_header(uint32_t leb);
  uint32_t require_mapped_peb(uint32_t leb) const;
  uint32_t take_pool_min(const char* why);
  void wl_boundary_reached();
  std::vector<std::pair<uint32_t, uint32_t>> wl_core();

  std::vector<uint8_t> encode_record(uint8_t type,
                                     std::span<const uint8_t> body) const;
  std::optional<AnchorRecord> parse_record_page(uint32_t peb,
                                                uint32_t page) const;
  void append_anchor_record(uint8_t type, std::span<const uint8_t> body);
  void ensure_ring_space();
  std::vector<uint8_t> commit_body() const;

  FlashArray& chip_;
  WearLevelConfig wl_;
  UbiLayout layout_;
  uint32_t entry_bits_ = 0;

  std::vector<uint32_t> map_;   // leb -> peb
  std::vector<int64_t> owner_;  // peb -> leb, or -1
  std::set<uint32_t> pool_;     // ascending physical index
  std::set<uint32_t> bad_;
  uint32_t marker_peb_ = 0;

  std::vector<uint64_t> epoch_counts_;  // per PEB, RAM only
  std::vector<uint64_t> wear_counts_;   // per PEB, wear-accounted erases only
  uint64_t counted_in_epoch_ = 0;
  uint64_t epoch_index_ = 0;
  bool epoch_clock_paused_ = false;
  bool in_atomic_rewrite_ = false;
  bool boundary_deferred_ = false;

  uint64_t last_seq_ = 0;
  uint32_t ring_peb_ = 0;
  uint32_t ring_page_ = 0;

  std::optional<std::vector<uint32_t>> marker_;
  UbiCounters counters_;
  std::vector<std::pair<uint32_t, uint32_t>> swap_log_;
  StepHook hook_;
  BootResult boot_result_ = BootResult::CleanBoot;
};

}  // namespace canonftl
