// SPDX-License-Identifier: Apache-2.0
//
// Virtual-block translation layer: a deterministic allocator that scatters
// virtual blocks over the logical block space, an optional write journal
// that batches host writes before rebuilding their target blocks, and the
// redo logic that makes an interrupted flush finish idempotently at boot.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "canonftl/feistel.hpp"
#include "canonftl/ubi.hpp"

namespace canonftl {

enum class AllocVariant : uint8_t {
  Basic,     // one permutation over every (virtual block, page) slot
  Locality,  // permute virtual block numbers; pages stay contiguous
};

struct AllocatorConfig {
  AllocVariant variant = AllocVariant::Basic;
  uint64_t permutation_seed = 0;
  uint32_t virtual_blocks = 0;       // host-visible block count
  uint32_t virtual_block_pages = 1;  // pages per virtual block
};

// Static, history-independent placement: the slot of a (virtual block, page)
// pair depends only on the configuration, never on write order.
class Allocator {
 public:
  Allocator(const AllocatorConfig& cfg, uint32_t pages_per_leb,
            uint32_t data_leb_count);

  // Returns (data-block ordinal, page index inside that block).
  std::pair<uint32_t, uint32_t> map_slot(uint32_t vblock,
                                         uint32_t page_in_vblock) const;
  uint64_t slot_count() const { return slots_; }
  uint32_t data_lebs_used() const { return lebs_used_; }
  const AllocatorConfig& config() const { return cfg_; }

 private:
  AllocatorConfig cfg_;
  uint32_t pages_per_leb_ = 0;
  uint64_t slots_ = 0;
  uint32_t lebs_used_ = 0;
  FeistelPermutation perm_;
};

constexpr uint8_t kEntryWrite = 1;
constexpr uint8_t kEntryTrim = 2;
constexpr size_t kEntryMetaBytes = 8;

struct JournalEntry {
  uint8_t kind = kEntryWrite;
  uint32_t vblock = 0;
  uint8_t page_in_vblock = 0;
  std::vector<uint8_t> payload;  // page-sized for writes, empty for trims
};

// Serialized into the spare area of the journal page holding the entry.
void encode_entry_meta(const JournalEntry& e, std::span<uint8_t> out);
std::optional<JournalEntry> decode_entry_meta(std::span<const uint8_t> in);

struct FlushStats {
  uint64_t pages_written = 0;     // data pages programmed into target blocks
  uint64_t erasures = 0;          // target blocks actually rebuilt
  uint64_t journal_erasures = 0;  // journal blocks recycled afterwards
};

struct FtlConfig {
  AllocatorConfig alloc;
  uint32_t journal_capacity = 0;  // 0 = write through, no journal
};

class Ftl {
 public:
  // Attaches to a booted logical-block layer; scans the journal region and
  // finishes any flush that a crash interrupted.
  Ftl(Ubi& ubi, const FtlConfig& cfg);

  void block_read(uint32_t vblock, uint32_t page_in_vblock,
                  std::span<uint8_t> out);
  void block_write(uint32_t vblock, uint32_t page_in_vblock,
                   std::span<const uint8_t> data);
  void block_trim(uint32_t vblock);
  FlushStats flush_journal();

  const Allocator& allocator() const { return alloc_; }
  const FtlConfig& config() const { return cfg_; }
  uint32_t journal_capacity() const { return cfg_.journal_capacity; }
  uint32_t journal_fill() const {
    return static_cast<uint32_t>(entries_.size());
  }
  const std::vector<JournalEntry>& journal_entries() const { return entries_; }
  uint32_t data_leb_count() const { return data_leb_count_; }
  uint32_t journal_leb_count() const { return jleb_count_; }
  // Logical ids of the journal blocks, ascending.
  std::vector<uint32_t> journal_lebs() const;
  uint64_t journal_pages_written() const { return journal_pages_written_; }
  uint64_t flush_count() const { return flush_count_; }

 private:
  // Per-page outcome after folding the journal: either new bytes or a
  // discard.  std::nullopt payload means the page must end up unwritten.
  using PageUpdate = std::optional<std::vector<uint8_t>>;
  using UpdatePlan = std::map<uint32_t, std::map<uint32_t, PageUpdate>>;

  UpdatePlan fold_entries() const;
  void rebuild_leb(uint32_t leb, const std::map<uint32_t, PageUpdate>& updates,
                   FlushStats& stats, bool force_rebuild);
  void append_entry(JournalEntry e);
  void recover();
  uint32_t journal_leb_of_slot(uint32_t slot) const;
  uint32_t journal_page_of_slot(uint32_t slot) const;
  void direct_apply(const UpdatePlan& plan);

  Ubi& ubi_;
  FtlConfig cfg_;
  Allocator alloc_;
  uint32_t data_leb_count_ = 0;
  uint32_t jleb_count_ = 0;
  std::vector<JournalEntry> entries_;  // RAM mirror, append order
  uint32_t next_slot_ = 0;
  uint64_t journal_pages_written_ = 0;
  uint64_t flush_count_ = 0;
};

}  // namespace canonftl
