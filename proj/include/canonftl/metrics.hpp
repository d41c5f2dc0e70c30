// SPDX-License-Identifier: Apache-2.0
//
// Session accounting: what one device run wrote and erased, and the derived
// figures (write amplification, per-block wear histogram) the experiment
// harness reports.  All figures are deltas over the session, measured from
// the moment the device finished booting.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace canonftl {

struct RunStats {
  uint64_t host_pages_written = 0;      // pages the host asked to write
  uint64_t physical_pages_written = 0;  // data-area page programs on the chip
  uint64_t journal_pages_written = 0;   // subset that landed in the journal
  std::vector<uint64_t> erasures_per_peb;  // per physical block, this session
  uint64_t host_erasure_total = 0;     // data-block rebuilds
  uint64_t journal_erasure_total = 0;  // journal-block recycling
  uint64_t swap_erasure_total = 0;     // wear-leveling swaps
  uint64_t anchor_erasure_total = 0;   // metadata ring + flush marker
  uint64_t journal_flush_count = 0;
  uint64_t epochs_elapsed = 0;
};

// Physical pages programmed per host page written.  Throws NoHostWrites when
// the session wrote nothing.
double write_amplification(const RunStats& s);

// Same ratio with the journal's own page programs taken out, isolating the
// cost of the block rebuilds themselves.
double write_amplification_excl_journal(const RunStats& s);

uint64_t max_erase_count(const RunStats& s);
uint64_t total_erasures(const RunStats& s);

// One "block,erasures" row per physical block, no header row.
std::string erase_histogram_csv(const RunStats& s);

// A single header row plus a single value row.
std::string summary_csv(const RunStats& s);

}  // namespace canonftl
