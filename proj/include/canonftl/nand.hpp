// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "canonftl/util.hpp"

namespace canonftl {

/*
 * Raw NAND array model.
 *
 * A device is block_count erase blocks of pages_per_block pages. Each page has
 * a data area and a spare (out-of-band) area, independently one-shot
 * programmable per erase cycle. Erased state is all 0xFF. Erase works at block
 * granularity, wears the block, and can turn it bad: deterministically once
 * pe_count exceeds pe_limit, or early with a seeded per-erase probability.
 * Operations on a bad block fail.
 */

struct FlashGeometry {
  uint32_t block_count = 256;
  uint32_t pages_per_block = 64;
  uint32_t page_size = 2048;
  uint32_t spare_size = 64;

  void validate() const;
  uint64_t total_pages() const {
    return static_cast<uint64_t>(block_count) * pages_per_block;
  }
};

FlashGeometry make_geometry(uint32_t block_count, uint32_t pages_per_block,
                            uint32_t page_size);

struct WearConfig {
  uint64_t pe_limit = UINT64_MAX;
  double early_fail_prob = 0.0;
  uint64_t rng_seed = 0;

  void validate() const;
};

enum class EraseResult { Ok, TurnedBad };

class FlashArray {
 public:
  FlashArray(const FlashGeometry& geo, const WearConfig& wear);

  const FlashGeometry& geometry() const { return geo_; }

  // Either span may be empty to skip that area; a non-empty span must match
  // the area size exactly.
  void read_page(uint32_t peb, uint32_t page, std::span<uint8_t> data,
                 std::span<uint8_t> spare) const;
  void program_page(uint32_t peb, uint32_t page, std::span<const uint8_t> data,
                    std::span<const uint8_t> spare);
  EraseResult erase_block(uint32_t peb);

  bool is_bad(uint32_t peb) const;
  uint64_t pe_count(uint32_t peb) const;
  bool data_programmed(uint32_t peb, uint32_t page) const;
  bool spare_programmed(uint32_t peb, uint32_t page) const;

  uint64_t physical_pages_written() const { return physical_pages_written_; }

  // Canonical device image: geometry, bad flags, per-page programmed flags and
  // content. Excludes pe counts and the failure-injection RNG state, so two
  // devices holding the same stored content serialize identically regardless
  // of wear history.
  std::vector<uint8_t> snapshot_image() const;
  static FlashArray load_image(std::span<const uint8_t> image,
                               const WearConfig& wear);

  void save_image_file(const std::string& path) const;
  static FlashArray load_image_file(const std::string& path,
                                    const WearConfig& wear);

 private:
  void check_block(uint32_t peb) const;
  void check_page(uint32_t peb, uint32_t page) const;
  size_t page_index(uint32_t peb, uint32_t page) const {
    return static_cast<size_t>(peb) * geo_.pages_per_block + page;
  }

  FlashGeometry geo_;
  WearConfig wear_;
  Rng fail_rng_;
  std::vector<uint8_t> data_;
  std::vector<uint8_t> spare_;
  std::vector<uint8_t> prog_data_;   // one byte per page
  std::vector<uint8_t> prog_spare_;
  std::vector<uint8_t> bad_;         // one byte per block
  std::vector<uint64_t> pe_;
  uint64_t physical_pages_written_ = 0;
};

inline constexpr uint8_t kImageMagic[4] = {'H', 'I', 'F', 'L'};
inline constexpr uint16_t kImageVersion = 1;

}  // namespace canonftl
