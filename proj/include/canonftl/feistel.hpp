// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "canonftl/util.hpp"

namespace canonftl {

// Seeded bijection on [0, domain): balanced 8-round Feistel network over the
// smallest even bit width covering the domain, with cycle-walking to stay
// inside it. Forward-only; bijectivity is what callers rely on.
class FeistelPermutation {
 public:
  FeistelPermutation(uint64_t seed, uint64_t domain) : domain_(domain) {
    unsigned bits = bits_for(domain < 2 ? 2 : domain);
    half_bits_ = (bits + 1) / 2;
    half_mask_ = (1ull << half_bits_) - 1;
    Rng kg(mix64(seed ^ 0xa5c3b1e769d2f04bull));
    for (auto& k : keys_) k = kg.next();
  }

  uint64_t domain() const { return domain_; }

  uint64_t operator()(uint64_t x) const {
    if (domain_ < 2) return x;
    uint64_t y = once(x);
    while (y >= domain_) y = once(y);
    return y;
  }

 private:
  uint64_t once(uint64_t x) const {
    uint64_t left = x >> half_bits_;
    uint64_t right = x & half_mask_;
    for (int r = 0; r < 8; ++r) {
      uint64_t f = mix64(right ^ keys_[r]) & half_mask_;
      uint64_t next_right = left ^ f;
      left = right;
      right = next_right;
    }
    return (left << half_bits_) | right;
  }

  uint64_t domain_;
  unsigned half_bits_;
  uint64_t half_mask_;
  std::array<uint64_t, 8> keys_;
};

}  // namespace canonftl
