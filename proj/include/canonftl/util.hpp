// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace canonftl {

// Deterministic 64-bit mixer/stream (splitmix64). Used everywhere randomness
// has to be bit-reproducible across platforms; standard-library distributions
// are not portable even when the engine is.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, n) via rejection.
  uint64_t below(uint64_t n) {
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  double unit() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline void fill_bytes(std::span<uint8_t> out, uint64_t seed) {
  Rng r(seed);
  size_t i = 0;
  while (i + 8 <= out.size()) {
    uint64_t v = r.next();
    for (int k = 0; k < 8; ++k) out[i++] = static_cast<uint8_t>(v >> (8 * k));
  }
  if (i < out.size()) {
    uint64_t v = r.next();
    for (int k = 0; k < 8 && i < out.size(); ++k)
      out[i++] = static_cast<uint8_t>(v >> (8 * k));
  }
}

// Little-endian packing helpers for the on-flash formats.
inline void put_u16(std::vector<uint8_t>& v, uint16_t x) {
  v.push_back(static_cast<uint8_t>(x));
  v.push_back(static_cast<uint8_t>(x >> 8));
}
inline void put_u32(std::vector<uint8_t>& v, uint32_t x) {
  for (int i = 0; i < 4; ++i) v.push_back(static_cast<uint8_t>(x >> (8 * i)));
}
inline void put_u64(std::vector<uint8_t>& v, uint64_t x) {
  for (int i = 0; i < 8; ++i) v.push_back(static_cast<uint8_t>(x >> (8 * i)));
}
inline uint16_t get_u16(std::span<const uint8_t> b, size_t off) {
  return static_cast<uint16_t>(b[off] | (b[off + 1] << 8));
}
inline uint32_t get_u32(std::span<const uint8_t> b, size_t off) {
  uint32_t x = 0;
  for (int i = 0; i < 4; ++i) x |= static_cast<uint32_t>(b[off + i]) << (8 * i);
  return x;
}
inline uint64_t get_u64(std::span<const uint8_t> b, size_t off) {
  uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<uint64_t>(b[off + i]) << (8 * i);
  return x;
}

// Bit-packed little-endian array of fixed-width entries: entry e occupies bits
// [e*width, (e+1)*width), bit i of the stream is byte i/8, bit position i%8.
inline void pack_bits(std::vector<uint8_t>& out, size_t bit_off, uint64_t value, unsigned width) {
  for (unsigned i = 0; i < width; ++i) {
    size_t bit = bit_off + i;
    if (out.size() <= bit / 8) out.resize(bit / 8 + 1, 0);
    if ((value >> i) & 1) out[bit / 8] |= static_cast<uint8_t>(1u << (bit % 8));
  }
}
inline uint64_t unpack_bits(std::span<const uint8_t> in, size_t bit_off, unsigned width) {
  uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) {
    size_t bit = bit_off + i;
    if ((in[bit / 8] >> (bit % 8)) & 1) v |= 1ull << i;
  }
  return v;
}

inline unsigned bits_for(uint64_t n) {  // ceil(log2(n)), with bits_for(1) == 0
  unsigned b = 0;
  while ((1ull << b) < n) ++b;
  return b;
}

inline uint32_t crc32(std::span<const uint8_t> data) {
  static const auto table = [] {
    std::array<uint32_t, 256> t{};
    for (uint32_t i = 0; i < 256; ++i) {
      uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  uint32_t c = 0xffffffffu;
  for (uint8_t b : data) c = table[(c ^ b) & 0xff] ^ (c >> 8);
  return c ^ 0xffffffffu;
}

inline uint16_t crc16_ccitt(std::span<const uint8_t> data) {
  uint16_t c = 0xffff;
  for (uint8_t b : data) {
    c ^= static_cast<uint16_t>(b) << 8;
    for (int k = 0; k < 8; ++k)
      c = (c & 0x8000) ? static_cast<uint16_t>((c << 1) ^ 0x1021) : static_cast<uint16_t>(c << 1);
  }
  return c;
}

}  // namespace canonftl
