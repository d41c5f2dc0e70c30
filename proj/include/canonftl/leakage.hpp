// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace canonftl {

using BigInt = boost::multiprecision::cpp_int;

// Parameters of the epoch-count adversary model: a device with m erase
// blocks, epochs of c counted erases, observed at the end of epoch j.
struct LeakParams {
  uint64_t m = 2;
  uint64_t c = 2;
  uint64_t j = 1;
};

// Number of distinct ways c indistinguishable erases can distribute over m
// blocks: binomial(m + c - 1, m - 1), computed exactly.
BigInt stars_and_bars(uint64_t m, uint64_t c);

struct LeakResult {
  BigInt alpha;        // count of distinct per-epoch erase-count vectors
  BigInt denominator;  // m^(c*j); only populated when exact_valid
  bool exact_valid = false;
  double probability = 0.0;  // alpha / m^(c*j) as a double (0 on underflow)
  double log10_probability = 0.0;
};

// Upper bound on the chance that an adversary who sees the current epoch's
// per-block erase counts names the exact erase sequence that produced the
// device state. Exact rational arithmetic when the denominator is of sane
// size; log-space evaluation always.
LeakResult leak_probability(const LeakParams& p);

struct BruteResult {
  BigInt hits;   // sequences the single-guess adversary identifies correctly
  BigInt total;  // m^(c*j)
  double probability() const;
};

// Which consistent sequence the simulated adversary answers with when several
// match an observation. Success probability is tie-invariant (all sequences
// are equiprobable); tests assert that both choices agree.
enum class TieBreak { FirstSeen, LastSeen };

// Exhaustive oracle: enumerates every one of the m^(c*j) equiprobable write
// sequences, groups them by the observable final-epoch count vector, commits
// the adversary to one guess per observation, and counts exact hits.
// Throws DomainTooLarge above 10^7 sequences.
BruteResult brute_force_leakage(const LeakParams& p,
                                TieBreak tie = TieBreak::FirstSeen);

}  // namespace canonftl
