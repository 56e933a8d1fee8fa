#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "minjoin/common.hpp"
#include "minjoin/dataset.hpp"
#include "minjoin/gram_hash.hpp"

namespace minjoin {

// Keep a matched span pair only when the two strings' lengths differ by at
// most k; a pair violating this cannot be within edit distance k.
inline bool length_filter(std::size_t len_a, std::size_t len_b, std::size_t k) {
  return (len_a > len_b ? len_a - len_b : len_b - len_a) <= k;
}

// Keep a matched span pair only when aligning the shared span costs at most
// k edits: the prefixes before the span and the suffixes after it must each
// be editable into one another, and their length gaps add up.
inline bool position_filter(std::size_t pos_a, std::size_t len_str_a, std::size_t pos_b,
                            std::size_t len_str_b, std::size_t k) {
  const std::size_t dpos = pos_a > pos_b ? pos_a - pos_b : pos_b - pos_a;
  const std::size_t tail_a = len_str_a - pos_a;
  const std::size_t tail_b = len_str_b - pos_b;
  const std::size_t dtail = tail_a > tail_b ? tail_a - tail_b : tail_b - tail_a;
  return dpos + dtail <= k;
}

// Strings are streamed in nondecreasing length order, so an index entry whose
// string is more than k shorter than the current string can never pair again
// and may be dropped on visit.
inline bool evict_stale(std::size_t current_len, std::size_t entry_len, std::size_t k) {
  return current_len > entry_len + k;
}

struct PartitionParams {
  std::uint32_t t = 1;            // targeted interior anchor count
  std::uint32_t q = 3;            // gram length
  std::uint32_t repetitions = 1;  // independent partition runs per string
  std::uint64_t seed = 1;
};

struct JoinOptions {
  PartitionParams partition;
  std::uint32_t threads = 1;  // 0 = hardware concurrency
  bool use_length_filter = true;
  bool use_position_filter = true;
  bool use_eviction = true;
  // When set, gram hashing reads fixed per-gram values from this table
  // instead of the seeded rolling hash; repetitions must be 1.
  std::shared_ptr<const LookupTable> fixture_table;
};

struct JoinStats {
  std::uint64_t strings = 0;
  std::uint64_t index_keys = 0;       // spans or signatures emitted
  std::uint64_t probes = 0;           // index entries examined
  std::uint64_t candidates_raw = 0;   // filter survivors before dedup
  std::uint64_t candidates = 0;       // after dedup; equals verifications
  std::uint64_t verifications = 0;
  std::uint64_t matches = 0;
  std::uint64_t evicted = 0;
  double index_ms = 0;
  double filter_ms = 0;
  double verify_ms = 0;
};

struct JoinResult {
  std::vector<OutputPair> pairs;     // sorted by (a, b), distances <= k
  std::vector<IdPair> candidates;    // deduplicated, sorted by (a, b)
  JoinStats stats;
};

// All pairs of dataset strings within edit distance k, found by indexing
// span fingerprints: strings are partitioned, streamed in sorted order
// through a fingerprint-keyed hash index, filtered, deduplicated, and
// verified. Never reports a false positive.
JoinResult min_join(const Dataset& data, std::uint32_t k, const JoinOptions& opts);

// Exact threshold verification of candidate pairs; returns the surviving
// pairs with distances, in candidate order. Candidates must be normalized.
std::vector<OutputPair> verify_pairs(const Dataset& data, std::uint32_t k,
                                     const std::vector<IdPair>& candidates,
                                     std::uint32_t threads);

// Reference join: verifies every one of the n*(n-1)/2 pairs. Warns on
// stderr above 5000 strings; intended for truth generation at desk scale.
std::vector<OutputPair> brute_force_join(const Dataset& data, std::uint32_t k,
                                         std::uint32_t threads);

// Sorted stream order shared by the join engines: nondecreasing length,
// ties byte-lexicographic, then by id. Exposed for tests.
std::vector<std::uint32_t> sorted_order(const Dataset& data);

}  // namespace minjoin
