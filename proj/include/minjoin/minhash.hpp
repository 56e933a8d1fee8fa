#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "minjoin/join.hpp"

namespace minjoin {

// Baseline engine: each string is summarized by the ell smallest distinct
// q-gram hash values under one hash function, and strings sharing a
// signature become candidates. No positional information survives, so only
// the length filter applies before verification.

struct MinHashOptions {
  std::uint32_t ell = 1;  // signatures per string
  std::uint32_t q = 3;    // gram length
  std::uint64_t seed = 1;
  std::uint32_t threads = 1;
  bool use_length_filter = true;
  bool use_eviction = true;
  std::shared_ptr<const LookupTable> fixture_table;
};

// The ell smallest distinct gram hash values of s, ascending; all of them
// when s has fewer distinct gram hashes. Requires |s| >= gram length.
std::vector<std::uint64_t> minhash_signatures(std::string_view s, std::uint32_t ell,
                                              const GramHasher& hasher);

// Signature-equality join with verification; same output contract as
// min_join (exact pairs, no false positives), recall depends on (q, ell).
JoinResult minhash_join(const Dataset& data, std::uint32_t k, const MinHashOptions& opts);

}  // namespace minjoin
