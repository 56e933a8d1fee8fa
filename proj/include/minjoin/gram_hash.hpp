#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "minjoin/common.hpp"

namespace minjoin {

// Table of fixed q-gram hash values loaded from a file. Each line reads
// `GRAM<TAB>value` with value a real in the open interval (0,1); blank lines
// and lines starting with '#' are ignored. All grams must share one length.
// Values are scaled to uint64 by the exact factor 2^64, which preserves
// their relative order, so table-driven runs and seeded runs flow through
// the same integer comparisons.
class LookupTable {
 public:
  static LookupTable from_stream(std::istream& in, std::string_view origin = "<stream>");
  static LookupTable from_file(const std::string& path);

  std::uint32_t gram_length() const { return q_; }
  std::size_t size() const { return values_.size(); }

  // Throws std::out_of_range if the gram is absent from the table.
  std::uint64_t value_of(std::string_view gram) const;

 private:
  struct TransparentHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  struct TransparentEq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return a == b; }
  };

  std::uint32_t q_ = 0;
  std::unordered_map<std::string, std::uint64_t, TransparentHash, TransparentEq> values_;
};

// Maps every q-gram of a string to a hash value that behaves like a uniform
// draw from (0,1); values are represented as uint64 and compared as integers.
// Two backends share the interface:
//  - rolling: a seeded polynomial rolling hash finalized by a strong mixer,
//    so hashing all grams of a string costs O(|s|) instead of O(|s| * q);
//  - lookup: fixed per-gram values from a LookupTable, for reproducing
//    worked examples and for tests that pin the randomness.
class GramHasher {
 public:
  static GramHasher rolling(std::uint64_t seed, std::uint32_t q);
  static GramHasher lookup(std::shared_ptr<const LookupTable> table);

  std::uint32_t gram_length() const { return q_; }
  std::uint64_t seed() const { return seed_; }
  bool is_lookup() const { return table_ != nullptr; }

  // Same backend and gram length under a different seed. Lookup tables have
  // no seed to vary, so reseeding them is an error.
  GramHasher reseeded(std::uint64_t seed) const;

  // Hash of a single gram; gram.size() must equal gram_length(). Computed
  // directly (no rolling state), so it doubles as an oracle for the rolling
  // path.
  std::uint64_t hash_gram(std::string_view gram) const;

  // Hashes of all |s|-q+1 grams of s, left to right. Requires |s| >= q.
  void hash_sequence(std::string_view s, std::vector<std::uint64_t>& out) const;

 private:
  GramHasher() = default;

  std::uint32_t q_ = 0;
  std::uint64_t seed_ = 0;
  std::uint64_t base_ = 0;       // odd multiplier of the polynomial
  std::uint64_t base_pow_ = 0;   // base_^(q-1), for removing the leading byte
  std::uint64_t tweak_ = 0;      // mixed into the finalizer
  std::shared_ptr<const LookupTable> table_;
};

// 64-bit content fingerprint of a substring, used as the join key for
// partitions. Collisions are tolerated downstream (candidates are verified),
// they only cost extra work.
inline std::uint64_t content_fingerprint(std::string_view piece) {
  return hash_bytes(piece, 0x2545F4914F6CDD1DULL);
}

// Bounds-checked span form.
std::uint64_t content_fingerprint(std::string_view s, std::size_t pos, std::size_t len);

}  // namespace minjoin
