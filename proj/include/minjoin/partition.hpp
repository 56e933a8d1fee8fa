#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "minjoin/gram_hash.hpp"

namespace minjoin {

// A string is cut into spans at anchor positions: indices whose q-gram hash
// is strictly smaller than every other hash within a radius-r neighborhood.
// Similar strings mostly agree on anchors (an anchor depends only on the
// 2r+q letters around it), so they share span content, which is what the
// join indexes on. All positions here are 0-based.

struct PartitionSpan {
  std::uint32_t pos = 0;
  std::uint32_t len = 0;

  friend bool operator==(const PartitionSpan&, const PartitionSpan&) = default;
  friend auto operator<=>(const PartitionSpan&, const PartitionSpan&) = default;
};

struct PartitionList {
  std::vector<PartitionSpan> spans;
  std::uint32_t radius = 0;
};

// Neighborhood half-width for the local-minimum test:
// max(1, floor((len - q + 1 - t) / (2t + 2))).
// The unclamped value is calibrated so a string yields about t interior
// anchors; short strings would drive it to zero, hence the clamp.
std::uint32_t neighborhood_radius(std::size_t len, std::uint32_t q, std::uint32_t t);

// Smallest gram length that keeps cross-string gram collisions rare:
// max(3, ceil(3 * log(max_len / t) / log(alphabet_size))), evaluated in
// exact integer arithmetic as the least q with t^3 * alphabet^q >= max_len^3.
std::uint32_t default_gram_length(std::uint64_t max_len, std::uint32_t t,
                                  std::uint32_t alphabet_size);

// Seed for repetition k of a run keyed by base_seed. Repetition 0 uses the
// base seed verbatim so a single run reproduces partition_string exactly.
std::uint64_t repetition_seed(std::uint64_t base_seed, std::uint32_t k);

// Anchor positions of s, ascending. Position 0 and |s|-1 are always present
// as sentinels (deduplicated when they coincide); interior entries are the
// strict local minima of the gram hash array within the radius from
// neighborhood_radius. Requires |s| >= gram length and t >= 1.
std::vector<std::uint32_t> find_anchors(std::string_view s, std::uint32_t t,
                                        const GramHasher& hasher);

// Spans between consecutive anchors; the final span runs through the last
// letter so the spans tile s exactly. A string with no interior anchors is
// one whole-string span.
PartitionList partition_string(std::string_view s, std::uint32_t t,
                               const GramHasher& hasher);

// Deduplicated union of `repetitions` partition runs with independently
// derived seeds; spans sorted by (pos, len). repetitions = 1 equals
// partition_string under base_seed.
PartitionList partition_with_repetitions(std::string_view s, std::uint32_t t,
                                         std::uint64_t base_seed, std::uint32_t repetitions,
                                         std::uint32_t q);

}  // namespace minjoin
