#pragma once

#include <cstdint>
#include <vector>

#include "minjoin/common.hpp"
#include "minjoin/dataset.hpp"

namespace minjoin {

// Synthetic datasets with planted similar pairs. Each cluster starts from a
// fresh uniform random string; the other members apply up to max_edits
// random edit operations to it, so every (seed, member) pair has true edit
// distance at most max_edits by construction. Remaining strings are
// independent uniform fillers.
struct SyntheticSpec {
  std::uint32_t count = 0;          // total strings
  std::uint32_t length = 0;         // base string length
  std::uint32_t alphabet_size = 4;  // 2..64 distinct letters
  std::uint32_t clusters = 0;
  std::uint32_t cluster_size = 0;   // strings per cluster, >= 2 plants pairs
  std::uint32_t max_edits = 0;
  std::uint64_t seed = 1;
};

struct SyntheticData {
  Dataset strings;
  std::vector<IdPair> planted;  // sorted, normalized (cluster seed, member)
};

SyntheticData generate_synthetic(const SyntheticSpec& spec);

// Letter used for alphabet index i in generated data (printable, stable).
char alphabet_letter(std::uint32_t index);

struct RecallReport {
  std::size_t truth_size = 0;
  std::size_t found_size = 0;
  std::size_t hits = 0;       // |found ∩ truth|
  double recall = 1.0;        // hits / truth (1.0 when truth empty)
  double precision = 1.0;     // hits / found (1.0 when found empty)
};

RecallReport measure_recall(std::vector<IdPair> found, std::vector<IdPair> truth);

// Distribution of interior anchor counts over (seed, string) samples:
// every string with |s| >= q is partitioned once per seed and the number of
// non-sentinel anchors is tallied.
struct AnchorStats {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> histogram;  // count -> occurrences
  std::uint64_t samples = 0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance (n-1 denominator)
};

AnchorStats anchor_statistics(const Dataset& data, std::uint32_t t, std::uint32_t q,
                              const std::vector<std::uint64_t>& seeds);

// Probability mass of the histogram inside [center - halfwidth, center + halfwidth].
double histogram_mass_within(const AnchorStats& stats, double center, double halfwidth);

}  // namespace minjoin
