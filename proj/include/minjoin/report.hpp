#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "minjoin/common.hpp"
#include "minjoin/eval.hpp"

namespace minjoin {

// Ordered key=value pairs echoed into output files as '# key=value' lines.
using Metadata = std::vector<std::pair<std::string, std::string>>;

// Fixed-precision decimal rendering; used everywhere a report contains a
// real number so outputs are byte-stable.
std::string format_double(double value, int precision = 6);

// Pair file: metadata comments, then one 'id_a<TAB>id_b<TAB>distance' line
// per pair, sorted by (id_a, id_b), no duplicates. Writer sorts and
// deduplicates to enforce the file invariant.
void write_pairs(std::ostream& out, std::vector<OutputPair> pairs, const Metadata& meta);
std::vector<OutputPair> read_pairs(std::istream& in);
std::vector<OutputPair> read_pairs_file(const std::string& path);

// CSV reports, one header row each:
//   stage,millis      per-stage durations
//   metric,value      scalar evaluation results
//   anchors,count,frequency   anchor-count histogram
void write_stage_csv(std::ostream& out,
                     const std::vector<std::pair<std::string, double>>& stages);
void write_metric_csv(std::ostream& out,
                      const std::vector<std::pair<std::string, std::string>>& metrics);
void write_anchor_csv(std::ostream& out, const AnchorStats& stats);

}  // namespace minjoin
