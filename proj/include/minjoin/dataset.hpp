#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace minjoin {

struct StringRecord {
  std::uint32_t id = 0;  // 0-based line number in the source file
  std::string text;
};

using Dataset = std::vector<StringRecord>;

struct DatasetStats {
  std::size_t count = 0;
  std::size_t min_len = 0;
  std::size_t max_len = 0;
  std::uint64_t total_len = 0;
  std::uint32_t alphabet_size = 0;  // distinct bytes across all strings
};

// One string per line. CRLF is normalized to LF; a trailing newline is
// tolerated; an empty or whitespace-only line anywhere is an error, as is an
// empty file.
Dataset load_dataset(const std::string& path);
Dataset load_dataset_stream(std::istream& in, std::string_view origin = "<stream>");

Dataset dataset_from_lines(std::vector<std::string> lines);

void save_dataset(std::ostream& out, const Dataset& data);

DatasetStats dataset_stats(const Dataset& data);

}  // namespace minjoin
