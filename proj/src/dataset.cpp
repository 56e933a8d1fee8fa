#include "minjoin/dataset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace minjoin {

namespace {

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Dataset load_dataset_stream(std::istream& in, std::string_view origin) {
  Dataset data;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) {
      std::ostringstream msg;
      msg << origin << ":" << lineno << ": blank line in dataset";
      throw std::runtime_error(msg.str());
    }
    data.push_back({static_cast<std::uint32_t>(data.size()), std::move(line)});
    line.clear();
  }
  if (data.empty()) {
    throw std::runtime_error(std::string(origin) + ": empty dataset");
  }
  return data;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  return load_dataset_stream(in, path);
}

Dataset dataset_from_lines(std::vector<std::string> lines) {
  Dataset data;
  data.reserve(lines.size());
  for (auto& s : lines) {
    data.push_back({static_cast<std::uint32_t>(data.size()), std::move(s)});
  }
  return data;
}

void save_dataset(std::ostream& out, const Dataset& data) {
  for (const auto& rec : data) out << rec.text << '\n';
}

DatasetStats dataset_stats(const Dataset& data) {
  DatasetStats st;
  st.count = data.size();
  if (data.empty()) return st;
  st.min_len = data.front().text.size();
  std::array<bool, 256> seen{};
  for (const auto& rec : data) {
    st.min_len = std::min(st.min_len, rec.text.size());
    st.max_len = std::max(st.max_len, rec.text.size());
    st.total_len += rec.text.size();
    for (unsigned char c : rec.text) seen[c] = true;
  }
  for (bool b : seen) st.alphabet_size += b ? 1 : 0;
  return st;
}

}  // namespace minjoin
