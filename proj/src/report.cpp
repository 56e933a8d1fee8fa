#include "minjoin/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace minjoin {

std::string format_double(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  return buf;
}

void write_pairs(std::ostream& out, std::vector<OutputPair> pairs, const Metadata& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << "=" << value << "\n";
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& p : pairs) out << p.a << '\t' << p.b << '\t' << p.distance << '\n';
}

std::vector<OutputPair> read_pairs(std::istream& in) {
  std::vector<OutputPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    OutputPair p;
    std::istringstream row(line);
    if (!(row >> p.a >> p.b >> p.distance)) {
      std::ostringstream msg;
      msg << "pair file line " << lineno << ": expected 'id_a id_b distance'";
      throw std::runtime_error(msg.str());
    }
    pairs.push_back(p);
  }
  return pairs;
}

std::vector<OutputPair> read_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pair file: " + path);
  return read_pairs(in);
}

void write_stage_csv(std::ostream& out,
                     const std::vector<std::pair<std::string, double>>& stages) {
  out << "stage,millis\n";
  for (const auto& [stage, millis] : stages) {
    out << stage << ',' << format_double(millis, 3) << '\n';
  }
}

void write_metric_csv(std::ostream& out,
                      const std::vector<std::pair<std::string, std::string>>& metrics) {
  out << "metric,value\n";
  for (const auto& [metric, value] : metrics) out << metric << ',' << value << '\n';
}

void write_anchor_csv(std::ostream& out, const AnchorStats& stats) {
  out << "anchors,count,frequency\n";
  for (const auto& [anchors, count] : stats.histogram) {
    const double freq =
        stats.samples == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(stats.samples);
    out << anchors << ',' << count << ',' << format_double(freq, 6) << '\n';
  }
}

}  // namespace minjoin
