#include "minjoin/eval.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string_view>

#include "minjoin/gram_hash.hpp"
#include "minjoin/partition.hpp"

namespace minjoin {

namespace {

constexpr std::string_view kLetters =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string random_string(std::mt19937_64& rng, std::uint32_t length,
                          std::uint32_t alphabet_size) {
  std::uniform_int_distribution<std::uint32_t> letter(0, alphabet_size - 1);
  std::string s(length, '\0');
  for (auto& c : s) c = alphabet_letter(letter(rng));
  return s;
}

std::uint32_t letter_index(char c) {
  return static_cast<std::uint32_t>(kLetters.find(c));
}

// Uniform random insert/delete/substitute; substitutions always change the
// letter, so each operation moves the string.
void apply_random_edit(std::mt19937_64& rng, std::string& s, std::uint32_t alphabet_size) {
  std::uniform_int_distribution<int> kind_dist(0, 2);
  std::uniform_int_distribution<std::uint32_t> letter(0, alphabet_size - 1);
  const int kind = s.empty() ? 0 : kind_dist(rng);
  if (kind == 0) {
    std::uniform_int_distribution<std::size_t> at(0, s.size());
    s.insert(s.begin() + at(rng), alphabet_letter(letter(rng)));
  } else if (kind == 1) {
    std::uniform_int_distribution<std::size_t> at(0, s.size() - 1);
    s.erase(s.begin() + at(rng));
  } else {
    std::uniform_int_distribution<std::size_t> at(0, s.size() - 1);
    std::uniform_int_distribution<std::uint32_t> shift(1, alphabet_size - 1);
    const std::size_t pos = at(rng);
    const std::uint32_t cur = letter_index(s[pos]);
    s[pos] = alphabet_letter((cur + shift(rng)) % alphabet_size);
  }
}

}  // namespace

char alphabet_letter(std::uint32_t index) {
  if (index >= kLetters.size()) throw std::invalid_argument("alphabet index out of range");
  return kLetters[index];
}

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
  if (spec.alphabet_size < 2) throw std::invalid_argument("alphabet must have at least two letters");
  if (spec.alphabet_size > kLetters.size()) {
    throw std::invalid_argument("alphabet larger than the letter table");
  }
  if (spec.length == 0) throw std::invalid_argument("string length must be positive");
  if (spec.count == 0) throw std::invalid_argument("string count must be positive");
  const std::uint64_t clustered =
      static_cast<std::uint64_t>(spec.clusters) * spec.cluster_size;
  if (spec.clusters > 0 && spec.cluster_size == 0) {
    throw std::invalid_argument("cluster size must be positive when clusters are requested");
  }
  if (clustered > spec.count) throw std::invalid_argument("clusters exceed string count");

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::uint32_t> edits(0, spec.max_edits);

  SyntheticData out;
  out.strings.reserve(spec.count);
  auto push = [&](std::string s) {
    out.strings.push_back({static_cast<std::uint32_t>(out.strings.size()), std::move(s)});
  };

  for (std::uint32_t c = 0; c < spec.clusters; ++c) {
    const std::uint32_t seed_id = static_cast<std::uint32_t>(out.strings.size());
    std::string base = random_string(rng, spec.length, spec.alphabet_size);
    push(base);
    for (std::uint32_t m = 1; m < spec.cluster_size; ++m) {
      std::string member = base;
      const std::uint32_t e = spec.max_edits == 0 ? 0 : edits(rng);
      for (std::uint32_t i = 0; i < e; ++i) {
        apply_random_edit(rng, member, spec.alphabet_size);
      }
      out.planted.push_back({seed_id, static_cast<std::uint32_t>(out.strings.size())});
      push(std::move(member));
    }
  }
  while (out.strings.size() < spec.count) {
    push(random_string(rng, spec.length, spec.alphabet_size));
  }
  return out;
}

RecallReport measure_recall(std::vector<IdPair> found, std::vector<IdPair> truth) {
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::sort(truth.begin(), truth.end());
  truth.erase(std::unique(truth.begin(), truth.end()), truth.end());

  RecallReport rep;
  rep.truth_size = truth.size();
  rep.found_size = found.size();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < found.size() && j < truth.size()) {
    if (found[i] == truth[j]) {
      ++rep.hits;
      ++i;
      ++j;
    } else if (found[i] < truth[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  rep.recall = truth.empty() ? 1.0 : static_cast<double>(rep.hits) / truth.size();
  rep.precision = found.empty() ? 1.0 : static_cast<double>(rep.hits) / found.size();
  return rep;
}

AnchorStats anchor_statistics(const Dataset& data, std::uint32_t t, std::uint32_t q,
                              const std::vector<std::uint64_t>& seeds) {
  AnchorStats st;
  std::map<std::uint32_t, std::uint64_t> hist;
  double sum = 0.0;
  double sumsq = 0.0;
  for (const std::uint64_t seed : seeds) {
    const GramHasher hasher = GramHasher::rolling(seed, q);
    for (const auto& rec : data) {
      if (rec.text.size() < q) continue;
      const auto anchors = find_anchors(rec.text, t, hasher);
      const auto interior =
          static_cast<std::uint32_t>(anchors.size() >= 2 ? anchors.size() - 2 : 0);
      ++hist[interior];
      ++st.samples;
      sum += interior;
      sumsq += static_cast<double>(interior) * interior;
    }
  }
  st.histogram.assign(hist.begin(), hist.end());
  if (st.samples > 0) {
    st.mean = sum / static_cast<double>(st.samples);
    if (st.samples > 1) {
      const double n = static_cast<double>(st.samples);
      st.variance = (sumsq - n * st.mean * st.mean) / (n - 1);
      if (st.variance < 0) st.variance = 0;  // numeric floor
    }
  }
  return st;
}

double histogram_mass_within(const AnchorStats& stats, double center, double halfwidth) {
  if (stats.samples == 0) return 0.0;
  std::uint64_t inside = 0;
  for (const auto& [count, occurrences] : stats.histogram) {
    if (count >= center - halfwidth && count <= center + halfwidth) inside += occurrences;
  }
  return static_cast<double>(inside) / static_cast<double>(stats.samples);
}

}  // namespace minjoin
