#include "minjoin/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace minjoin {

std::uint32_t neighborhood_radius(std::size_t len, std::uint32_t q, std::uint32_t t) {
  if (t == 0) throw std::invalid_argument("target partition count must be positive");
  if (q == 0) throw std::invalid_argument("gram length must be positive");
  if (len < q) throw std::invalid_argument("string shorter than gram length");
  const std::int64_t m = static_cast<std::int64_t>(len - q + 1);
  // Truncating division differs from floor only for negative numerators,
  // where the clamp to 1 wins anyway.
  const std::int64_t raw = (m - t) / (2 * static_cast<std::int64_t>(t) + 2);
  return raw < 1 ? 1u : static_cast<std::uint32_t>(raw);
}

std::uint32_t default_gram_length(std::uint64_t max_len, std::uint32_t t,
                                  std::uint32_t alphabet_size) {
  if (alphabet_size < 2) throw std::invalid_argument("alphabet must have at least two letters");
  if (t == 0) throw std::invalid_argument("target partition count must be positive");
  if (max_len == 0) throw std::invalid_argument("string length must be positive");
  if (max_len > (1ULL << 42)) throw std::invalid_argument("string length too large");

  // Least q >= 3 with t^3 * alphabet^q >= max_len^3, i.e.
  // q >= 3 * log(max_len / t) / log(alphabet); exact, no floating point.
  using u128 = unsigned __int128;
  const u128 goal = u128(max_len) * max_len * max_len;
  u128 have = u128(t) * t * t;
  std::uint32_t q = 0;
  while (q < 3 || have < goal) {
    ++q;
    if (q > 192) throw std::logic_error("gram length search failed to converge");
    if (have >= goal) continue;
    if (have > goal / alphabet_size) {
      have = goal;
    } else {
      have *= alphabet_size;
    }
  }
  return q;
}

std::uint64_t repetition_seed(std::uint64_t base_seed, std::uint32_t k) {
  if (k == 0) return base_seed;
  return splitmix64(base_seed ^ (k * kGolden64));
}

std::vector<std::uint32_t> find_anchors(std::string_view s, std::uint32_t t,
                                        const GramHasher& hasher) {
  const std::uint32_t q = hasher.gram_length();
  if (s.size() < q) throw std::invalid_argument("string shorter than gram length");
  const std::size_t m = s.size() - q + 1;
  const std::uint32_t r = neighborhood_radius(s.size(), q, t);

  std::vector<std::uint32_t> anchors;
  anchors.push_back(0);

  if (m >= 2 * static_cast<std::size_t>(r) + 1) {
    std::vector<std::uint64_t> h;
    hasher.hash_sequence(s, h);

    // Sliding strict-minimum scan. The deque keeps indices whose hash values
    // are nondecreasing; equal values are retained so ties can disqualify a
    // candidate. Position i is an anchor of the window [i-r, i+r] exactly
    // when it sits at the front once the window is complete and the next
    // deque value differs. Each index enters and leaves once: O(m) total.
    std::vector<std::uint32_t> dq(m);
    std::size_t head = 0;
    std::size_t tail = 0;
    for (std::size_t j = 0; j < m; ++j) {
      while (tail > head && h[dq[tail - 1]] > h[j]) --tail;
      dq[tail++] = static_cast<std::uint32_t>(j);
      if (j < 2 * static_cast<std::size_t>(r)) continue;
      const std::size_t i = j - r;
      while (dq[head] < i - r) ++head;
      if (dq[head] == i && (head + 1 == tail || h[dq[head + 1]] != h[i])) {
        anchors.push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  const std::uint32_t last = static_cast<std::uint32_t>(s.size()) - 1;
  if (anchors.back() != last) anchors.push_back(last);
  return anchors;
}

PartitionList partition_string(std::string_view s, std::uint32_t t,
                               const GramHasher& hasher) {
  PartitionList out;
  const auto anchors = find_anchors(s, t, hasher);
  out.radius = neighborhood_radius(s.size(), hasher.gram_length(), t);

  const std::uint32_t n = static_cast<std::uint32_t>(s.size());
  if (anchors.size() < 2) {
    out.spans.push_back({0, n});
    return out;
  }
  out.spans.reserve(anchors.size() - 1);
  for (std::size_t i = 0; i + 2 < anchors.size(); ++i) {
    out.spans.push_back({anchors[i], anchors[i + 1] - anchors[i]});
  }
  // The final span absorbs the last letter so the spans tile s exactly.
  const std::uint32_t tail = anchors[anchors.size() - 2];
  out.spans.push_back({tail, n - tail});
  return out;
}

PartitionList partition_with_repetitions(std::string_view s, std::uint32_t t,
                                         std::uint64_t base_seed, std::uint32_t repetitions,
                                         std::uint32_t q) {
  if (repetitions == 0) throw std::invalid_argument("repetition count must be positive");
  PartitionList all = partition_string(s, t, GramHasher::rolling(base_seed, q));
  for (std::uint32_t k = 1; k < repetitions; ++k) {
    const auto run =
        partition_string(s, t, GramHasher::rolling(repetition_seed(base_seed, k), q));
    all.spans.insert(all.spans.end(), run.spans.begin(), run.spans.end());
  }
  if (repetitions > 1) {
    std::sort(all.spans.begin(), all.spans.end());
    all.spans.erase(std::unique(all.spans.begin(), all.spans.end()), all.spans.end());
  }
  return all;
}

}  // namespace minjoin
