#include "minjoin/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace minjoin {

std::size_t edit_distance_full(std::string_view a, std::string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::optional<std::size_t> edit_distance_at_most(std::string_view a, std::string_view b,
                                                 std::size_t k) {
  if (a.size() > b.size()) std::swap(a, b);

  // Shared prefix and suffix never contribute to the distance.
  std::size_t lo = 0;
  while (lo < a.size() && a[lo] == b[lo]) ++lo;
  a.remove_prefix(lo);
  b.remove_prefix(lo);
  std::size_t hi = 0;
  while (hi < a.size() && a[a.size() - 1 - hi] == b[b.size() - 1 - hi]) ++hi;
  a.remove_suffix(hi);
  b.remove_suffix(hi);

  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (m - n > k) return std::nullopt;
  if (n == 0) return m;
  if (k > m) k = m;

  // Cell values are capped at k+1: anything past the threshold is equally
  // dead, and the cap keeps the early-abandon test a plain comparison.
  const std::uint64_t cap = static_cast<std::uint64_t>(k) + 1;
  std::vector<std::uint64_t> prev(m + 1, cap);
  std::vector<std::uint64_t> cur(m + 1, cap);
  const std::size_t head = std::min(m, k);
  for (std::size_t j = 0; j <= head; ++j) prev[j] = j;

  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t jlo = i > k ? i - k : 1;
    const std::size_t jhi = std::min(m, i + k);
    std::uint64_t row_min = cap;
    if (jlo == 1) {
      cur[0] = std::min<std::uint64_t>(i, cap);
      row_min = cur[0];
    }
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const std::uint64_t left = j == jlo && jlo > 1 ? cap : cur[j - 1];
      const std::uint64_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      std::uint64_t v = std::min({prev[j] + 1, left + 1, sub});
      if (v > cap) v = cap;
      cur[j] = v;
      row_min = std::min(row_min, v);
    }
    if (row_min >= cap) return std::nullopt;
    if (jhi + 1 <= m) cur[jhi + 1] = cap;
    std::swap(prev, cur);
  }
  return prev[m] <= k ? std::optional<std::size_t>(prev[m]) : std::nullopt;
}

}  // namespace minjoin
