#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace minjoin {

// Exact Levenshtein distance by the full O(|a|*|b|) dynamic program.
// Slow on purpose: it is the reference the banded version is checked against.
std::size_t edit_distance_full(std::string_view a, std::string_view b);

// Threshold edit distance: the exact distance when ED(a,b) <= k, otherwise
// nullopt. Runs a banded dynamic program of width 2k+1 (cells farther than k
// from the diagonal cannot lie on a path of cost <= k), short-circuits when
// the length gap alone exceeds k, and abandons a row whose minimum already
// exceeds k. Work is O(k * min(|a|,|b|)).
std::optional<std::size_t> edit_distance_at_most(std::string_view a, std::string_view b,
                                                 std::size_t k);

inline bool edit_within(std::string_view a, std::string_view b, std::size_t k) {
  return edit_distance_at_most(a, b, k).has_value();
}

}  // namespace minjoin
