#include "minjoin/join.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "minjoin/parallel.hpp"
#include "minjoin/partition.hpp"
#include "minjoin/verify.hpp"

namespace minjoin {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct IndexEntry {
  std::uint32_t id;    // dataset position of the indexed string
  std::uint32_t pos;   // span start within that string
  std::uint32_t slen;  // that string's length, for the length filter
};

}  // namespace

std::vector<std::uint32_t> sorted_order(const Dataset& data) {
  std::vector<std::uint32_t> order(data.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    const std::string& sx = data[x].text;
    const std::string& sy = data[y].text;
    if (sx.size() != sy.size()) return sx.size() < sy.size();
    if (const int c = sx.compare(sy); c != 0) return c < 0;
    return x < y;
  });
  return order;
}

std::vector<OutputPair> verify_pairs(const Dataset& data, std::uint32_t k,
                                     const std::vector<IdPair>& candidates,
                                     std::uint32_t threads) {
  std::vector<std::int64_t> dist(candidates.size(), -1);
  parallel_for(candidates.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const IdPair pr = candidates[i];
      if (const auto d = edit_distance_at_most(data[pr.a].text, data[pr.b].text, k)) {
        dist[i] = static_cast<std::int64_t>(*d);
      }
    }
  });
  std::vector<OutputPair> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (dist[i] >= 0) {
      out.push_back({candidates[i].a, candidates[i].b, static_cast<std::uint32_t>(dist[i])});
    }
  }
  return out;
}

JoinResult min_join(const Dataset& data, std::uint32_t k, const JoinOptions& opts) {
  if (data.empty()) throw std::invalid_argument("empty dataset");
  const PartitionParams& pp = opts.partition;
  if (pp.t == 0) throw std::invalid_argument("target partition count must be positive");
  if (pp.q == 0) throw std::invalid_argument("gram length must be positive");
  if (pp.repetitions == 0) throw std::invalid_argument("repetition count must be positive");
  if (opts.fixture_table) {
    if (pp.repetitions != 1) {
      throw std::invalid_argument("fixture hashing cannot derive repetition seeds");
    }
    if (opts.fixture_table->gram_length() != pp.q) {
      throw std::invalid_argument("fixture gram length differs from configured q");
    }
  }

  JoinResult res;
  res.stats.strings = data.size();
  const auto order = sorted_order(data);

  // Partition phase: pure per string, output slots addressed by sorted
  // position, so any thread count produces the same spans.
  auto t0 = Clock::now();
  std::vector<std::vector<PartitionSpan>> spans(data.size());
  parallel_for(order.size(), opts.threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const std::string& s = data[order[idx]].text;
      if (s.size() < pp.q) {
        // Too short to hold a single gram: index the whole string.
        spans[idx] = {{0, static_cast<std::uint32_t>(s.size())}};
      } else if (opts.fixture_table) {
        spans[idx] = partition_string(s, pp.t, GramHasher::lookup(opts.fixture_table)).spans;
      } else {
        spans[idx] =
            partition_with_repetitions(s, pp.t, pp.seed, pp.repetitions, pp.q).spans;
      }
    }
  });
  res.stats.index_ms = ms_since(t0);
  for (const auto& v : spans) res.stats.index_keys += v.size();

  // Stream phase: strictly sequential in sorted order; eviction correctness
  // depends on it. Every span of a string probes the index before any of
  // that string's spans are inserted, so a string never pairs with itself.
  t0 = Clock::now();
  std::unordered_map<std::uint64_t, std::vector<IndexEntry>> index;
  index.reserve(res.stats.index_keys * 2);
  std::unordered_set<std::uint64_t> seen;
  std::vector<IdPair> candidates;
  std::vector<std::uint64_t> fps;

  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const std::uint32_t id = order[idx];
    const std::string& s = data[id].text;
    const auto slen = static_cast<std::uint32_t>(s.size());
    const std::vector<PartitionSpan>& mine = spans[idx];

    fps.resize(mine.size());
    for (std::size_t x = 0; x < mine.size(); ++x) {
      fps[x] = content_fingerprint(std::string_view(s).substr(mine[x].pos, mine[x].len));
    }

    for (std::size_t x = 0; x < mine.size(); ++x) {
      const auto it = index.find(fps[x]);
      if (it == index.end()) continue;
      std::vector<IndexEntry>& bucket = it->second;
      for (std::size_t e = 0; e < bucket.size();) {
        const IndexEntry ent = bucket[e];
        ++res.stats.probes;
        if (opts.use_length_filter && !length_filter(slen, ent.slen, k)) {
          // Sorted order makes a length-filter failure permanent.
          if (opts.use_eviction && evict_stale(slen, ent.slen, k)) {
            ++res.stats.evicted;
            bucket[e] = bucket.back();
            bucket.pop_back();
            continue;
          }
          ++e;
          continue;
        }
        if (opts.use_position_filter &&
            !position_filter(mine[x].pos, slen, ent.pos, ent.slen, k)) {
          ++e;
          continue;
        }
        if (ent.id != id) {
          ++res.stats.candidates_raw;
          const IdPair pr = make_pair_normalized(ent.id, id);
          if (seen.insert(pair_key(pr)).second) candidates.push_back(pr);
        }
        ++e;
      }
      if (bucket.empty()) index.erase(it);
    }

    for (std::size_t x = 0; x < mine.size(); ++x) {
      index[fps[x]].push_back({id, mine[x].pos, slen});
    }
  }
  std::sort(candidates.begin(), candidates.end());
  res.stats.filter_ms = ms_since(t0);
  res.stats.candidates = candidates.size();

  t0 = Clock::now();
  res.pairs = verify_pairs(data, k, candidates, opts.threads);
  res.stats.verify_ms = ms_since(t0);
  res.stats.verifications = candidates.size();
  res.stats.matches = res.pairs.size();
  res.candidates = std::move(candidates);
  return res;
}

std::vector<OutputPair> brute_force_join(const Dataset& data, std::uint32_t k,
                                         std::uint32_t threads) {
  if (data.size() > 5000) {
    std::cerr << "warning: brute-force join over " << data.size()
              << " strings is quadratic in the dataset size\n";
  }
  const std::size_t n = data.size();
  std::vector<std::vector<OutputPair>> rows(n);
  parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (const auto d = edit_distance_at_most(data[i].text, data[j].text, k)) {
          rows[i].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                             static_cast<std::uint32_t>(*d)});
        }
      }
    }
  });
  std::vector<OutputPair> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace minjoin
