#include "minjoin/minhash.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "minjoin/parallel.hpp"

namespace minjoin {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct SigEntry {
  std::uint32_t id;
  std::uint32_t slen;
};

}  // namespace

std::vector<std::uint64_t> minhash_signatures(std::string_view s, std::uint32_t ell,
                                              const GramHasher& hasher) {
  if (ell == 0) throw std::invalid_argument("signature count must be positive");
  if (s.size() < hasher.gram_length()) {
    throw std::invalid_argument("string shorter than gram length");
  }
  std::vector<std::uint64_t> values;
  hasher.hash_sequence(s, values);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() > ell) values.resize(ell);
  return values;
}

JoinResult minhash_join(const Dataset& data, std::uint32_t k, const MinHashOptions& opts) {
  if (data.empty()) throw std::invalid_argument("empty dataset");
  if (opts.ell == 0) throw std::invalid_argument("signature count must be positive");
  if (opts.q == 0) throw std::invalid_argument("gram length must be positive");
  if (opts.fixture_table && opts.fixture_table->gram_length() != opts.q) {
    throw std::invalid_argument("fixture gram length differs from configured q");
  }

  JoinResult res;
  res.stats.strings = data.size();
  const auto order = sorted_order(data);

  const GramHasher hasher = opts.fixture_table
                                ? GramHasher::lookup(opts.fixture_table)
                                : GramHasher::rolling(opts.seed, opts.q);

  auto t0 = Clock::now();
  std::vector<std::vector<std::uint64_t>> sigs(data.size());
  parallel_for(order.size(), opts.threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const std::string& s = data[order[idx]].text;
      if (s.size() < opts.q) {
        // No gram fits; fall back to one whole-string signature so identical
        // short strings still meet.
        sigs[idx] = {content_fingerprint(s)};
      } else {
        sigs[idx] = minhash_signatures(s, opts.ell, hasher);
      }
    }
  });
  res.stats.index_ms = ms_since(t0);
  for (const auto& v : sigs) res.stats.index_keys += v.size();

  t0 = Clock::now();
  std::unordered_map<std::uint64_t, std::vector<SigEntry>> index;
  index.reserve(res.stats.index_keys * 2);
  std::unordered_set<std::uint64_t> seen;
  std::vector<IdPair> candidates;

  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const std::uint32_t id = order[idx];
    const auto slen = static_cast<std::uint32_t>(data[id].text.size());
    const std::vector<std::uint64_t>& mine = sigs[idx];

    for (const std::uint64_t sig : mine) {
      const auto it = index.find(sig);
      if (it == index.end()) continue;
      std::vector<SigEntry>& bucket = it->second;
      for (std::size_t e = 0; e < bucket.size();) {
        const SigEntry ent = bucket[e];
        ++res.stats.probes;
        if (opts.use_length_filter && !length_filter(slen, ent.slen, k)) {
          if (opts.use_eviction && evict_stale(slen, ent.slen, k)) {
            ++res.stats.evicted;
            bucket[e] = bucket.back();
            bucket.pop_back();
            continue;
          }
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
    for (const std::uint64_t sig : mine) index[sig].push_back({id, slen});
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

}  // namespace minjoin
