// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minjoin/dataset.hpp"
#include "minjoin/eval.hpp"
#include "minjoin/gram_hash.hpp"
#include "minjoin/join.hpp"
#include "minjoin/minhash.hpp"
#include "minjoin/partition.hpp"
#include "minjoin/report.hpp"
#include "minjoin/verify.hpp"

namespace fs = std::filesystem;
using namespace minjoin;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  double seconds = 0;
  std::string note;
};

struct Context {
  std::uint64_t subset_runs = 0;
  std::uint64_t subset_violations = 0;
  Dataset recall_data;                    // seed-1 planted dataset
  std::vector<OutputPair> recall_truth;   // its exact answer at k=50
  std::uint64_t minjoin_t50_verifications = 0;
  double minjoin_t50_recall = 0;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 3) { return format_double(v, precision); }

// Every engine output in this binary funnels through here: the pairs must
// appear, with identical distances, in the exact answer.
bool check_subset(Context& ctx, const std::vector<OutputPair>& found,
                  const std::vector<OutputPair>& truth) {
  ++ctx.subset_runs;
  const bool ok = std::includes(truth.begin(), truth.end(), found.begin(), found.end());
  if (!ok) ++ctx.subset_violations;
  return ok;
}

std::vector<IdPair> ids_of(const std::vector<OutputPair>& pairs) {
  std::vector<IdPair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({p.a, p.b});
  return out;
}

std::string random_string(std::mt19937_64& rng, std::size_t len, std::uint32_t sigma) {
  std::uniform_int_distribution<std::uint32_t> letter(0, sigma - 1);
  std::string s(len, '\0');
  for (auto& c : s) c = alphabet_letter(letter(rng));
  return s;
}

std::uint32_t derive_q(const Dataset& data, std::uint32_t t) {
  const auto st = dataset_stats(data);
  const auto alphabet = std::max<std::uint32_t>(2, st.alphabet_size);
  std::uint32_t q = default_gram_length(std::max<std::uint64_t>(1, st.max_len), t, alphabet);
  return static_cast<std::uint32_t>(
      std::min<std::uint64_t>(q, std::max<std::size_t>(1, st.min_len)));
}

// --- criterion 1: the worked demo dataset -------------------------------

Outcome criterion1(Context& ctx) {
  Outcome out;
  const auto start = Clock::now();
  const auto table = std::make_shared<const LookupTable>(
      LookupTable::from_file(std::string(MINJOIN_DATA_DIR) + "/dna_3gram_hash.tsv"));
  const auto data = load_dataset(std::string(MINJOIN_DATA_DIR) + "/dna_demo.txt");

  const std::vector<std::vector<PartitionSpan>> expected_spans{
      {{0, 5}, {5, 8}, {13, 8}},
      {{0, 7}, {7, 8}, {15, 7}},
      {{0, 6}, {6, 8}, {14, 7}},
      {{0, 6}, {6, 8}, {14, 7}},
      {{0, 8}, {8, 8}, {16, 5}},
  };
  const GramHasher hasher = GramHasher::lookup(table);
  bool spans_ok = true;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto part = partition_string(data[i].text, 3, hasher);
    spans_ok = spans_ok && part.spans == expected_spans[i] && part.radius == 2;
  }

  JoinOptions opts;
  opts.partition = {3, 3, 1, 0};
  opts.fixture_table = table;
  const auto res = min_join(data, 4, opts);
  const std::vector<OutputPair> expected_pairs{{0, 1, 4}, {2, 3, 1}, {2, 4, 4}};
  const bool pairs_ok = res.pairs == expected_pairs;
  const bool subset_ok = check_subset(ctx, res.pairs, brute_force_join(data, 4, 1));

  out.seconds = seconds_since(start);
  out.pass = spans_ok && pairs_ok && subset_ok && out.seconds < 1.0;
  out.note = std::string("partitions ") + (spans_ok ? "match" : "differ") + ", pairs " +
             (pairs_ok ? "match" : "differ");
  return out;
}

// --- criterion 2: anchor-count concentration ----------------------------

Outcome criterion2() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(0xC2C2);
  std::vector<std::string> lines;
  for (int i = 0; i < 10; ++i) lines.push_back(random_string(rng, 5000, 4));
  const auto data = dataset_from_lines(lines);

  std::vector<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 20; ++i) seeds.push_back(repetition_seed(0xA5EED, i));
  const auto stats = anchor_statistics(data, 100, 9, seeds);

  const double tail = 1.0 - histogram_mass_within(stats, 100.0, std::sqrt(1000.0));
  out.seconds = seconds_since(start);
  out.pass = stats.samples == 200 && stats.mean >= 95.0 && stats.mean <= 105.0 &&
             stats.variance <= 150.0 && tail < 0.2 && out.seconds < 10.0;
  out.note = "samples=" + std::to_string(stats.samples) + " mean=" + fmt(stats.mean) +
             " variance=" + fmt(stats.variance) + " tail=" + fmt(tail);
  return out;
}

// --- criterion 4: planted pairs are recovered ---------------------------

Outcome criterion4(Context& ctx) {
  Outcome out;
  const auto start = Clock::now();
  double recall_sum = 0;
  bool all_exact_at_r5 = true;
  bool subsets_ok = true;

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SyntheticSpec spec;
    spec.count = 1000;
    spec.length = 1000;
    spec.alphabet_size = 4;
    spec.clusters = 100;
    spec.cluster_size = 3;
    spec.max_edits = 50;
    spec.seed = seed;
    const auto data = generate_synthetic(spec).strings;
    const auto truth = brute_force_join(data, 50, 1);
    const auto truth_ids = ids_of(truth);

    JoinOptions opts;
    opts.partition = {50, 7, 1, seed};
    const auto once = min_join(data, 50, opts);
    subsets_ok = check_subset(ctx, once.pairs, truth) && subsets_ok;
    const auto rep1 = measure_recall(ids_of(once.pairs), truth_ids);
    recall_sum += rep1.recall;

    opts.partition.repetitions = 5;
    const auto five = min_join(data, 50, opts);
    subsets_ok = check_subset(ctx, five.pairs, truth) && subsets_ok;
    const auto rep5 = measure_recall(ids_of(five.pairs), truth_ids);
    all_exact_at_r5 = all_exact_at_r5 && rep5.recall == 1.0;

    if (seed == 1) {
      ctx.recall_data = data;
      ctx.recall_truth = truth;
      ctx.minjoin_t50_verifications = once.stats.verifications;
      ctx.minjoin_t50_recall = rep1.recall;
    }
  }

  const double avg = recall_sum / 5.0;
  out.seconds = seconds_since(start);
  out.pass = avg >= 0.99 && all_exact_at_r5 && subsets_ok && out.seconds < 120.0;
  out.note = "avg_recall@r1=" + fmt(avg, 6) +
             " exact@r5=" + (all_exact_at_r5 ? std::string("yes") : std::string("no"));
  return out;
}

// --- criterion 5: banded verification agrees with the full DP -----------

Outcome criterion5() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(0x55AA);
  std::uint64_t disagreements = 0;

  for (int trial = 0; trial < 10000; ++trial) {
    const std::uint32_t sigma = 2 + static_cast<std::uint32_t>(rng() % 3);
    const std::size_t la = 1 + rng() % 64;
    std::string a = random_string(rng, la, sigma);
    std::string b;
    if (trial % 2 == 0) {
      b = random_string(rng, 1 + rng() % 64, sigma);
    } else {
      b = a;
      const std::size_t edits = rng() % 12;
      for (std::size_t e = 0; e < edits && !b.empty(); ++e) {
        const std::size_t pos = rng() % b.size();
        switch (rng() % 3) {
          case 0: b[pos] = alphabet_letter(static_cast<std::uint32_t>(rng() % sigma)); break;
          case 1: b.erase(pos, 1); break;
          default: b.insert(pos, 1, alphabet_letter(static_cast<std::uint32_t>(rng() % sigma)));
        }
      }
      if (b.empty()) b = "A";
    }
    const std::size_t k = rng() % 21;
    const std::size_t exact = edit_distance_full(a, b);
    const auto banded = edit_distance_at_most(a, b, k);
    const bool expect_hit = exact <= k;
    if (banded.has_value() != expect_hit) ++disagreements;
    if (banded.has_value() && *banded != exact) ++disagreements;
  }

  out.seconds = seconds_since(start);
  out.pass = disagreements == 0 && out.seconds < 10.0;
  out.note = "disagreements=" + std::to_string(disagreements);
  return out;
}

// --- criterion 6: partitioning time scales linearly ---------------------

Outcome criterion6() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(0x66);
  const std::size_t piece = 20000;
  std::vector<std::string> half;   // 10^7 letters
  std::vector<std::string> whole;  // 2 * 10^7 letters
  for (int i = 0; i < 1000; ++i) {
    auto s = random_string(rng, piece, 4);
    if (i < 500) half.push_back(s);
    whole.push_back(std::move(s));
  }

  const GramHasher hasher = GramHasher::rolling(7, 12);
  std::uint64_t sink = 0;
  const auto time_set = [&](const std::vector<std::string>& set) {
    double best = 1e100;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = Clock::now();
      for (const auto& s : set) sink += partition_string(s, 100, hasher).spans.size();
      best = std::min(best, seconds_since(t0));
    }
    return best;
  };

  time_set(half);  // warm up allocator and caches
  const double t_half = time_set(half);
  const double t_whole = time_set(whole);
  const double ratio = t_whole / t_half;

  out.seconds = seconds_since(start);
  out.pass = ratio <= 2.5 && sink > 0 && out.seconds < 60.0;
  out.note = "t(L)=" + fmt(t_half) + "s t(2L)=" + fmt(t_whole) + "s ratio=" + fmt(ratio);
  return out;
}

// --- criterion 7: filters and eviction never change verified output -----

Outcome criterion7(Context& ctx) {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(0x77AA);
  bool outputs_agree = true;
  bool candidates_nest = true;
  bool length_filter_safe = true;
  bool subsets_ok = true;
  std::uint64_t truth_pairs = 0;

  for (int trial = 0; trial < 50; ++trial) {
    // Thresholds stay well under the string length; joining degenerates when
    // k approaches |s| and whole random strings count as similar.
    SyntheticSpec spec;
    spec.count = 20 + static_cast<std::uint32_t>(rng() % 180);
    spec.length = 30 + static_cast<std::uint32_t>(rng() % 50);
    spec.alphabet_size = 4 + static_cast<std::uint32_t>(rng() % 13);
    spec.clusters = spec.count / 6;
    spec.cluster_size = 2 + static_cast<std::uint32_t>(rng() % 2);
    spec.max_edits = 2 + static_cast<std::uint32_t>(rng() % 5);
    spec.seed = 7000 + static_cast<std::uint64_t>(trial);
    const auto data = generate_synthetic(spec).strings;

    const std::uint32_t k = spec.max_edits;
    const auto truth = brute_force_join(data, k, 1);
    truth_pairs += truth.size();
    for (const auto& p : truth) {
      length_filter_safe = length_filter_safe &&
                           length_filter(data[p.a].text.size(), data[p.b].text.size(), k);
    }

    JoinOptions base;
    const std::uint32_t t = std::max<std::uint32_t>(1, (k + 4) / 5);
    base.partition = {t, derive_q(data, t), 2, spec.seed * 31 + 1};

    const auto strict = min_join(data, k, base);
    auto o = base;
    o.use_length_filter = false;
    const auto no_len = min_join(data, k, o);
    o = base;
    o.use_position_filter = false;
    const auto no_pos = min_join(data, k, o);
    o = base;
    o.use_length_filter = false;
    o.use_position_filter = false;
    o.use_eviction = false;
    const auto loose = min_join(data, k, o);
    o = base;
    o.use_eviction = false;
    const auto no_evict = min_join(data, k, o);

    outputs_agree = outputs_agree && strict.pairs == no_len.pairs &&
                    strict.pairs == no_pos.pairs && strict.pairs == loose.pairs &&
                    strict.pairs == no_evict.pairs;
    candidates_nest = candidates_nest &&
                      std::includes(loose.candidates.begin(), loose.candidates.end(),
                                    strict.candidates.begin(), strict.candidates.end());
    for (const auto* res : {&strict, &no_len, &no_pos, &loose, &no_evict}) {
      subsets_ok = check_subset(ctx, res->pairs, truth) && subsets_ok;
    }
  }

  out.seconds = seconds_since(start);
  out.pass = outputs_agree && candidates_nest && length_filter_safe && subsets_ok;
  out.note = "datasets=50 truth_pairs=" + std::to_string(truth_pairs) +
             (outputs_agree ? "" : " outputs-differ") +
             (length_filter_safe ? "" : " length-filter-unsafe");
  return out;
}

// --- criterion 8: minhash nesting and recall growth ---------------------

Outcome criterion8(Context& ctx) {
  Outcome out;
  const auto start = Clock::now();
  if (ctx.recall_data.empty()) {
    out.note = "skipped: planted dataset unavailable";
    return out;
  }
  const auto truth_ids = ids_of(ctx.recall_truth);

  bool nested = true;
  bool nondecreasing = true;
  bool subsets_ok = true;
  double last_recall = -1.0;
  std::vector<IdPair> last;
  std::string log;

  for (const std::uint32_t ell : {1u, 4u, 16u}) {
    MinHashOptions opts;
    opts.ell = ell;
    opts.q = 7;
    opts.seed = 424242;
    const auto res = minhash_join(ctx.recall_data, 50, opts);
    nested = nested && std::includes(res.candidates.begin(), res.candidates.end(),
                                     last.begin(), last.end());
    subsets_ok = check_subset(ctx, res.pairs, ctx.recall_truth) && subsets_ok;
    const auto rep = measure_recall(ids_of(res.pairs), truth_ids);
    nondecreasing = nondecreasing && rep.recall >= last_recall;
    last_recall = rep.recall;
    last = res.candidates;
    log += " ell=" + std::to_string(ell) + ":recall=" + fmt(rep.recall, 4) +
           ",verifications=" + std::to_string(res.stats.verifications);
  }
  log += " | minjoin t=50: recall=" + fmt(ctx.minjoin_t50_recall, 4) +
         ",verifications=" + std::to_string(ctx.minjoin_t50_verifications);

  out.seconds = seconds_since(start);
  out.pass = nested && nondecreasing && subsets_ok;
  out.note = (nested ? "nested" : "not-nested") + log;
  return out;
}

// --- criterion 9: byte-identical outputs --------------------------------

int run_cli(const fs::path& dir, const std::string& args) {
  const std::string cmd = std::string(MINJOIN_CLI_PATH) + " " + args + " >" +
                          (dir / "cli.log").string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome criterion9() {
  Outcome out;
  const auto start = Clock::now();
  const fs::path dir =
      fs::temp_directory_path() / ("minjoin-accept-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  bool ok = true;
  const std::string gen = "gen --count 300 --length 300 --alphabet-size 4 --clusters 30"
                          " --cluster-size 3 --max-edits 10 --seed 5 --output ";
  ok = ok && run_cli(dir, gen + (dir / "d1.txt").string()) == 0;
  ok = ok && run_cli(dir, gen + (dir / "d2.txt").string()) == 0;
  ok = ok && slurp(dir / "d1.txt") == slurp(dir / "d2.txt");

  const std::string join = "join --input " + (dir / "d1.txt").string() +
                           " --k 10 --repetitions 3 --seed 7 --output ";
  ok = ok && run_cli(dir, join + (dir / "p1.tsv").string() + " --threads 1") == 0;
  ok = ok && run_cli(dir, join + (dir / "p2.tsv").string() + " --threads 4") == 0;
  ok = ok && run_cli(dir, join + (dir / "p3.tsv").string() + " --threads 4") == 0;
  const auto p1 = slurp(dir / "p1.tsv");
  ok = ok && !p1.empty() && p1 == slurp(dir / "p2.tsv") && p1 == slurp(dir / "p3.tsv");

  const std::string stats = "stats --input " + (dir / "d1.txt").string() +
                            " --t 5 --runs 20 --seed 3 --output ";
  ok = ok && run_cli(dir, stats + (dir / "s1.csv").string()) == 0;
  ok = ok && run_cli(dir, stats + (dir / "s2.csv").string()) == 0;
  ok = ok && slurp(dir / "s1.csv") == slurp(dir / "s2.csv");

  std::error_code ec;
  fs::remove_all(dir, ec);

  out.seconds = seconds_since(start);
  out.pass = ok;
  out.note = ok ? "gen/join/stats outputs stable" : "outputs diverged or a command failed";
  return out;
}

}  // namespace

int main() {
  Context ctx;
  Outcome results[10];

  results[1] = criterion1(ctx);
  results[2] = criterion2();
  results[4] = criterion4(ctx);
  results[5] = criterion5();
  results[6] = criterion6();
  results[7] = criterion7(ctx);
  results[8] = criterion8(ctx);
  results[9] = criterion9();

  // Criterion 3 aggregates the subset checks performed by every engine run
  // above: output must always be a subset of the exact answer.
  results[3].pass = ctx.subset_runs > 0 && ctx.subset_violations == 0;
  results[3].note = "engine_runs=" + std::to_string(ctx.subset_runs) +
                    " violations=" + std::to_string(ctx.subset_violations);

  const char* titles[10] = {
      nullptr,
      "demo dataset reproduces the worked partitions and pairs",
      "interior anchor counts concentrate at the target",
      "every engine output is a subset of the exact answer",
      "planted similar pairs are recovered",
      "banded verification matches the full DP",
      "partitioning time scales linearly",
      "filters and eviction never change verified output",
      "minhash candidates nest and recall grows with signature size",
      "identical configurations produce byte-identical outputs",
  };

  int failed = 0;
  for (int i = 1; i <= 9; ++i) {
    const auto& r = results[i];
    if (!r.pass) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", r.pass ? "PASS" : "FAIL", i, titles[i],
                r.seconds, r.note.empty() ? "" : " | ", r.note.c_str());
  }
  std::printf("acceptance: %d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
