#include <algorithm>

#include "doctest.h"
#include "minjoin/eval.hpp"
#include "minjoin/join.hpp"
#include "minjoin/minhash.hpp"

using namespace minjoin;

namespace {

std::shared_ptr<const LookupTable> demo_table() {
  static const auto table = std::make_shared<const LookupTable>(
      LookupTable::from_file(std::string(MINJOIN_DATA_DIR) + "/dna_3gram_hash.tsv"));
  return table;
}

Dataset demo_dataset() {
  return load_dataset(std::string(MINJOIN_DATA_DIR) + "/dna_demo.txt");
}

std::vector<IdPair> as_id_pairs(const std::vector<OutputPair>& pairs) {
  std::vector<IdPair> out;
  for (const auto& p : pairs) out.push_back({p.a, p.b});
  return out;
}

}  // namespace

TEST_SUITE("minhash") {

TEST_CASE("signatures keep the smallest distinct gram hashes in order") {
  const auto table = demo_table();
  const GramHasher hasher = GramHasher::lookup(table);
  const std::string s1 = "ACGTGCTAACGTGCTAACGTG";

  const auto sig2 = minhash_signatures(s1, 2, hasher);
  REQUIRE(sig2.size() == 2);
  CHECK(sig2[0] == table->value_of("CTA"));
  CHECK(sig2[1] == table->value_of("GCT"));

  const auto sig1 = minhash_signatures(s1, 1, hasher);
  CHECK(sig1 == std::vector<std::uint64_t>{table->value_of("CTA")});

  // s1 has 8 distinct grams; asking for more returns them all, still sorted.
  const auto big = minhash_signatures(s1, 32, hasher);
  CHECK(big.size() == 8);
  CHECK(std::is_sorted(big.begin(), big.end()));
  CHECK(std::adjacent_find(big.begin(), big.end()) == big.end());

  const auto collapsed = minhash_signatures("AAAA", 5, hasher);
  CHECK(collapsed == std::vector<std::uint64_t>{table->value_of("AAA")});
}

TEST_CASE("signature argument validation") {
  const GramHasher hasher = GramHasher::rolling(7, 5);
  CHECK_THROWS_AS((void)minhash_signatures("ABCD", 2, hasher), std::invalid_argument);
  CHECK_THROWS_AS((void)minhash_signatures("ABCDEF", 0, hasher), std::invalid_argument);
}

TEST_CASE("demo dataset with one minimum per string") {
  MinHashOptions opts;
  opts.ell = 1;
  opts.q = 3;
  opts.fixture_table = demo_table();
  const auto res = minhash_join(demo_dataset(), 4, opts);

  CHECK(res.candidates == std::vector<IdPair>{{0, 1}, {2, 3}});
  CHECK(res.pairs == std::vector<OutputPair>{{0, 1, 4}, {2, 3, 1}});
  CHECK(res.stats.verifications == 2);
}

TEST_CASE("identical strings always collide") {
  MinHashOptions opts;
  opts.ell = 3;
  opts.q = 4;
  opts.seed = 123;
  const auto res = minhash_join(dataset_from_lines({"ACGTACGT", "ACGTACGT"}), 0, opts);
  CHECK(res.pairs == std::vector<OutputPair>{{0, 1, 0}});

  // Strings shorter than the gram length fall back to whole-string keys.
  opts.q = 5;
  const auto tiny = minhash_join(dataset_from_lines({"AB", "AB", "XY"}), 0, opts);
  CHECK(tiny.pairs == std::vector<OutputPair>{{0, 1, 0}});
}

TEST_CASE("length filter prunes candidates without touching output") {
  const auto data =
      dataset_from_lines({"ACGTACGTAC", "ACGTACGTACGTACGTACGTACGTACGTAC"});
  MinHashOptions opts;
  opts.ell = 4;
  opts.q = 3;
  opts.seed = 9;
  const auto strict = minhash_join(data, 2, opts);
  CHECK(strict.candidates.empty());
  CHECK(strict.pairs.empty());

  opts.use_length_filter = false;
  opts.use_eviction = false;
  const auto loose = minhash_join(data, 2, opts);
  CHECK(loose.candidates == std::vector<IdPair>{{0, 1}});
  CHECK(loose.pairs.empty());
}

TEST_CASE("candidate sets are nested as signatures grow") {
  SyntheticSpec spec;
  spec.count = 100;
  spec.length = 80;
  spec.clusters = 20;
  spec.cluster_size = 3;
  spec.max_edits = 6;
  spec.seed = 2024;
  const auto gen = generate_synthetic(spec);
  const auto truth = brute_force_join(gen.strings, 6, 1);

  std::vector<IdPair> truth_ids;
  for (const auto& p : truth) truth_ids.push_back({p.a, p.b});

  double last_recall = -1.0;
  std::vector<IdPair> last;
  for (const std::uint32_t ell : {1u, 2u, 4u, 8u}) {
    MinHashOptions opts;
    opts.ell = ell;
    opts.q = 4;
    opts.seed = 55;
    const auto res = minhash_join(gen.strings, 6, opts);
    CHECK(std::includes(res.candidates.begin(), res.candidates.end(),
                        last.begin(), last.end()));
    const auto report = measure_recall(as_id_pairs(res.pairs), truth_ids);
    CHECK(report.precision == 1.0);
    CHECK(report.recall >= last_recall);
    last_recall = report.recall;
    last = res.candidates;
  }
}

TEST_CASE("results are identical for any thread count") {
  SyntheticSpec spec;
  spec.count = 90;
  spec.length = 60;
  spec.clusters = 15;
  spec.cluster_size = 3;
  spec.max_edits = 4;
  spec.seed = 808;
  const auto data = generate_synthetic(spec).strings;

  MinHashOptions opts;
  opts.ell = 4;
  opts.q = 4;
  opts.seed = 3;
  opts.threads = 1;
  const auto one = minhash_join(data, 4, opts);
  opts.threads = 4;
  const auto four = minhash_join(data, 4, opts);
  CHECK(one.pairs == four.pairs);
  CHECK(one.candidates == four.candidates);
}

TEST_CASE("argument validation") {
  MinHashOptions opts;
  opts.ell = 0;
  CHECK_THROWS_AS((void)minhash_join(dataset_from_lines({"AAAA", "AAAC"}), 1, opts),
                  std::invalid_argument);
  opts.ell = 1;
  CHECK_THROWS_AS((void)minhash_join({}, 1, opts), std::invalid_argument);
  opts.fixture_table = demo_table();
  opts.q = 4;
  CHECK_THROWS_AS((void)minhash_join(dataset_from_lines({"AAAA", "AAAC"}), 1, opts),
                  std::invalid_argument);
}

}  // TEST_SUITE
