#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minjoin/dataset.hpp"
#include "minjoin/eval.hpp"
#include "minjoin/gram_hash.hpp"
#include "minjoin/join.hpp"
#include "minjoin/minhash.hpp"
#include "minjoin/partition.hpp"
#include "minjoin/report.hpp"
#include "minjoin/verify.hpp"
#include "minjoin/version.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using minjoin::Metadata;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output: " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("error writing output: " + path);
}

// Options shared by the join-style commands.
struct EngineCfg {
  std::string input;
  std::string output;
  std::string timings;
  std::string fixture;
  std::string engine = "minjoin";
  std::uint32_t k = 0;
  std::uint32_t t = 0;
  std::uint32_t q = 0;
  std::uint32_t ell = 1;
  std::uint32_t repetitions = 1;
  std::uint32_t threads = 1;
  std::uint64_t seed = 1;
  bool t_set = false;
  bool q_set = false;
  bool ell_set = false;
  bool no_length_filter = false;
  bool no_position_filter = false;
  bool no_eviction = false;
};

struct SynthCfg {
  std::uint32_t count = 0;
  std::uint32_t length = 0;
  std::uint32_t alphabet_size = 4;
  std::uint32_t clusters = 0;
  std::uint32_t cluster_size = 0;
  std::uint32_t max_edits = 0;
  bool requested = false;
};

// Option handles needed after parsing to tell defaults from explicit values.
struct EngineOptionRefs {
  CLI::Option* t = nullptr;
  CLI::Option* q = nullptr;
  CLI::Option* ell = nullptr;
};

EngineOptionRefs add_engine_options(CLI::App* cmd, EngineCfg& cfg, bool with_output) {
  cmd->add_option("--k", cfg.k, "edit distance threshold")->required();
  auto* t_opt = cmd->add_option("--t", cfg.t, "targeted partitions per string (default max(1, ceil(k/5)))")
                    ->check(CLI::PositiveNumber);
  auto* q_opt = cmd->add_option("--q", cfg.q, "gram length (default derived from the dataset)")
                    ->check(CLI::PositiveNumber);
  auto* ell_opt = cmd->add_option("--ell", cfg.ell, "minhash signatures per string")
                      ->check(CLI::PositiveNumber);
  cmd->add_option("--repetitions", cfg.repetitions, "independent partition runs per string")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "base seed for all randomness");
  cmd->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  cmd->add_option("--engine", cfg.engine, "join engine")
      ->check(CLI::IsMember({"minjoin", "minhash", "brute"}));
  cmd->add_option("--fixture-hash", cfg.fixture, "gram hash table file (fixed per-gram values)")
      ->check(CLI::ExistingFile);
  cmd->add_flag("--no-length-filter", cfg.no_length_filter, "disable the length filter");
  cmd->add_flag("--no-position-filter", cfg.no_position_filter, "disable the position filter");
  cmd->add_flag("--no-eviction", cfg.no_eviction, "keep stale index entries");
  cmd->add_option("--timings", cfg.timings, "write a stage,millis CSV here");
  if (with_output) {
    cmd->add_option("--output", cfg.output, "output pair file")->required();
  }
  return {t_opt, q_opt, ell_opt};
}

void finalize_engine_options(EngineCfg& cfg, const EngineOptionRefs& refs) {
  cfg.t_set = refs.t->count() > 0;
  cfg.q_set = refs.q->count() > 0;
  cfg.ell_set = refs.ell->count() > 0;
}

CLI::Option* add_synth_options(CLI::App* cmd, SynthCfg& cfg, bool require_clusters) {
  auto* count = cmd->add_option("--count", cfg.count, "number of strings")
                    ->check(CLI::PositiveNumber);
  cmd->add_option("--length", cfg.length, "base string length")->check(CLI::PositiveNumber);
  cmd->add_option("--alphabet-size", cfg.alphabet_size, "distinct letters (2..64)")
      ->check(CLI::Range(2u, 64u));
  auto* clusters = cmd->add_option("--clusters", cfg.clusters, "planted similarity clusters");
  cmd->add_option("--cluster-size", cfg.cluster_size, "strings per cluster");
  cmd->add_option("--max-edits", cfg.max_edits, "max edits applied within a cluster");
  if (require_clusters) clusters->needs(count);
  return count;
}

std::shared_ptr<const minjoin::LookupTable> load_fixture(const EngineCfg& cfg) {
  if (cfg.fixture.empty()) return nullptr;
  return std::make_shared<const minjoin::LookupTable>(
      minjoin::LookupTable::from_file(cfg.fixture));
}

// Fill t/q defaults from the threshold and the dataset: t targets the fast
// end of the practical range, and q is the collision-safe gram length capped
// by the shortest string.
void resolve_defaults(EngineCfg& cfg, const minjoin::DatasetStats& st,
                      const std::shared_ptr<const minjoin::LookupTable>& fixture) {
  if (!cfg.t_set) cfg.t = std::max<std::uint32_t>(1, (cfg.k + 4) / 5);
  if (fixture) {
    if (cfg.q_set && cfg.q != fixture->gram_length()) {
      throw std::runtime_error("--q conflicts with the fixture table's gram length");
    }
    cfg.q = fixture->gram_length();
    return;
  }
  if (!cfg.q_set) {
    const auto alphabet = std::max<std::uint32_t>(2, st.alphabet_size);
    const std::uint64_t longest = std::max<std::uint64_t>(1, st.max_len);
    std::uint32_t q = minjoin::default_gram_length(longest, cfg.t, alphabet);
    q = std::min<std::uint64_t>(q, std::max<std::size_t>(1, st.min_len));
    cfg.q = q;
  }
}

void validate_engine_flags(const EngineCfg& cfg) {
  if (cfg.engine == "brute") {
    if (!cfg.fixture.empty() || cfg.ell_set || cfg.t_set || cfg.q_set ||
        cfg.no_length_filter || cfg.no_position_filter || cfg.no_eviction ||
        cfg.repetitions != 1) {
      throw std::runtime_error("conflicting flags: brute engine takes no join tuning options");
    }
  }
  if (cfg.engine == "minhash") {
    if (cfg.no_position_filter) {
      throw std::runtime_error("conflicting flags: minhash applies no position filter");
    }
    if (cfg.repetitions != 1) {
      throw std::runtime_error("conflicting flags: minhash does not repeat partitioning");
    }
  }
  if (cfg.engine != "minhash" && cfg.ell_set) {
    throw std::runtime_error("conflicting flags: --ell is a minhash option");
  }
  if (!cfg.fixture.empty() && cfg.repetitions != 1) {
    throw std::runtime_error("conflicting flags: fixture hashing cannot derive repetition seeds");
  }
}

minjoin::JoinResult run_engine(const EngineCfg& cfg, const minjoin::Dataset& data,
                               const std::shared_ptr<const minjoin::LookupTable>& fixture) {
  if (cfg.engine == "minjoin") {
    minjoin::JoinOptions opts;
    opts.partition = {cfg.t, cfg.q, cfg.repetitions, cfg.seed};
    opts.threads = cfg.threads;
    opts.use_length_filter = !cfg.no_length_filter;
    opts.use_position_filter = !cfg.no_position_filter;
    opts.use_eviction = !cfg.no_eviction;
    opts.fixture_table = fixture;
    return minjoin::min_join(data, cfg.k, opts);
  }
  if (cfg.engine == "minhash") {
    minjoin::MinHashOptions opts;
    opts.ell = cfg.ell;
    opts.q = cfg.q;
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;
    opts.use_length_filter = !cfg.no_length_filter;
    opts.use_eviction = !cfg.no_eviction;
    opts.fixture_table = fixture;
    return minjoin::minhash_join(data, cfg.k, opts);
  }
  minjoin::JoinResult res;
  res.pairs = minjoin::brute_force_join(data, cfg.k, cfg.threads);
  res.stats.strings = data.size();
  res.stats.verifications = data.size() * (data.size() - 1) / 2;
  res.stats.matches = res.pairs.size();
  return res;
}

Metadata engine_metadata(const EngineCfg& cfg, const char* command) {
  Metadata meta;
  meta.emplace_back("version", std::string(minjoin::kVersion));
  meta.emplace_back("command", command);
  meta.emplace_back("engine", cfg.engine);
  meta.emplace_back("k", std::to_string(cfg.k));
  if (cfg.engine == "minjoin") {
    meta.emplace_back("t", std::to_string(cfg.t));
    meta.emplace_back("repetitions", std::to_string(cfg.repetitions));
  }
  if (cfg.engine == "minhash") meta.emplace_back("ell", std::to_string(cfg.ell));
  if (cfg.engine != "brute") {
    meta.emplace_back("q", std::to_string(cfg.q));
    meta.emplace_back("seed", std::to_string(cfg.seed));
    if (!cfg.fixture.empty()) meta.emplace_back("fixture", cfg.fixture);
    meta.emplace_back("length_filter", cfg.no_length_filter ? "off" : "on");
    if (cfg.engine == "minjoin") {
      meta.emplace_back("position_filter", cfg.no_position_filter ? "off" : "on");
    }
    meta.emplace_back("eviction", cfg.no_eviction ? "off" : "on");
  }
  return meta;
}

void append_stats_metadata(Metadata& meta, const minjoin::JoinStats& st) {
  meta.emplace_back("strings", std::to_string(st.strings));
  meta.emplace_back("index_keys", std::to_string(st.index_keys));
  meta.emplace_back("probes", std::to_string(st.probes));
  meta.emplace_back("candidates_raw", std::to_string(st.candidates_raw));
  meta.emplace_back("candidates", std::to_string(st.candidates));
  meta.emplace_back("verifications", std::to_string(st.verifications));
  meta.emplace_back("evicted", std::to_string(st.evicted));
  meta.emplace_back("matches", std::to_string(st.matches));
}

void write_metadata_comments(std::ostream& out, const Metadata& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << "=" << value << "\n";
}

int run_join(const EngineCfg& cfg) {
  validate_engine_flags(cfg);
  const auto start = Clock::now();
  auto t0 = Clock::now();
  const auto data = minjoin::load_dataset(cfg.input);
  const double read_ms = ms_since(t0);

  auto cfg_rt = cfg;
  const auto fixture = load_fixture(cfg_rt);
  resolve_defaults(cfg_rt, minjoin::dataset_stats(data), fixture);
  const auto res = run_engine(cfg_rt, data, fixture);

  Metadata meta = engine_metadata(cfg_rt, "join");
  meta.emplace_back("input", cfg.input);
  append_stats_metadata(meta, res.stats);

  t0 = Clock::now();
  auto out = open_output(cfg_rt.output);
  minjoin::write_pairs(out, res.pairs, meta);
  finish_output(out, cfg_rt.output);
  const double write_ms = ms_since(t0);

  if (!cfg_rt.timings.empty()) {
    auto tf = open_output(cfg_rt.timings);
    write_metadata_comments(tf, meta);
    minjoin::write_stage_csv(tf, {{"read", read_ms},
                                  {"index", res.stats.index_ms},
                                  {"filter", res.stats.filter_ms},
                                  {"verify", res.stats.verify_ms},
                                  {"write", write_ms},
                                  {"total", ms_since(start)}});
    finish_output(tf, cfg_rt.timings);
  }
  std::cout << "join: strings=" << res.stats.strings << " candidates=" << res.stats.candidates
            << " pairs=" << res.pairs.size() << " -> " << cfg_rt.output << "\n";
  return 0;
}

minjoin::Dataset make_synthetic(const SynthCfg& synth, std::uint64_t seed,
                                std::vector<minjoin::IdPair>* planted) {
  minjoin::SyntheticSpec spec;
  spec.count = synth.count;
  spec.length = synth.length;
  spec.alphabet_size = synth.alphabet_size;
  spec.clusters = synth.clusters;
  spec.cluster_size = synth.cluster_size;
  spec.max_edits = synth.max_edits;
  spec.seed = seed;
  auto gen = minjoin::generate_synthetic(spec);
  if (planted) *planted = std::move(gen.planted);
  return std::move(gen.strings);
}

Metadata synth_metadata(const SynthCfg& synth) {
  Metadata meta;
  meta.emplace_back("count", std::to_string(synth.count));
  meta.emplace_back("length", std::to_string(synth.length));
  meta.emplace_back("alphabet_size", std::to_string(synth.alphabet_size));
  meta.emplace_back("clusters", std::to_string(synth.clusters));
  meta.emplace_back("cluster_size", std::to_string(synth.cluster_size));
  meta.emplace_back("max_edits", std::to_string(synth.max_edits));
  return meta;
}

struct EvalCfg {
  EngineCfg engine;
  SynthCfg synth;
  std::string truth_path;
  std::string pairs_path;
  std::uint32_t sweep = 0;
};

int run_eval(const EvalCfg& cfg) {
  validate_engine_flags(cfg.engine);
  const bool from_file = !cfg.engine.input.empty();
  if (from_file == cfg.synth.requested) {
    throw std::runtime_error("conflicting flags: give either --input or --count with synthetic options");
  }
  if (cfg.sweep > 0 && cfg.engine.t_set) {
    throw std::runtime_error("conflicting flags: --sweep-t replaces --t");
  }
  if (cfg.sweep > 0 && cfg.engine.engine != "minjoin") {
    throw std::runtime_error("conflicting flags: --sweep-t tunes the minjoin engine");
  }
  if (cfg.sweep > 0 && !cfg.pairs_path.empty()) {
    throw std::runtime_error("conflicting flags: --pairs needs a single configuration");
  }

  const auto start = Clock::now();
  auto t0 = Clock::now();
  minjoin::Dataset data = from_file ? minjoin::load_dataset(cfg.engine.input)
                                    : make_synthetic(cfg.synth, cfg.engine.seed, nullptr);
  const double read_ms = ms_since(t0);

  t0 = Clock::now();
  std::vector<minjoin::IdPair> truth;
  if (!cfg.truth_path.empty()) {
    for (const auto& p : minjoin::read_pairs_file(cfg.truth_path)) {
      truth.push_back(minjoin::make_pair_normalized(p.a, p.b));
    }
  } else {
    for (const auto& p : minjoin::brute_force_join(data, cfg.engine.k, cfg.engine.threads)) {
      truth.push_back({p.a, p.b});
    }
  }
  const double oracle_ms = ms_since(t0);

  const auto fixture = load_fixture(cfg.engine);
  const auto stats = minjoin::dataset_stats(data);

  std::vector<std::uint32_t> t_values;
  auto base = cfg.engine;
  resolve_defaults(base, stats, fixture);
  if (cfg.sweep > 0) {
    const std::uint32_t lo = std::max<std::uint32_t>(1, (base.k + 4) / 5);
    const std::uint32_t hi = std::max(lo, base.k);
    for (std::uint32_t i = 0; i < cfg.sweep; ++i) {
      const std::uint32_t tv =
          cfg.sweep == 1 ? lo
                         : static_cast<std::uint32_t>(
                               lo + (static_cast<std::uint64_t>(hi - lo) * i) / (cfg.sweep - 1));
      if (t_values.empty() || t_values.back() != tv) t_values.push_back(tv);
    }
  } else {
    t_values.push_back(base.t);
  }

  Metadata meta = engine_metadata(base, "eval");
  if (from_file) {
    meta.emplace_back("input", cfg.engine.input);
  } else {
    for (auto& kv : synth_metadata(cfg.synth)) meta.push_back(std::move(kv));
  }
  if (!cfg.truth_path.empty()) meta.emplace_back("truth", cfg.truth_path);
  meta.emplace_back("truth_pairs", std::to_string(truth.size()));

  std::vector<std::pair<std::string, std::string>> metrics;
  double engine_ms = 0;
  for (const std::uint32_t tv : t_values) {
    auto run_cfg = cfg.engine;
    run_cfg.t_set = true;
    run_cfg.t = tv;
    resolve_defaults(run_cfg, stats, fixture);
    t0 = Clock::now();
    const auto res = run_engine(run_cfg, data, fixture);
    engine_ms += ms_since(t0);

    std::vector<minjoin::IdPair> found;
    found.reserve(res.pairs.size());
    for (const auto& p : res.pairs) found.push_back({p.a, p.b});
    const auto rep = minjoin::measure_recall(found, truth);

    const std::string suffix =
        cfg.sweep > 0 ? "@t=" + std::to_string(tv) : std::string();
    metrics.emplace_back("recall" + suffix, minjoin::format_double(rep.recall));
    metrics.emplace_back("precision" + suffix, minjoin::format_double(rep.precision));
    metrics.emplace_back("found" + suffix, std::to_string(rep.found_size));
    metrics.emplace_back("hits" + suffix, std::to_string(rep.hits));
    metrics.emplace_back("candidates" + suffix, std::to_string(res.stats.candidates));
    metrics.emplace_back("verifications" + suffix, std::to_string(res.stats.verifications));

    if (!cfg.pairs_path.empty()) {
      Metadata pair_meta = engine_metadata(run_cfg, "eval");
      append_stats_metadata(pair_meta, res.stats);
      auto pf = open_output(cfg.pairs_path);
      minjoin::write_pairs(pf, res.pairs, pair_meta);
      finish_output(pf, cfg.pairs_path);
    }
  }
  metrics.emplace_back("truth", std::to_string(truth.size()));

  auto out = open_output(cfg.engine.output);
  write_metadata_comments(out, meta);
  minjoin::write_metric_csv(out, metrics);
  finish_output(out, cfg.engine.output);

  if (!cfg.engine.timings.empty()) {
    auto tf = open_output(cfg.engine.timings);
    write_metadata_comments(tf, meta);
    minjoin::write_stage_csv(tf, {{"read", read_ms},
                                  {"oracle", oracle_ms},
                                  {"engine", engine_ms},
                                  {"total", ms_since(start)}});
    finish_output(tf, cfg.engine.timings);
  }
  for (const auto& [metric, value] : metrics) {
    std::cout << "eval: " << metric << "=" << value << "\n";
  }
  return 0;
}

struct GenCfg {
  SynthCfg synth;
  std::string output;
  std::string truth;
  std::uint64_t seed = 1;
  std::uint32_t threads = 1;
};

int run_gen(const GenCfg& cfg) {
  if (!cfg.synth.requested || cfg.synth.length == 0) {
    throw std::runtime_error("gen requires --count and --length");
  }
  std::vector<minjoin::IdPair> planted;
  const auto data = make_synthetic(cfg.synth, cfg.seed, &planted);

  auto out = open_output(cfg.output);
  minjoin::save_dataset(out, data);
  finish_output(out, cfg.output);

  if (!cfg.truth.empty()) {
    std::vector<minjoin::OutputPair> pairs;
    pairs.reserve(planted.size());
    for (const auto& p : planted) {
      const auto d = minjoin::edit_distance_at_most(data[p.a].text, data[p.b].text,
                                                    cfg.synth.max_edits);
      pairs.push_back({p.a, p.b, static_cast<std::uint32_t>(*d)});
    }
    Metadata meta;
    meta.emplace_back("version", std::string(minjoin::kVersion));
    meta.emplace_back("command", "gen");
    for (auto& kv : synth_metadata(cfg.synth)) meta.push_back(std::move(kv));
    meta.emplace_back("seed", std::to_string(cfg.seed));
    meta.emplace_back("planted", std::to_string(pairs.size()));
    auto tf = open_output(cfg.truth);
    minjoin::write_pairs(tf, pairs, meta);
    finish_output(tf, cfg.truth);
  }
  std::cout << "gen: strings=" << data.size() << " planted=" << planted.size() << " -> "
            << cfg.output << "\n";
  return 0;
}

struct StatsCfg {
  SynthCfg synth;
  std::string input;
  std::string output;
  std::string timings;
  std::uint32_t t = 0;
  std::uint32_t q = 0;
  bool q_set = false;
  std::uint32_t runs = 1;
  std::uint64_t seed = 1;
};

int run_stats(const StatsCfg& cfg) {
  const bool from_file = !cfg.input.empty();
  if (from_file == cfg.synth.requested) {
    throw std::runtime_error("conflicting flags: give either --input or --count with synthetic options");
  }
  const auto start = Clock::now();
  minjoin::Dataset data = from_file ? minjoin::load_dataset(cfg.input)
                                    : make_synthetic(cfg.synth, cfg.seed, nullptr);
  const auto st = minjoin::dataset_stats(data);

  std::uint32_t q = cfg.q;
  if (!cfg.q_set) {
    const auto alphabet = std::max<std::uint32_t>(2, st.alphabet_size);
    q = minjoin::default_gram_length(std::max<std::uint64_t>(1, st.max_len), cfg.t, alphabet);
    q = std::min<std::uint64_t>(q, std::max<std::size_t>(1, st.min_len));
  }

  std::vector<std::uint64_t> seeds;
  seeds.reserve(cfg.runs);
  for (std::uint32_t i = 0; i < cfg.runs; ++i) {
    seeds.push_back(minjoin::repetition_seed(cfg.seed, i));
  }
  const auto anchor = minjoin::anchor_statistics(data, cfg.t, q, seeds);

  Metadata meta;
  meta.emplace_back("version", std::string(minjoin::kVersion));
  meta.emplace_back("command", "stats");
  if (from_file) {
    meta.emplace_back("input", cfg.input);
  } else {
    for (auto& kv : synth_metadata(cfg.synth)) meta.push_back(std::move(kv));
  }
  meta.emplace_back("t", std::to_string(cfg.t));
  meta.emplace_back("q", std::to_string(q));
  meta.emplace_back("seed", std::to_string(cfg.seed));
  meta.emplace_back("runs", std::to_string(cfg.runs));
  meta.emplace_back("samples", std::to_string(anchor.samples));
  meta.emplace_back("mean", minjoin::format_double(anchor.mean));
  meta.emplace_back("variance", minjoin::format_double(anchor.variance));

  auto out = open_output(cfg.output);
  write_metadata_comments(out, meta);
  minjoin::write_anchor_csv(out, anchor);
  finish_output(out, cfg.output);

  if (!cfg.timings.empty()) {
    auto tf = open_output(cfg.timings);
    write_metadata_comments(tf, meta);
    minjoin::write_stage_csv(tf, {{"total", ms_since(start)}});
    finish_output(tf, cfg.timings);
  }
  std::cout << "stats: samples=" << anchor.samples
            << " mean=" << minjoin::format_double(anchor.mean)
            << " variance=" << minjoin::format_double(anchor.variance) << " -> " << cfg.output
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edit-similarity join over string datasets"};
  app.require_subcommand(1);

  EngineCfg join_cfg;
  auto* join_cmd = app.add_subcommand("join", "find all pairs within edit distance k");
  join_cmd->add_option("--input", join_cfg.input, "dataset file, one string per line")
      ->required()
      ->check(CLI::ExistingFile);
  const auto join_refs = add_engine_options(join_cmd, join_cfg, true);

  EvalCfg eval_cfg;
  auto* eval_cmd = app.add_subcommand("eval", "measure an engine against exact truth");
  eval_cmd->add_option("--input", eval_cfg.engine.input, "dataset file")
      ->check(CLI::ExistingFile);
  const auto eval_refs = add_engine_options(eval_cmd, eval_cfg.engine, true);
  auto* eval_count = add_synth_options(eval_cmd, eval_cfg.synth, false);
  eval_cmd->add_option("--truth", eval_cfg.truth_path, "pair file with exact truth")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--pairs", eval_cfg.pairs_path, "also write the engine's pair file");
  eval_cmd->add_option("--sweep-t", eval_cfg.sweep, "evaluate this many t values across [k/5, k]")
      ->check(CLI::PositiveNumber);

  GenCfg gen_cfg;
  auto* gen_cmd = app.add_subcommand("gen", "write a synthetic dataset with planted pairs");
  auto* gen_count = add_synth_options(gen_cmd, gen_cfg.synth, true);
  gen_cmd->add_option("--seed", gen_cfg.seed, "generation seed");
  gen_cmd->add_option("--output", gen_cfg.output, "dataset file to write")->required();
  gen_cmd->add_option("--truth", gen_cfg.truth, "also write the planted pair file");

  StatsCfg stats_cfg;
  auto* stats_cmd = app.add_subcommand("stats", "anchor-count distribution over seeded runs");
  stats_cmd->add_option("--input", stats_cfg.input, "dataset file")->check(CLI::ExistingFile);
  auto* stats_count = add_synth_options(stats_cmd, stats_cfg.synth, false);
  stats_cmd->add_option("--t", stats_cfg.t, "targeted partitions per string")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* stats_q = stats_cmd->add_option("--q", stats_cfg.q, "gram length")
                      ->check(CLI::PositiveNumber);
  stats_cmd->add_option("--seed", stats_cfg.seed, "base seed");
  stats_cmd->add_option("--runs", stats_cfg.runs, "seeded runs")->check(CLI::PositiveNumber);
  stats_cmd->add_option("--output", stats_cfg.output, "anchor histogram CSV")->required();
  stats_cmd->add_option("--timings", stats_cfg.timings, "stage,millis CSV");

  CLI11_PARSE(app, argc, argv);

  finalize_engine_options(join_cfg, join_refs);
  finalize_engine_options(eval_cfg.engine, eval_refs);
  eval_cfg.synth.requested = eval_count->count() > 0;
  gen_cfg.synth.requested = gen_count->count() > 0;
  stats_cfg.synth.requested = stats_count->count() > 0;
  stats_cfg.q_set = stats_q->count() > 0;

  try {
    if (*join_cmd) return run_join(join_cfg);
    if (*eval_cmd) return run_eval(eval_cfg);
    if (*gen_cmd) return run_gen(gen_cfg);
    if (*stats_cmd) return run_stats(stats_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
