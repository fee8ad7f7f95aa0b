#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "samu/agent.hpp"
#include "samu/brain.hpp"
#include "samu/corpus.hpp"

namespace samu {

/// Flat key=value experiment description. Relative corpus paths resolve
/// against the config file's directory.
struct ExperimentConfig {
  std::string corpus;  // path, or "synthetic" for the generated chain corpus
  std::optional<std::string> triplet_cache;
  std::optional<std::string> pretrain_corpus;
  long pretrain_passes = 0;
  int synthetic_sentences = 210;

  Backend engine = Backend::nn;
  LearnMode mode = LearnMode::q_max;
  Narrowing narrowing = Narrowing::off;
  StateKeying state_key = StateKeying::image;
  RewardPolicy reward = RewardPolicy::partial;
  ImageryMode imagery = ImageryMode::char_console;
  Arrangement arrangement = Arrangement::justified;
  int ca_steps = 1;
  std::size_t window = 10;

  long trials = 200;
  long max_steps = 200000;
  int chunk = 7;
  double threshold = 0.95;
  std::uint64_t seed = 2025;

  double gamma = 0.9;
  AlphaSchedule alpha;
  int n_e = 5;
  std::optional<double> r_plus;  // default r_max / (1 - gamma)
  int lzw_max_depth = 10;
  int hidden = 32;
  double mlp_rate = 0.01;
  bool mlp_bias = false;
};

ExperimentConfig load_experiment_config(const std::filesystem::path& path);
void validate(const ExperimentConfig& cfg);

/// Resolved engine/imagery settings for a config.
EngineConfig engine_config(const ExperimentConfig& cfg);
ImageryConfig imagery_config(const ExperimentConfig& cfg);

struct CurvePoint {
  long trial = 0;
  double reward = 0.0;
  long good = 0;
  long bad = 0;
  double ratio = 0.0;
  long learned = 0;
};
using Curve = std::vector<CurvePoint>;

double good_bad_ratio(long good, long bad);

struct RunOptions {
  std::ostream* event_log = nullptr;   // engine per-step log
  std::ostream* dump_sink = nullptr;   // --dump-imagery / --dump-lzw output
  bool dump_imagery = false;
  bool dump_lzw = false;
};

/// Looped prediction over a fixed corpus; the shared core of the first two
/// experiments. One trial is one pass over the corpus triplets.
Curve run_looped(Brain& brain, const Corpus& corpus, RewardPolicy reward, long trials,
                 const RunOptions& opts = {});

Curve run_experiment1(const ExperimentConfig& cfg, const RunOptions& opts = {});
Curve run_experiment2(const ExperimentConfig& cfg, const RunOptions& opts = {});
Curve run_incremental(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Header "trial,reward,good,bad,ratio,learned", one row per point.
void emit_csv(const Curve& curve, std::ostream& out);
void emit_csv(const Curve& curve, const std::filesystem::path& path);

/// Deterministic chained corpus: sentence i is "<name_i> son-of <name_i+1>"
/// carrying the triplet (name_i, son-of, name_i+1).
Corpus make_genealogy_corpus(int sentences);

/// Resolves cfg.corpus (path or "synthetic") into a loaded corpus.
Corpus load_experiment_corpus(const ExperimentConfig& cfg);

}  // namespace samu
