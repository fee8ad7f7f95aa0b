#include "samu/harness.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "samu/soul.hpp"

namespace samu {

namespace {

[[noreturn]] void bad_key(const std::filesystem::path& path, int lineno,
                          const std::string& msg) {
  throw std::runtime_error(path.filename().string() + ":" + std::to_string(lineno) +
                           ": " + msg);
}

}  // namespace

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());
  ExperimentConfig cfg;
  const std::filesystem::path base = path.parent_path();
  auto resolve = [&base](const std::string& p) {
    const std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed;
    {
      std::istringstream is(line);
      std::getline(is, trimmed);
      while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
        trimmed.erase(trimmed.begin());
    }
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos || eq == 0)
      bad_key(path, lineno, "expected key=value, got '" + trimmed + "'");
    std::string key = trimmed.substr(0, eq);
    std::string value = trimmed.substr(eq + 1);
    while (!key.empty() && key.back() == ' ') key.pop_back();
    while (!value.empty() && value.front() == ' ') value.erase(value.begin());
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t'))
      value.pop_back();

    auto as_long = [&](long lo) {
      long v = 0;
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || p != value.data() + value.size() || v < lo)
        bad_key(path, lineno, "bad value for " + key + ": '" + value + "'");
      return v;
    };
    auto as_double = [&] {
      try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        bad_key(path, lineno, "bad value for " + key + ": '" + value + "'");
      }
    };

    if (key == "corpus")
      cfg.corpus = value == "synthetic" ? value : resolve(value);
    else if (key == "triplet_cache")
      cfg.triplet_cache = resolve(value);
    else if (key == "pretrain_corpus")
      cfg.pretrain_corpus = resolve(value);
    else if (key == "pretrain_passes")
      cfg.pretrain_passes = as_long(0);
    else if (key == "synthetic_sentences")
      cfg.synthetic_sentences = static_cast<int>(as_long(2));
    else if (key == "engine")
      cfg.engine = value == "table" ? Backend::table : Backend::nn;
    else if (key == "mode")
      cfg.mode = value == "sarsa" ? LearnMode::sarsa : LearnMode::q_max;
    else if (key == "narrowing")
      cfg.narrowing = value == "lzw" ? Narrowing::lzw : Narrowing::off;
    else if (key == "state_key")
      cfg.state_key = value == "triplet" ? StateKeying::triplet : StateKeying::image;
    else if (key == "reward")
      cfg.reward = value == "strict" ? RewardPolicy::strict : RewardPolicy::partial;
    else if (key == "imagery")
      cfg.imagery = value == "pixel" ? ImageryMode::pixel : ImageryMode::char_console;
    else if (key == "arrangement")
      cfg.arrangement = value == "pyramid" ? Arrangement::pyramid : Arrangement::justified;
    else if (key == "ca_steps")
      cfg.ca_steps = static_cast<int>(as_long(0));
    else if (key == "window")
      cfg.window = static_cast<std::size_t>(as_long(1));
    else if (key == "trials")
      cfg.trials = as_long(1);
    else if (key == "max_steps")
      cfg.max_steps = as_long(1);
    else if (key == "chunk")
      cfg.chunk = static_cast<int>(as_long(1));
    else if (key == "threshold")
      cfg.threshold = as_double();
    else if (key == "seed")
      cfg.seed = static_cast<std::uint64_t>(as_long(0));
    else if (key == "gamma")
      cfg.gamma = as_double();
    else if (key == "alpha")
      cfg.alpha.kind = value == "decay" ? AlphaSchedule::Kind::decay
                                        : AlphaSchedule::Kind::constant;
    else if (key == "alpha_const")
      cfg.alpha.constant = as_double();
    else if (key == "alpha_c1")
      cfg.alpha.c1 = as_double();
    else if (key == "alpha_c2")
      cfg.alpha.c2 = as_double();
    else if (key == "n_e")
      cfg.n_e = static_cast<int>(as_long(0));
    else if (key == "r_plus")
      cfg.r_plus = as_double();
    else if (key == "lzw_max_depth")
      cfg.lzw_max_depth = static_cast<int>(as_long(1));
    else if (key == "hidden")
      cfg.hidden = static_cast<int>(as_long(1));
    else if (key == "mlp_rate")
      cfg.mlp_rate = as_double();
    else if (key == "mlp_bias")
      cfg.mlp_bias = value == "1" || value == "true";
    else
      bad_key(path, lineno, "unknown key '" + key + "'");
  }
  validate(cfg);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.corpus.empty()) throw std::invalid_argument("config: corpus is required");
  if (cfg.gamma < 0.0 || cfg.gamma >= 1.0)
    throw std::invalid_argument("config: gamma must lie in [0,1)");
  if (cfg.threshold <= 0.0 || cfg.threshold > 1.0)
    throw std::invalid_argument("config: threshold must lie in (0,1]");
  if (cfg.mlp_rate <= 0.0) throw std::invalid_argument("config: mlp_rate must be positive");
  if (cfg.alpha.constant <= 0.0 || cfg.alpha.c1 <= 0.0 || cfg.alpha.c2 < 0.0)
    throw std::invalid_argument("config: alpha schedule values must be positive");
  if (cfg.r_plus && *cfg.r_plus <= 0.0)
    throw std::invalid_argument("config: r_plus must be positive");
  if (cfg.trials < 1 || cfg.max_steps < 1 || cfg.chunk < 1 || cfg.n_e < 0 ||
      cfg.hidden < 1 || cfg.ca_steps < 0 || cfg.window < 1 || cfg.lzw_max_depth < 1 ||
      cfg.synthetic_sentences < 2 || cfg.pretrain_passes < 0)
    throw std::invalid_argument("config: numeric field out of range");
}

EngineConfig engine_config(const ExperimentConfig& cfg) {
  EngineConfig e;
  e.backend = cfg.engine;
  e.mode = cfg.mode;
  e.narrowing = cfg.narrowing;
  e.keying = cfg.state_key;
  e.gamma = cfg.gamma;
  e.alpha = cfg.alpha;
  e.n_e = cfg.n_e;
  e.r_plus = cfg.r_plus ? *cfg.r_plus : reward_max(cfg.reward) / (1.0 - cfg.gamma);
  e.lzw_max_depth = cfg.lzw_max_depth;
  e.hidden = cfg.hidden;
  e.mlp_rate = cfg.mlp_rate;
  e.mlp_bias = cfg.mlp_bias;
  e.seed = cfg.seed;
  return e;
}

ImageryConfig imagery_config(const ExperimentConfig& cfg) {
  ImageryConfig i;
  i.mode = cfg.imagery;
  i.arrangement = cfg.arrangement;
  i.ca_steps = cfg.ca_steps;
  i.window = cfg.window;
  return i;
}

double good_bad_ratio(long good, long bad) {
  return (good + bad) ? static_cast<double>(good) / static_cast<double>(good + bad) : 0.0;
}

Corpus make_genealogy_corpus(int sentences) {
  if (sentences < 2) throw std::invalid_argument("synthetic corpus needs >= 2 sentences");
  auto name = [](int i) {
    std::string out;
    int v = i;
    do {
      out.insert(out.begin(), static_cast<char>('a' + v % 26));
      v /= 26;
    } while (v > 0);
    return "n" + out;
  };
  Corpus corpus;
  corpus.name = "synthetic-genealogy";
  for (int i = 0; i < sentences; ++i) {
    const std::string a = name(i);
    const std::string b = name(i + 1);
    corpus.sentences.push_back(a + " son-of " + b);
    corpus.by_sentence.push_back({Triplet(a, "son-of", b)});
    corpus.triplets.push_back(corpus.by_sentence.back().front());
  }
  return corpus;
}

Corpus load_experiment_corpus(const ExperimentConfig& cfg) {
  if (cfg.corpus == "synthetic") return make_genealogy_corpus(cfg.synthetic_sentences);
  std::optional<std::filesystem::path> cache;
  if (cfg.triplet_cache) cache = *cfg.triplet_cache;
  return load_corpus(cfg.corpus, cache);
}

namespace {

void maybe_dump(Brain& brain, const RunOptions& opts) {
  if (!opts.dump_sink) return;
  if (opts.dump_imagery) {
    const MentalImage& img = brain.image();
    *opts.dump_sink << (brain.imagery().mode == ImageryMode::char_console
                            ? char_dump(img)
                            : pbm_dump(img));
  }
  if (opts.dump_lzw) *opts.dump_sink << brain.engine().lzw().dump();
}

}  // namespace

Curve run_looped(Brain& brain, const Corpus& corpus, RewardPolicy reward, long trials,
                 const RunOptions& opts) {
  if (corpus.triplets.empty()) throw std::invalid_argument("corpus has no triplets");
  brain.engine().set_event_sink(opts.event_log);
  const RewardFn fn = reward_fn(reward);
  Curve curve;
  curve.reserve(static_cast<std::size_t>(trials));
  for (long trial = 1; trial <= trials; ++trial) {
    brain.engine().set_trial(static_cast<std::uint64_t>(trial));
    CurvePoint point;
    point.trial = trial;
    for (const Triplet& t : corpus.triplets) {
      const StepResult res = brain.feed(t, fn);
      if (res.reward) {
        point.reward += *res.reward;
        (res.matched ? point.good : point.bad) += 1;
      }
    }
    point.ratio = good_bad_ratio(point.good, point.bad);
    curve.push_back(point);
  }
  maybe_dump(brain, opts);
  brain.engine().set_event_sink(nullptr);
  return curve;
}

Curve run_experiment1(const ExperimentConfig& cfg, const RunOptions& opts) {
  const Corpus corpus = load_experiment_corpus(cfg);
  if (corpus.triplets.size() != 7)
    std::cerr << "warning: experiment 1 expects the 7-sentence story corpus, got "
              << corpus.triplets.size() << " triplets\n";
  Brain brain(imagery_config(cfg), engine_config(cfg));
  return run_looped(brain, corpus, cfg.reward, cfg.trials, opts);
}

Curve run_experiment2(const ExperimentConfig& cfg, const RunOptions& opts) {
  const Corpus corpus = load_experiment_corpus(cfg);
  if (corpus.triplets.size() != 10)
    std::cerr << "warning: experiment 2 expects the 10-sentence introductory corpus, got "
              << corpus.triplets.size() << " triplets\n";
  Brain brain(imagery_config(cfg), engine_config(cfg));
  if (cfg.pretrain_corpus && cfg.pretrain_passes > 0) {
    ExperimentConfig pre = cfg;
    pre.corpus = *cfg.pretrain_corpus;
    pre.triplet_cache.reset();
    const Corpus big = load_experiment_corpus(pre);
    run_looped(brain, big, cfg.reward, cfg.pretrain_passes);
  }
  return run_looped(brain, corpus, cfg.reward, cfg.trials, opts);
}

Curve run_incremental(const ExperimentConfig& cfg, const RunOptions& opts) {
  const Corpus corpus = load_experiment_corpus(cfg);
  if (corpus.triplets.empty()) throw std::invalid_argument("corpus has no triplets");
  Brain brain(imagery_config(cfg), engine_config(cfg));
  brain.engine().set_event_sink(opts.event_log);
  const RewardFn fn = reward_fn(cfg.reward);
  const std::size_t total_sentences =
      corpus.by_sentence.empty() ? corpus.triplets.size() : corpus.by_sentence.size();

  Curve curve;
  long steps = 0;
  long chunks = 1;
  long learned = 0;
  long pass_index = 0;
  while (steps < cfg.max_steps) {
    const std::size_t prefix_sentences =
        std::min<std::size_t>(static_cast<std::size_t>(chunks) * cfg.chunk, total_sentences);
    const std::vector<Triplet> prefix = corpus.prefix_triplets(prefix_sentences);
    if (prefix.empty()) throw std::invalid_argument("corpus prefix has no triplets");

    brain.engine().set_trial(static_cast<std::uint64_t>(++pass_index));
    CurvePoint point;
    point.trial = pass_index;
    for (const Triplet& t : prefix) {
      const StepResult res = brain.feed(t, fn);
      if (res.reward) {
        point.reward += *res.reward;
        (res.matched ? point.good : point.bad) += 1;
      }
    }
    steps += static_cast<long>(prefix.size());
    point.ratio = good_bad_ratio(point.good, point.bad);
    if (point.ratio > cfg.threshold) {
      learned = static_cast<long>(prefix_sentences);
      ++chunks;
      if (opts.dump_lzw && opts.dump_sink) *opts.dump_sink << brain.engine().lzw().dump();
    }
    point.learned = learned;
    curve.push_back(point);
    // the whole corpus is learned; further passes cannot move the count
    if (learned == static_cast<long>(total_sentences)) break;
  }
  maybe_dump(brain, opts);
  brain.engine().set_event_sink(nullptr);
  return curve;
}

void emit_csv(const Curve& curve, std::ostream& out) {
  out << "trial,reward,good,bad,ratio,learned\n";
  for (const CurvePoint& p : curve)
    out << p.trial << ',' << format_weight(p.reward) << ',' << p.good << ',' << p.bad
        << ',' << format_weight(p.ratio) << ',' << p.learned << '\n';
}

void emit_csv(const Curve& curve, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv: " + path.string());
  emit_csv(curve, out);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace samu
