#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "samu/imagery.hpp"
#include "samu/lzw.hpp"
#include "samu/mlp.hpp"
#include "samu/soul.hpp"
#include "samu/triplet.hpp"

namespace samu {

enum class LearnMode { q_max, sarsa };
enum class Narrowing { off, lzw };
enum class Backend { nn, table };
enum class StateKeying { image, triplet };

/// Learning-rate schedule: constant, or c1/(c2+n) decaying in the visit count.
struct AlphaSchedule {
  enum class Kind { constant, decay };
  Kind kind = Kind::constant;
  double constant = 0.2;
  double c1 = 60.0;
  double c2 = 59.0;

  double operator()(std::uint64_t n) const {
    return kind == Kind::constant ? constant : c1 / (c2 + static_cast<double>(n));
  }
};

struct EngineConfig {
  int n_in = kCharRows * kCharCols;
  Backend backend = Backend::nn;
  LearnMode mode = LearnMode::q_max;
  Narrowing narrowing = Narrowing::off;
  StateKeying keying = StateKeying::image;
  double gamma = 0.9;
  AlphaSchedule alpha;
  int n_e = 5;          // optimistic try count
  double r_plus = 15.0; // optimistic value while under-tried
  int lzw_max_depth = 10;
  int hidden = 32;
  double mlp_rate = 0.01;
  bool mlp_bias = false;
  std::uint64_t seed = 2025;
};

using RewardFn = std::function<double(const Triplet& actual, const Triplet& predicted)>;

struct StepResult {
  Triplet action;                    // the predicted next triplet
  std::optional<double> reward;      // absent on the very first step
  std::optional<Triplet> compared;   // the previous prediction that was judged
  bool matched = false;              // exact equality of actual and predicted
  std::size_t n_candidates = 0;      // candidate set size of the selection
  double bogo100 = 0.0;              // 100 * bogo-relevance of the selection
};

/// Exploration: an under-tried action looks maximally attractive.
double explore_f(double q_value, std::uint64_t tries, int n_e, double r_plus);

/// (value[chosen] - mean) / (max - min); 0 when the set is degenerate.
double bogo_score(const std::vector<double>& values, std::size_t chosen);

/// The learner. One instance owns the per-action perceptrons (or the lookup
/// table), the state-action frequency table, the previous-step registers
/// and, when narrowing is on, the LZW tree. Each call to step() consumes
/// the freshly rendered state together with the triplet that produced it
/// and returns the prediction for the next one.
class Engine {
public:
  explicit Engine(EngineConfig cfg);

  StepResult step(const MentalImage& state, const Triplet& current, const RewardFn& reward);

  /// Pure argmax of the learned values over all known actions (no
  /// exploration bonus, no learning). `current` only feeds the state key.
  Triplet greedy(const MentalImage& state, const Triplet& current) const;

  double action_value(const Triplet& action, const MentalImage& state,
                      const Triplet& current) const;
  double bogo_relevance(const MentalImage& state, const Triplet& chosen,
                        const std::vector<Triplet>& candidates) const;

  const EngineConfig& config() const { return cfg_; }
  std::size_t known_actions() const { return known_.size(); }
  std::vector<Triplet> actions() const { return {known_.begin(), known_.end()}; }
  std::uint64_t steps() const { return steps_; }
  std::uint64_t frequency(std::uint64_t state_key, const Triplet& action) const;
  const LzwTree& lzw() const { return lzw_; }
  std::uint64_t state_key(const MentalImage& state, const Triplet& current) const;

  void set_event_sink(std::ostream* sink) { events_ = sink; }
  void set_trial(std::uint64_t trial) { trial_ = trial; }

  void export_soul(SoulFile& soul) const;
  static Engine from_soul(const SoulFile& soul);
  /// Reattaches the previous-step registers after a soul load. `state` must
  /// be the re-rendered image of the restored window, `current` the last
  /// triplet pushed into it, and action/reward the soul's PREV entry.
  void restore_prev(const MentalImage& state, const Triplet& current,
                    const Triplet& action, double reward);

private:
  struct Prev {
    std::vector<double> state;
    std::uint64_t key = 0;
    Triplet action;
    double reward = 0.0;
  };

  void register_action(const Triplet& t);
  std::uint64_t action_seed(const Triplet& t) const;
  double value_of(const Triplet& action, const std::vector<double>& state,
                  std::uint64_t key) const;
  void learn(const Triplet& action, const std::vector<double>& state, std::uint64_t key,
             double target, double predicted);
  std::vector<Triplet> candidate_set(const LzwTree::Node* node) const;
  std::size_t select(const std::vector<Triplet>& cand, const std::vector<double>& values,
                     std::uint64_t key) const;
  void log_step(const Triplet& actual, const StepResult& res) const;

  EngineConfig cfg_;
  std::set<Triplet> known_;
  std::map<Triplet, Perceptron> nets_;
  std::map<std::pair<std::uint64_t, Triplet>, double> table_;
  std::map<std::pair<std::uint64_t, Triplet>, std::uint64_t> counts_;
  std::optional<Prev> prev_;
  LzwTree lzw_;
  std::uint64_t steps_ = 0;
  std::uint64_t trial_ = 0;
  std::ostream* events_ = nullptr;
};

}  // namespace samu
