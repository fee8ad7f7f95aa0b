#include "samu/qengine.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "samu/rng.hpp"

namespace samu {

double explore_f(double q_value, std::uint64_t tries, int n_e, double r_plus) {
  return tries < static_cast<std::uint64_t>(n_e) ? r_plus : q_value;
}

double bogo_score(const std::vector<double>& values, std::size_t chosen) {
  if (values.size() < 2 || chosen >= values.size()) return 0.0;
  double lo = values[0], hi = values[0], sum = 0.0;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  if (hi == lo) return 0.0;
  const double mean = sum / static_cast<double>(values.size());
  return (values[chosen] - mean) / (hi - lo);
}

Engine::Engine(EngineConfig cfg) : cfg_(cfg), lzw_(cfg.lzw_max_depth) {
  if (cfg_.n_in < 1) throw std::invalid_argument("n_in must be positive");
  if (cfg_.gamma < 0.0 || cfg_.gamma >= 1.0)
    throw std::invalid_argument("gamma must lie in [0,1)");
  if (cfg_.n_e < 0) throw std::invalid_argument("n_e must be nonnegative");
}

std::uint64_t Engine::action_seed(const Triplet& t) const {
  std::uint64_t h = fnv1a(&cfg_.seed, sizeof(cfg_.seed));
  h = fnv1a(t.s(), h);
  h = fnv1a("\x1f", h);
  h = fnv1a(t.p(), h);
  h = fnv1a("\x1f", h);
  h = fnv1a(t.o(), h);
  return h;
}

std::uint64_t Engine::state_key(const MentalImage& state, const Triplet& current) const {
  if (cfg_.keying == StateKeying::triplet) {
    std::uint64_t h = fnv1a(current.s());
    h = fnv1a("\x1f", h);
    h = fnv1a(current.p(), h);
    h = fnv1a("\x1f", h);
    h = fnv1a(current.o(), h);
    return h;
  }
  return fnv1a(state.cells.data(), state.cells.size() * sizeof(double));
}

void Engine::register_action(const Triplet& t) {
  if (!known_.insert(t).second) return;
  if (cfg_.backend == Backend::nn)
    nets_.emplace(t, Perceptron(cfg_.n_in, cfg_.hidden, action_seed(t), cfg_.mlp_rate,
                                cfg_.mlp_bias));
}

double Engine::value_of(const Triplet& action, const std::vector<double>& state,
                        std::uint64_t key) const {
  if (cfg_.backend == Backend::nn) return nets_.at(action).forward(state);
  const auto it = table_.find({key, action});
  return it == table_.end() ? 0.0 : it->second;
}

void Engine::learn(const Triplet& action, const std::vector<double>& state,
                   std::uint64_t key, double target, double predicted) {
  if (cfg_.backend == Backend::nn)
    nets_.at(action).train_to_target(state, target, predicted);
  else
    table_[{key, action}] = target;
}

std::vector<Triplet> Engine::candidate_set(const LzwTree::Node* node) const {
  if (cfg_.narrowing == Narrowing::lzw && node) {
    auto narrowed = LzwTree::children_of(*node);
    // keep only candidates the engine already knows; unseen children cannot
    // occur (the tree is fed from the same stream) but stay defensive about
    // restored trees
    std::erase_if(narrowed, [&](const Triplet& t) { return !known_.count(t); });
    if (!narrowed.empty()) return narrowed;
  }
  return {known_.begin(), known_.end()};
}

std::uint64_t Engine::frequency(std::uint64_t key, const Triplet& action) const {
  const auto it = counts_.find({key, action});
  return it == counts_.end() ? 0 : it->second;
}

std::size_t Engine::select(const std::vector<Triplet>& cand,
                           const std::vector<double>& values, std::uint64_t key) const {
  std::size_t best = 0;
  double best_f = 0.0;
  std::uint64_t best_n = 0;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const std::uint64_t n = frequency(key, cand[i]);
    const double f = explore_f(values[i], n, cfg_.n_e, cfg_.r_plus);
    bool wins;
    if (i == 0) {
      wins = true;
    } else if (f != best_f) {
      wins = f > best_f;
    } else if (n != best_n) {
      // ties go to the action tried least, then to triplet order
      wins = n < best_n;
    } else {
      wins = cand[i] < cand[best];
    }
    if (wins) {
      best = i;
      best_f = f;
      best_n = n;
    }
  }
  return best;
}

StepResult Engine::step(const MentalImage& state, const Triplet& current,
                        const RewardFn& reward) {
  if (static_cast<int>(state.cells.size()) != cfg_.n_in)
    throw std::invalid_argument("state size does not match the configured input size");

  StepResult res{current, {}, {}, false, 0, 0.0};
  std::optional<double> r_now;
  if (prev_) {
    r_now = reward(current, prev_->action);
    res.reward = r_now;
    res.compared = prev_->action;
    res.matched = current == prev_->action;
  }

  register_action(current);
  const LzwTree::Node* node = nullptr;
  if (cfg_.narrowing == Narrowing::lzw) node = lzw_.build_step(current);
  const std::uint64_t key = state_key(state, current);

  if (prev_) {
    std::uint64_t& n = counts_[{prev_->key, prev_->action}];
    n += 1;
    const double step_size = cfg_.alpha(n);
    const double nn = value_of(prev_->action, prev_->state, prev_->key);

    const std::vector<Triplet> cand = candidate_set(node);
    std::vector<double> values(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i)
      values[i] = value_of(cand[i], state.cells, key);

    std::size_t pick;
    if (cfg_.mode == LearnMode::q_max) {
      double best = values[0];
      for (double v : values) best = std::max(best, v);
      const double q = nn + step_size * (*r_now + cfg_.gamma * best - nn);
      learn(prev_->action, prev_->state, prev_->key, q, nn);
      // only the trained action's value can have changed
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (cand[i] == prev_->action) values[i] = value_of(cand[i], state.cells, key);
      pick = select(cand, values, key);
    } else {
      pick = select(cand, values, key);
      const double q = nn + step_size * (*r_now + cfg_.gamma * values[pick] - nn);
      learn(prev_->action, prev_->state, prev_->key, q, nn);
    }
    res.action = cand[pick];
    res.n_candidates = cand.size();
    res.bogo100 = 100.0 * bogo_score(values, pick);
  }

  prev_ = Prev{state.cells, key, res.action, r_now.value_or(0.0)};
  ++steps_;
  log_step(current, res);
  return res;
}

Triplet Engine::greedy(const MentalImage& state, const Triplet& current) const {
  if (known_.empty()) throw std::logic_error("greedy() called with no known actions");
  const std::uint64_t key = state_key(state, current);
  const std::vector<Triplet> cand(known_.begin(), known_.end());
  std::optional<std::size_t> best;
  double best_v = 0.0;
  std::uint64_t best_n = 0;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const double v = value_of(cand[i], state.cells, key);
    const std::uint64_t n = frequency(key, cand[i]);
    if (!best || v > best_v || (v == best_v && n < best_n)) {
      best = i;
      best_v = v;
      best_n = n;
    }
  }
  return cand[*best];
}

double Engine::action_value(const Triplet& action, const MentalImage& state,
                            const Triplet& current) const {
  if (!known_.count(action)) throw std::invalid_argument("unknown action: " + action.words());
  return value_of(action, state.cells, state_key(state, current));
}

double Engine::bogo_relevance(const MentalImage& state, const Triplet& chosen,
                              const std::vector<Triplet>& candidates) const {
  const std::uint64_t key = state_key(state, chosen);
  std::vector<double> values(candidates.size());
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!known_.count(candidates[i]))
      throw std::invalid_argument("unknown action: " + candidates[i].words());
    values[i] = value_of(candidates[i], state.cells, key);
    if (candidates[i] == chosen) at = i;
  }
  if (!at) throw std::invalid_argument("chosen action is not among the candidates");
  return bogo_score(values, *at);
}

namespace {

std::string u64_str(std::uint64_t v) { return std::to_string(v); }

std::uint64_t parse_u64(const std::map<std::string, std::string>& params,
                        const std::string& key, std::uint64_t fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : std::stoull(it->second);
}

double parse_d(const std::map<std::string, std::string>& params, const std::string& key,
               double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : std::stod(it->second);
}

std::string parse_s(const std::map<std::string, std::string>& params,
                    const std::string& key, const std::string& fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

void Engine::export_soul(SoulFile& soul) const {
  auto& p = soul.params;
  p["backend"] = cfg_.backend == Backend::nn ? "nn" : "table";
  p["mode"] = cfg_.mode == LearnMode::q_max ? "q_max" : "sarsa";
  p["narrowing"] = cfg_.narrowing == Narrowing::off ? "off" : "lzw";
  p["keying"] = cfg_.keying == StateKeying::image ? "image" : "triplet";
  p["gamma"] = format_weight(cfg_.gamma);
  p["alpha"] = cfg_.alpha.kind == AlphaSchedule::Kind::constant ? "const" : "decay";
  p["alpha_const"] = format_weight(cfg_.alpha.constant);
  p["alpha_c1"] = format_weight(cfg_.alpha.c1);
  p["alpha_c2"] = format_weight(cfg_.alpha.c2);
  p["n_e"] = u64_str(static_cast<std::uint64_t>(cfg_.n_e));
  p["r_plus"] = format_weight(cfg_.r_plus);
  p["lzw_max_depth"] = u64_str(static_cast<std::uint64_t>(cfg_.lzw_max_depth));
  p["n_in"] = u64_str(static_cast<std::uint64_t>(cfg_.n_in));
  p["hidden"] = u64_str(static_cast<std::uint64_t>(cfg_.hidden));
  p["mlp_rate"] = format_weight(cfg_.mlp_rate);
  p["mlp_bias"] = cfg_.mlp_bias ? "1" : "0";
  p["seed"] = u64_str(cfg_.seed);

  for (const auto& [action, net] : nets_) {
    SoulFile::ActionNet entry{action, net.n_in(), net.n_hidden(), {}, {}, {}, 0.0};
    entry.w_ih.assign(net.input_weights().begin(), net.input_weights().end());
    entry.w_ho.assign(net.output_weights().begin(), net.output_weights().end());
    entry.b_h.assign(net.hidden_bias().begin(), net.hidden_bias().end());
    entry.b_o = net.output_bias();
    soul.actions.push_back(std::move(entry));
  }
  if (cfg_.backend == Backend::table) {
    // the table backend has no weights; remember the action set as
    // zero-count FREQ rows so it survives the round trip
    for (const auto& [key, count] : counts_)
      soul.freq.push_back({key.first, key.second, count});
    for (const Triplet& t : known_) soul.freq.push_back({0, t, 0});
    for (const auto& [key, value] : table_)
      soul.table.push_back({key.first, key.second, value});
  } else {
    for (const auto& [key, count] : counts_)
      soul.freq.push_back({key.first, key.second, count});
  }
  if (prev_) soul.prev = SoulFile::PrevEntry{prev_->action, prev_->reward};
  if (cfg_.narrowing == Narrowing::lzw) {
    soul.lzw = lzw_.preorder();
    soul.lzw_cursor = lzw_.cursor_path();
  }
}

Engine Engine::from_soul(const SoulFile& soul) {
  EngineConfig cfg;
  cfg.backend = parse_s(soul.params, "backend", "nn") == "table" ? Backend::table
                                                                 : Backend::nn;
  cfg.mode = parse_s(soul.params, "mode", "q_max") == "sarsa" ? LearnMode::sarsa
                                                              : LearnMode::q_max;
  cfg.narrowing = parse_s(soul.params, "narrowing", "off") == "lzw" ? Narrowing::lzw
                                                                    : Narrowing::off;
  cfg.keying = parse_s(soul.params, "keying", "image") == "triplet"
                   ? StateKeying::triplet
                   : StateKeying::image;
  cfg.gamma = parse_d(soul.params, "gamma", cfg.gamma);
  cfg.alpha.kind = parse_s(soul.params, "alpha", "const") == "decay"
                       ? AlphaSchedule::Kind::decay
                       : AlphaSchedule::Kind::constant;
  cfg.alpha.constant = parse_d(soul.params, "alpha_const", cfg.alpha.constant);
  cfg.alpha.c1 = parse_d(soul.params, "alpha_c1", cfg.alpha.c1);
  cfg.alpha.c2 = parse_d(soul.params, "alpha_c2", cfg.alpha.c2);
  cfg.n_e = static_cast<int>(parse_u64(soul.params, "n_e", 5));
  cfg.r_plus = parse_d(soul.params, "r_plus", cfg.r_plus);
  cfg.lzw_max_depth = static_cast<int>(parse_u64(soul.params, "lzw_max_depth", 10));
  cfg.n_in = static_cast<int>(parse_u64(soul.params, "n_in", cfg.n_in));
  cfg.hidden = static_cast<int>(parse_u64(soul.params, "hidden", cfg.hidden));
  cfg.mlp_rate = parse_d(soul.params, "mlp_rate", cfg.mlp_rate);
  cfg.mlp_bias = parse_s(soul.params, "mlp_bias", "0") == "1";
  cfg.seed = parse_u64(soul.params, "seed", cfg.seed);

  Engine engine(cfg);
  for (const auto& entry : soul.actions) {
    if (entry.n_in != cfg.n_in)
      throw std::runtime_error("soul action '" + entry.action.words() +
                               "' does not match the configured input size");
    engine.known_.insert(entry.action);
    engine.nets_.emplace(entry.action,
                         Perceptron::from_weights(entry.n_in, entry.n_hidden, cfg.mlp_rate,
                                                  entry.w_ih, entry.w_ho, entry.b_h,
                                                  entry.b_o));
  }
  for (const auto& e : soul.freq) {
    engine.known_.insert(e.action);
    if (e.count) engine.counts_[{e.state, e.action}] = e.count;
  }
  for (const auto& e : soul.table) {
    engine.known_.insert(e.action);
    engine.table_[{e.state, e.action}] = e.value;
  }
  if (cfg.backend == Backend::nn)
    for (const Triplet& t : engine.known_)
      if (!engine.nets_.count(t))
        throw std::runtime_error("soul names action '" + t.words() +
                                 "' without an ACTION block");
  if (!soul.lzw.empty() || !soul.lzw_cursor.empty())
    engine.lzw_ = LzwTree::restore(cfg.lzw_max_depth, soul.lzw, soul.lzw_cursor);
  return engine;
}

void Engine::restore_prev(const MentalImage& state, const Triplet& current,
                          const Triplet& action, double reward) {
  if (static_cast<int>(state.cells.size()) != cfg_.n_in)
    throw std::invalid_argument("state size does not match the configured input size");
  if (!known_.count(action))
    throw std::invalid_argument("previous action is not a known action: " + action.words());
  prev_ = Prev{state.cells, state_key(state, current), action, reward};
}

void Engine::log_step(const Triplet& actual, const StepResult& res) const {
  if (!events_) return;
  char bogo[32];
  std::snprintf(bogo, sizeof(bogo), "%.1f", res.bogo100);
  *events_ << trial_ << ' ' << actual.words() << ' '
           << (res.compared ? res.compared->words() : "- - -") << ' '
           << (res.reward ? format_weight(*res.reward) : "0") << ' ' << res.n_candidates
           << ' ' << bogo << '\n';
}

}  // namespace samu
