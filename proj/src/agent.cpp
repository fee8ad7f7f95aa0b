#include "samu/agent.hpp"

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "samu/nlp.hpp"

namespace samu {

RewardFn reward_fn(RewardPolicy policy) {
  return policy == RewardPolicy::partial ? RewardFn(reward_partial)
                                         : RewardFn(reward_strict);
}

double reward_max(RewardPolicy policy) {
  return policy == RewardPolicy::partial ? 1.5 : 1.0;
}

namespace {

volatile std::sig_atomic_t g_signal = 0;

void on_signal(int) { g_signal = 1; }

std::string normalize_sentence(const std::string& sentence) {
  std::istringstream is(to_lower(sentence));
  std::string tok, out;
  while (is >> tok) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

std::string last_word(const std::string& line) {
  std::istringstream is(line);
  std::string tok, last;
  while (is >> tok) last = tok;
  return last;
}

}  // namespace

void install_signal_handlers() {
  // no SA_RESTART: a signal must interrupt the blocking terminal read so
  // the session can save before exiting
  struct sigaction sa{};
  sa.sa_handler = on_signal;
  sigemptyset(&sa.sa_mask);
  sa.sa_flags = 0;
  sigaction(SIGINT, &sa, nullptr);
  sigaction(SIGTERM, &sa, nullptr);
  sigaction(SIGHUP, &sa, nullptr);
}

bool signal_pending() { return g_signal != 0; }

void clear_signal() { g_signal = 0; }

AgentSession::AgentSession(AgentConfig cfg)
    : cfg_(std::move(cfg)),
      brain_(std::filesystem::exists(cfg_.soul_path)
                 ? Brain::load_soul(cfg_.soul_path)
                 : Brain(cfg_.imagery, cfg_.engine)) {}

void AgentSession::load_lexicon(const std::filesystem::path& linkage_file) {
  for (const ParsedSentence& rec : read_linkage_file(linkage_file)) {
    auto triplets = sentence_triplets(rec);
    if (!triplets.empty()) lexicon_[normalize_sentence(rec.sentence)] = std::move(triplets);
  }
}

std::string AgentSession::state_name() const { return sleeping_ ? "sleep" : "listen"; }

std::string AgentSession::format_prompt() const {
  char bogo[32];
  std::snprintf(bogo, sizeof(bogo), "%.1f", last_bogo_);
  return cfg_.name + "@" + state_name() + "." +
         std::to_string(brain_.engine().known_actions()) + "." + bogo + "%";
}

void AgentSession::feed_triplet(const Triplet& t, std::string& reply) {
  const StepResult res = brain_.feed(t, reward_fn(cfg_.reward));
  last_bogo_ = res.bogo100;
  reply = res.action.s() + " " + res.action.p() + " " + res.action.o();
  if (++steps_since_save_ >= cfg_.autosave_every) {
    steps_since_save_ = 0;
    save();
  }
}

AgentResponse AgentSession::handle_line(const std::string& line) {
  if (line.rfind("___", 0) == 0) {
    AgentResponse res;
    res.is_command = true;
    std::istringstream is(line);
    std::string cmd;
    is >> cmd;
    if (cmd == "___next") {
      std::string what;
      is >> what;
      if (what != "caregiver") {
        res.text = "error: unknown command '" + line + "'";
        return res;
      }
      awaiting_caregiver_ = true;
      res.text = "next caregiver, please introduce yourself";
    } else if (cmd == "___save") {
      save();
      res.text = "soul saved to " + cfg_.soul_path.string();
    } else if (cmd == "___sleep") {
      std::string path;
      long passes = 0;
      if (!(is >> path >> passes) || passes < 0) {
        res.text = "error: usage: ___sleep <corpus> <passes>";
        return res;
      }
      try {
        const Corpus corpus = load_training_corpus(path);
        const SleepMetrics metrics = sleep_train(corpus, static_cast<int>(passes));
        double total = 0.0;
        for (const auto& p : metrics.passes) total += p.reward;
        res.text = "slept " + std::to_string(metrics.passes.size()) + " passes over '" +
                   corpus.name + "', total reward " + std::to_string(total);
      } catch (const std::exception& e) {
        res.text = std::string("error: ") + e.what();
      }
    } else if (cmd == "___stat") {
      const Engine& engine = brain_.engine();
      std::ostringstream os;
      os << "caregiver=" << caregiver_ << " state=" << state_name()
         << " actions=" << engine.known_actions() << " steps=" << engine.steps()
         << " lexicon=" << lexicon_.size() << " lzw_nodes=" << engine.lzw().node_count();
      res.text = os.str();
    } else if (cmd == "___quit") {
      res.text = "bye";
      res.quit = true;
    } else {
      res.text = "error: unknown command '" + cmd + "'";
    }
    return res;
  }

  AgentResponse res;
  conversation_.push_back(line);
  const std::vector<std::string> sentences = preprocess_raw(line);
  if (awaiting_caregiver_) {
    if (const std::string name = last_word(line); !name.empty()) {
      caregiver_ = name;
      awaiting_caregiver_ = false;
    }
  }
  if (sentences.empty()) return res;  // blank input, nothing to think about

  std::string reply;
  bool fed = false;
  for (const std::string& sentence : sentences) {
    const auto it = lexicon_.find(normalize_sentence(sentence));
    if (it == lexicon_.end()) continue;
    for (const Triplet& t : it->second) {
      feed_triplet(t, reply);
      fed = true;
    }
  }
  res.text = fed ? reply : "(no parse)";
  return res;
}

void AgentSession::save() {
  brain_.save_soul(cfg_.soul_path);
  if (conversation_.empty()) return;
  std::filesystem::create_directories(cfg_.data_dir);
  char stamp[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm_buf{};
  localtime_r(&now, &tm_buf);
  std::strftime(stamp, sizeof(stamp), "%Y%m%d-%H%M%S", &tm_buf);
  std::filesystem::path path;
  for (int i = 0;; ++i) {
    const std::string name = "conversation-" + std::string(stamp) +
                             (i ? "-" + std::to_string(i) : "") + ".txt";
    path = cfg_.data_dir / name;
    if (!std::filesystem::exists(path)) break;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write training file: " + path.string());
  out << "# caregiver " << caregiver_ << " " << stamp << '\n';
  for (const std::string& line : conversation_) out << line << '\n';
  conversation_.clear();
}

SleepMetrics AgentSession::sleep_train(const Corpus& corpus, int passes) {
  if (corpus.triplets.empty()) throw std::invalid_argument("empty corpus");
  if (passes < 0) throw std::invalid_argument("passes must be nonnegative");
  SleepMetrics metrics;
  sleeping_ = true;
  for (int pass = 0; pass < passes; ++pass) {
    SleepMetrics::Pass p;
    for (const Triplet& t : corpus.triplets) {
      const StepResult res = brain_.feed(t, reward_fn(cfg_.reward));
      last_bogo_ = res.bogo100;
      if (res.reward) {
        p.reward += *res.reward;
        (res.matched ? p.good : p.bad) += 1;
      }
      ++steps_since_save_;
    }
    p.ratio = (p.good + p.bad) ? static_cast<double>(p.good) / (p.good + p.bad) : 0.0;
    metrics.passes.push_back(p);
    if (signal_pending()) break;
  }
  sleeping_ = false;
  if (steps_since_save_ >= cfg_.autosave_every) {
    steps_since_save_ = 0;
    save();
  }
  return metrics;
}

Corpus AgentSession::load_training_corpus(const std::filesystem::path& path) const {
  std::ifstream probe(path);
  if (!probe) throw std::runtime_error("cannot open corpus file: " + path.string());
  std::string first;
  std::getline(probe, first);
  probe.close();
  if (first.rfind("#S ", 0) == 0) return load_corpus(path);

  // plain sentence file: resolve triplets through the lexicon
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string filtered;
  {
    std::istringstream is(buf.str());
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line[0] == '#') continue;
      filtered += line;
      filtered += '\n';
    }
  }
  Corpus corpus;
  corpus.name = path.stem().string();
  corpus.sentences = preprocess_raw(filtered);
  for (const std::string& sentence : corpus.sentences) {
    const auto it = lexicon_.find(normalize_sentence(sentence));
    std::vector<Triplet> triplets =
        it == lexicon_.end() ? std::vector<Triplet>{} : it->second;
    corpus.triplets.insert(corpus.triplets.end(), triplets.begin(), triplets.end());
    corpus.by_sentence.push_back(std::move(triplets));
  }
  return corpus;
}

}  // namespace samu
