#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "samu/brain.hpp"
#include "samu/corpus.hpp"

namespace samu {

enum class RewardPolicy { partial, strict };

RewardFn reward_fn(RewardPolicy policy);
double reward_max(RewardPolicy policy);

struct AgentConfig {
  std::string name = "Samu";
  std::filesystem::path soul_path = "samu.soul.txt";
  std::filesystem::path data_dir = ".";
  RewardPolicy reward = RewardPolicy::strict;
  std::size_t autosave_every = 1000;  // engine steps between automatic saves
  ImageryConfig imagery;
  EngineConfig engine;
};

struct AgentResponse {
  std::string text;
  bool quit = false;
  bool is_command = false;
};

struct SleepMetrics {
  struct Pass {
    double reward = 0.0;
    long good = 0;
    long bad = 0;
    double ratio = 0.0;
  };
  std::vector<Pass> passes;
};

/// One caregiver-facing session around one brain. Caregivers type plain
/// sentences; lines starting with "___" are commands and never reach the
/// engine or the conversation log. Every other line is logged before it is
/// processed, so the saved conversations replay as training files.
class AgentSession {
public:
  explicit AgentSession(AgentConfig cfg);

  /// Known-sentence lookup used to turn caregiver input into triplets.
  /// Loads a linkage interchange file; repeatable.
  void load_lexicon(const std::filesystem::path& linkage_file);
  std::size_t lexicon_size() const { return lexicon_.size(); }

  AgentResponse handle_line(const std::string& line);

  /// "<name>@<state>.<known-triplet-count>.<bogo*100 with one decimal>%"
  std::string format_prompt() const;

  /// Writes the soul atomically and flushes the conversation log to a
  /// timestamped training file under the data directory.
  void save();

  SleepMetrics sleep_train(const Corpus& corpus, int passes);

  /// Loads a training corpus for ___sleep: linkage files load directly,
  /// plain sentence files resolve their triplets through the lexicon.
  Corpus load_training_corpus(const std::filesystem::path& path) const;

  const AgentConfig& config() const { return cfg_; }
  const std::string& caregiver() const { return caregiver_; }
  const Brain& brain() const { return brain_; }
  Brain& brain() { return brain_; }
  const std::vector<std::string>& pending_conversation() const { return conversation_; }

private:
  std::string state_name() const;
  void feed_triplet(const Triplet& t, std::string& reply);

  AgentConfig cfg_;
  Brain brain_;
  std::string caregiver_ = "Caregiver";
  bool sleeping_ = false;
  bool awaiting_caregiver_ = false;
  std::vector<std::string> conversation_;
  std::map<std::string, std::vector<Triplet>> lexicon_;
  double last_bogo_ = 0.0;
  std::size_t steps_since_save_ = 0;
};

// Signal plumbing: handlers only set a flag; sessions consume it between
// steps. SIGINT, SIGTERM and SIGHUP are caught (SIGKILL cannot be).
void install_signal_handlers();
bool signal_pending();
void clear_signal();

}  // namespace samu
