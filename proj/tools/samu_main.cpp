// samu: the caregiver-facing agent. Interactive terminals get the
// three-pane view; pipes get the line-mode REPL with the same semantics.

#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "samu/agent.hpp"
#include "samu/tui.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Samu: a developmental chatbot that predicts your next sentence"};

  samu::AgentConfig cfg;
  std::vector<std::string> linkage_files;
  bool plain = false;
  std::string reward = "strict";
  std::string name = "Samu";
  std::string soul = "samu.soul.txt";
  std::string data_dir = ".";
  std::uint64_t seed = 2025;

  app.add_option("--name", name, "robot name shown in the prompt");
  app.add_option("--soul", soul, "soul file path (loaded on start when present)");
  app.add_option("--data-dir", data_dir, "directory for conversation training files");
  app.add_option("--linkages", linkage_files,
                 "linkage interchange files for the sentence lexicon");
  app.add_option("--reward", reward, "reward policy: strict|partial")
      ->check(CLI::IsMember({"strict", "partial"}));
  app.add_option("--seed", seed, "deterministic seed for new perceptrons");
  app.add_flag("--plain", plain, "force line-mode even on a terminal");

  CLI11_PARSE(app, argc, argv);

  cfg.name = name;
  cfg.soul_path = soul;
  cfg.data_dir = data_dir;
  cfg.reward = reward == "partial" ? samu::RewardPolicy::partial
                                   : samu::RewardPolicy::strict;
  cfg.engine.seed = seed;
  cfg.engine.r_plus = samu::reward_max(cfg.reward) / (1.0 - cfg.engine.gamma);

  try {
    samu::AgentSession session(cfg);
    for (const std::string& path : linkage_files) session.load_lexicon(path);
    samu::install_signal_handlers();
    const bool interactive = !plain && isatty(STDIN_FILENO) && isatty(STDOUT_FILENO);
    return samu::run_tui(session, std::cin, std::cout, interactive);
  } catch (const std::exception& e) {
    std::cerr << "samu: " << e.what() << '\n';
    return 1;
  }
}
