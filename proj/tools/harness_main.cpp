// samu-harness: deterministic experiment runs emitting CSV learning curves.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "samu/harness.hpp"

namespace {

struct CommonArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out_csv;
  std::string event_log;
  bool dump_imagery = false;
  bool dump_lzw = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config, "experiment config file")->required();
  cmd->add_option("--seed", args.seed, "override the config seed");
  cmd->add_option("--out", args.out_csv, "CSV output path (default stdout)");
  cmd->add_option("--log", args.event_log, "write the per-step engine event log here");
  cmd->add_flag("--dump-imagery", args.dump_imagery, "dump the final mental image");
  cmd->add_flag("--dump-lzw", args.dump_lzw,
                "dump the LZW tree (per incremental step and at the end)");
}

int run(const CommonArgs& args,
        samu::Curve (*experiment)(const samu::ExperimentConfig&, const samu::RunOptions&)) {
  samu::ExperimentConfig cfg = samu::load_experiment_config(args.config);
  if (args.seed) cfg.seed = *args.seed;

  std::ofstream log_file;
  samu::RunOptions opts;
  if (!args.event_log.empty()) {
    log_file.open(args.event_log);
    if (!log_file) {
      std::cerr << "samu-harness: cannot write " << args.event_log << '\n';
      return 1;
    }
    opts.event_log = &log_file;
  }
  opts.dump_imagery = args.dump_imagery;
  opts.dump_lzw = args.dump_lzw;
  if (args.dump_imagery || args.dump_lzw) opts.dump_sink = &std::cerr;

  const samu::Curve curve = experiment(cfg, opts);
  if (args.out_csv.empty())
    samu::emit_csv(curve, std::cout);
  else
    samu::emit_csv(curve, std::filesystem::path(args.out_csv));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Samu experiment harness"};
  app.require_subcommand(1);

  CommonArgs exp1_args, exp2_args, inc_args;
  CLI::App* exp1 = app.add_subcommand("exp1", "7-sentence story, graded reward");
  add_common(exp1, exp1_args);
  CLI::App* exp2 = app.add_subcommand("exp2", "introductory corpus, strict reward");
  add_common(exp2, exp2_args);
  CLI::App* inc = app.add_subcommand("incremental", "growing-prefix curriculum");
  add_common(inc, inc_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (exp1->parsed()) return run(exp1_args, samu::run_experiment1);
    if (exp2->parsed()) return run(exp2_args, samu::run_experiment2);
    return run(inc_args, samu::run_incremental);
  } catch (const std::exception& e) {
    std::cerr << "samu-harness: " << e.what() << '\n';
    return 1;
  }
}
