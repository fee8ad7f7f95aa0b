#include "samu/brain.hpp"

#include <stdexcept>

namespace samu {

namespace {

EngineConfig with_input_size(EngineConfig cfg, ImageryMode mode) {
  cfg.n_in = imagery_input_size(mode);
  return cfg;
}

}  // namespace

Brain::Brain(ImageryConfig imagery, EngineConfig engine)
    : imagery_(imagery),
      window_(imagery.window),
      engine_(with_input_size(engine, imagery.mode)) {
  if (imagery_.ca_steps < 0) throw std::invalid_argument("ca_steps must be nonnegative");
  image_ = render(window_);
}

MentalImage Brain::render(const StatementWindow& w) const {
  MentalImage img = imagery_.mode == ImageryMode::char_console
                        ? render_char(w, imagery_.arrangement)
                        : render_pixel(w);
  for (int i = 0; i < imagery_.ca_steps; ++i) img = ca_step(img);
  return img;
}

StepResult Brain::feed(const Triplet& t, const RewardFn& reward) {
  window_.push(t);
  image_ = render(window_);
  return engine_.step(image_, t, reward);
}

MentalImage Brain::render_history(const std::vector<Triplet>& history) const {
  StatementWindow w(imagery_.window);
  for (const Triplet& t : history) w.push(t);
  return render(w);
}

void Brain::save_soul(const std::filesystem::path& path) const {
  SoulFile soul;
  engine_.export_soul(soul);
  soul.params["imagery"] = imagery_.mode == ImageryMode::char_console ? "char" : "pixel";
  soul.params["arrangement"] =
      imagery_.arrangement == Arrangement::justified ? "justified" : "pyramid";
  soul.params["ca_steps"] = std::to_string(imagery_.ca_steps);
  soul.params["window"] = std::to_string(imagery_.window);
  soul.window.assign(window_.statements().begin(), window_.statements().end());
  samu::save_soul(path, soul);
}

Brain Brain::load_soul(const std::filesystem::path& path) {
  const SoulFile soul = samu::load_soul(path);
  ImageryConfig imagery;
  if (auto it = soul.params.find("imagery"); it != soul.params.end())
    imagery.mode = it->second == "pixel" ? ImageryMode::pixel : ImageryMode::char_console;
  if (auto it = soul.params.find("arrangement"); it != soul.params.end())
    imagery.arrangement =
        it->second == "pyramid" ? Arrangement::pyramid : Arrangement::justified;
  if (auto it = soul.params.find("ca_steps"); it != soul.params.end())
    imagery.ca_steps = std::stoi(it->second);
  if (auto it = soul.params.find("window"); it != soul.params.end())
    imagery.window = std::stoul(it->second);

  Engine engine = Engine::from_soul(soul);
  Brain brain(imagery, engine.config());
  brain.engine_ = std::move(engine);
  for (const Triplet& t : soul.window) brain.window_.push(t);
  brain.image_ = brain.render(brain.window_);
  if (soul.prev) {
    if (brain.window_.empty())
      throw std::runtime_error(path.string() + ": PREV entry without a WINDOW");
    brain.engine_.restore_prev(brain.image_, brain.window_.statements().back(),
                               soul.prev->action, soul.prev->reward);
  }
  return brain;
}

}  // namespace samu
