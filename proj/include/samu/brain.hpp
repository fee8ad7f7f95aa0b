#pragma once

#include <filesystem>

#include "samu/imagery.hpp"
#include "samu/qengine.hpp"

namespace samu {

enum class ImageryMode { char_console, pixel };

struct ImageryConfig {
  ImageryMode mode = ImageryMode::char_console;
  Arrangement arrangement = Arrangement::justified;
  int ca_steps = 1;
  std::size_t window = 10;
};

inline int imagery_input_size(ImageryMode mode) {
  return mode == ImageryMode::char_console ? kCharRows * kCharCols
                                           : kPixelSize * kPixelSize;
}

/// The perception loop around the engine: push the triplet into the
/// statement window, render the window into the mental image, run the
/// configured smoothing steps, then hand state and triplet to the learner.
class Brain {
public:
  Brain(ImageryConfig imagery, EngineConfig engine);

  StepResult feed(const Triplet& t, const RewardFn& reward);

  Engine& engine() { return engine_; }
  const Engine& engine() const { return engine_; }
  const ImageryConfig& imagery() const { return imagery_; }
  const StatementWindow& window() const { return window_; }
  const MentalImage& image() const { return image_; }

  /// The image the given statement history would produce (same pipeline,
  /// no engine involvement) — used to probe greedy policies.
  MentalImage render_history(const std::vector<Triplet>& history) const;

  void save_soul(const std::filesystem::path& path) const;
  static Brain load_soul(const std::filesystem::path& path);

private:
  MentalImage render(const StatementWindow& w) const;

  ImageryConfig imagery_;
  StatementWindow window_;
  Engine engine_;
  MentalImage image_;
};

}  // namespace samu
