#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "samu/triplet.hpp"

namespace samu {

/// The Q-learning state: a fixed-size grid of values in [0,1] that encodes
/// the recent statement list.
struct MentalImage {
  int rows = 0;
  int cols = 0;
  std::vector<double> cells;  // row-major

  double at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
  double& at(int r, int c) { return cells[static_cast<std::size_t>(r) * cols + c]; }
  std::size_t size() const { return cells.size(); }

  friend bool operator==(const MentalImage&, const MentalImage&) = default;
};

/// Rolling window over the triplet statements, most recent last.
class StatementWindow {
public:
  explicit StatementWindow(std::size_t capacity);

  void push(const Triplet& t);
  const std::deque<Triplet>& statements() const { return statements_; }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return statements_.empty(); }

private:
  std::size_t capacity_;
  std::deque<Triplet> statements_;
};

enum class Arrangement { justified, pyramid };

inline constexpr int kCharRows = 10;
inline constexpr int kCharCols = 80;
inline constexpr int kPixelSize = 256;

/// Character-console image, 10x80. Each statement "s.p(o);" occupies one
/// row (newest statements win when the window holds more than fit); cells
/// carry the character code divided by 255, blanks are 0.
MentalImage render_char(const StatementWindow& w,
                        Arrangement arrangement = Arrangement::justified);

/// Binary pixel image, 256x256: the statements drawn with a built-in 8x8
/// glyph table, lit pixels 1.0 and unlit 0.0.
MentalImage render_pixel(const StatementWindow& w);

/// One smoothing step: interior cells become the mean of their four
/// von-Neumann neighbours, borders are copied. Requires at least 3x3.
MentalImage ca_step(const MentalImage& img);

/// Literal character grid of a char-mode image (cell*255 rounded back to a
/// code point, non-printables as spaces).
std::string char_dump(const MentalImage& img);

/// PBM ("P1") raster of a pixel-mode image.
std::string pbm_dump(const MentalImage& img);

}  // namespace samu
