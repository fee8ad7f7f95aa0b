#include "samu/imagery.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace samu {

StatementWindow::StatementWindow(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("window capacity must be positive");
}

void StatementWindow::push(const Triplet& t) {
  statements_.push_back(t);
  while (statements_.size() > capacity_) statements_.pop_front();
}

namespace {

// One statement per row; when there are more statements than rows the oldest
// ones fall off the top.
std::vector<std::string> layout(const StatementWindow& w, int rows, int cols,
                                Arrangement arrangement) {
  const auto& st = w.statements();
  const std::size_t take = std::min<std::size_t>(st.size(), static_cast<std::size_t>(rows));
  std::vector<std::string> lines;
  lines.reserve(take);
  for (std::size_t i = st.size() - take; i < st.size(); ++i) {
    std::string text = st[i].statement();
    if (text.size() > static_cast<std::size_t>(cols)) text.resize(cols);
    if (arrangement == Arrangement::pyramid) {
      const std::size_t pad = (static_cast<std::size_t>(cols) - text.size()) / 2;
      text.insert(0, pad, ' ');
    }
    lines.push_back(std::move(text));
  }
  return lines;
}

// 8x8 glyphs, bit 7 = leftmost pixel. Covers the characters statements are
// made of; anything else renders as a dotted placeholder.
constexpr unsigned char kGlyphLower[26][8] = {
    {0x00, 0x00, 0x70, 0x08, 0x78, 0x88, 0x78, 0x00},  // a
    {0x80, 0x80, 0xF0, 0x88, 0x88, 0x88, 0xF0, 0x00},  // b
    {0x00, 0x00, 0x70, 0x80, 0x80, 0x80, 0x70, 0x00},  // c
    {0x08, 0x08, 0x78, 0x88, 0x88, 0x88, 0x78, 0x00},  // d
    {0x00, 0x00, 0x70, 0x88, 0xF8, 0x80, 0x70, 0x00},  // e
    {0x30, 0x40, 0xF0, 0x40, 0x40, 0x40, 0x40, 0x00},  // f
    {0x00, 0x00, 0x78, 0x88, 0x88, 0x78, 0x08, 0x70},  // g
    {0x80, 0x80, 0xF0, 0x88, 0x88, 0x88, 0x88, 0x00},  // h
    {0x40, 0x00, 0xC0, 0x40, 0x40, 0x40, 0xE0, 0x00},  // i
    {0x20, 0x00, 0x20, 0x20, 0x20, 0x20, 0xA0, 0x40},  // j
    {0x80, 0x80, 0x90, 0xA0, 0xC0, 0xA0, 0x90, 0x00},  // k
    {0xC0, 0x40, 0x40, 0x40, 0x40, 0x40, 0xE0, 0x00},  // l
    {0x00, 0x00, 0xD0, 0xA8, 0xA8, 0xA8, 0xA8, 0x00},  // m
    {0x00, 0x00, 0xF0, 0x88, 0x88, 0x88, 0x88, 0x00},  // n
    {0x00, 0x00, 0x70, 0x88, 0x88, 0x88, 0x70, 0x00},  // o
    {0x00, 0x00, 0xF0, 0x88, 0x88, 0xF0, 0x80, 0x80},  // p
    {0x00, 0x00, 0x78, 0x88, 0x88, 0x78, 0x08, 0x08},  // q
    {0x00, 0x00, 0xB0, 0xC0, 0x80, 0x80, 0x80, 0x00},  // r
    {0x00, 0x00, 0x78, 0x80, 0x70, 0x08, 0xF0, 0x00},  // s
    {0x40, 0x40, 0xF0, 0x40, 0x40, 0x40, 0x30, 0x00},  // t
    {0x00, 0x00, 0x88, 0x88, 0x88, 0x88, 0x78, 0x00},  // u
    {0x00, 0x00, 0x88, 0x88, 0x88, 0x50, 0x20, 0x00},  // v
    {0x00, 0x00, 0xA8, 0xA8, 0xA8, 0xA8, 0x50, 0x00},  // w
    {0x00, 0x00, 0x88, 0x50, 0x20, 0x50, 0x88, 0x00},  // x
    {0x00, 0x00, 0x88, 0x88, 0x88, 0x78, 0x08, 0x70},  // y
    {0x00, 0x00, 0xF8, 0x10, 0x20, 0x40, 0xF8, 0x00},  // z
};

constexpr unsigned char kGlyphDigit[10][8] = {
    {0x70, 0x88, 0x98, 0xA8, 0xC8, 0x88, 0x70, 0x00},
    {0x20, 0x60, 0x20, 0x20, 0x20, 0x20, 0x70, 0x00},
    {0x70, 0x88, 0x08, 0x30, 0x40, 0x80, 0xF8, 0x00},
    {0x70, 0x88, 0x08, 0x30, 0x08, 0x88, 0x70, 0x00},
    {0x10, 0x30, 0x50, 0x90, 0xF8, 0x10, 0x10, 0x00},
    {0xF8, 0x80, 0xF0, 0x08, 0x08, 0x88, 0x70, 0x00},
    {0x30, 0x40, 0x80, 0xF0, 0x88, 0x88, 0x70, 0x00},
    {0xF8, 0x08, 0x10, 0x20, 0x40, 0x40, 0x40, 0x00},
    {0x70, 0x88, 0x88, 0x70, 0x88, 0x88, 0x70, 0x00},
    {0x70, 0x88, 0x88, 0x78, 0x08, 0x10, 0x60, 0x00},
};

constexpr unsigned char kGlyphDot[8] = {0x00, 0x00, 0x00, 0x00, 0x00, 0x60, 0x60, 0x00};
constexpr unsigned char kGlyphLParen[8] = {0x20, 0x40, 0x80, 0x80, 0x80, 0x40, 0x20, 0x00};
constexpr unsigned char kGlyphRParen[8] = {0x80, 0x40, 0x20, 0x20, 0x20, 0x40, 0x80, 0x00};
constexpr unsigned char kGlyphSemi[8] = {0x00, 0x60, 0x60, 0x00, 0x60, 0x20, 0x40, 0x00};
constexpr unsigned char kGlyphDash[8] = {0x00, 0x00, 0x00, 0xF0, 0x00, 0x00, 0x00, 0x00};
constexpr unsigned char kGlyphApos[8] = {0x40, 0x40, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00};
constexpr unsigned char kGlyphOther[8] = {0xA8, 0x00, 0x88, 0x00, 0x88, 0x00, 0xA8, 0x00};
constexpr unsigned char kGlyphBlank[8] = {0, 0, 0, 0, 0, 0, 0, 0};

const unsigned char* glyph_for(char ch) {
  const auto c = static_cast<unsigned char>(ch);
  if (c == ' ') return kGlyphBlank;
  const int low = std::tolower(c);
  if (low >= 'a' && low <= 'z') return kGlyphLower[low - 'a'];
  if (c >= '0' && c <= '9') return kGlyphDigit[c - '0'];
  switch (c) {
    case '.': return kGlyphDot;
    case '(': return kGlyphLParen;
    case ')': return kGlyphRParen;
    case ';': return kGlyphSemi;
    case '-': return kGlyphDash;
    case '\'': return kGlyphApos;
    default: return kGlyphOther;
  }
}

}  // namespace

MentalImage render_char(const StatementWindow& w, Arrangement arrangement) {
  MentalImage img{kCharRows, kCharCols,
                  std::vector<double>(static_cast<std::size_t>(kCharRows) * kCharCols, 0.0)};
  const auto lines = layout(w, kCharRows, kCharCols, arrangement);
  for (std::size_t r = 0; r < lines.size(); ++r)
    for (std::size_t c = 0; c < lines[r].size(); ++c)
      img.at(static_cast<int>(r), static_cast<int>(c)) =
          static_cast<unsigned char>(lines[r][c]) / 255.0;
  return img;
}

MentalImage render_pixel(const StatementWindow& w) {
  constexpr int kGlyph = 8;
  constexpr int kTextRows = kPixelSize / kGlyph;
  constexpr int kTextCols = kPixelSize / kGlyph;
  MentalImage img{kPixelSize, kPixelSize,
                  std::vector<double>(static_cast<std::size_t>(kPixelSize) * kPixelSize, 0.0)};
  const auto lines = layout(w, kTextRows, kTextCols, Arrangement::justified);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    for (std::size_t c = 0; c < lines[r].size(); ++c) {
      const unsigned char* glyph = glyph_for(lines[r][c]);
      for (int gy = 0; gy < kGlyph; ++gy)
        for (int gx = 0; gx < kGlyph; ++gx)
          if (glyph[gy] & (0x80u >> gx))
            img.at(static_cast<int>(r) * kGlyph + gy,
                   static_cast<int>(c) * kGlyph + gx) = 1.0;
    }
  }
  return img;
}

MentalImage ca_step(const MentalImage& img) {
  if (img.rows < 3 || img.cols < 3)
    throw std::invalid_argument("ca_step needs at least a 3x3 image");
  MentalImage out = img;
  for (int i = 1; i < img.rows - 1; ++i)
    for (int j = 1; j < img.cols - 1; ++j)
      out.at(i, j) = (img.at(i - 1, j) + img.at(i, j - 1) + img.at(i + 1, j) +
                      img.at(i, j + 1)) /
                     4.0;
  return out;
}

std::string char_dump(const MentalImage& img) {
  std::string out;
  out.reserve(static_cast<std::size_t>(img.rows) * (img.cols + 1));
  for (int r = 0; r < img.rows; ++r) {
    for (int c = 0; c < img.cols; ++c) {
      const long code = std::lround(img.at(r, c) * 255.0);
      out.push_back(code >= 32 && code <= 126 ? static_cast<char>(code) : ' ');
    }
    out.push_back('\n');
  }
  return out;
}

std::string pbm_dump(const MentalImage& img) {
  std::string out = "P1\n" + std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n";
  for (int r = 0; r < img.rows; ++r) {
    for (int c = 0; c < img.cols; ++c) {
      if (c) out.push_back(' ');
      out.push_back(img.at(r, c) > 0.5 ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace samu
