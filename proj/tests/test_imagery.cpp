#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "samu/imagery.hpp"

using namespace samu;

namespace {

bool all_zero(const MentalImage& img) {
  return std::all_of(img.cells.begin(), img.cells.end(), [](double v) { return v == 0.0; });
}

bool in_unit_range(const MentalImage& img) {
  return std::all_of(img.cells.begin(), img.cells.end(),
                     [](double v) { return v >= 0.0 && v <= 1.0; });
}

}  // namespace

TEST_SUITE_BEGIN("imagery");

TEST_CASE("window keeps the newest statements") {
  StatementWindow w(2);
  const Triplet a("a", "a", "a"), b("b", "b", "b"), c("c", "c", "c");
  w.push(a);
  CHECK(w.statements() == std::deque<Triplet>{a});
  w.push(b);
  w.push(c);
  CHECK(w.statements() == std::deque<Triplet>{b, c});
}

TEST_CASE("window of capacity 10 retains 10 distinct statements in order") {
  StatementWindow w(10);
  std::deque<Triplet> expected;
  for (int i = 0; i < 10; ++i) {
    const Triplet t(std::string(1, 'a' + i), "p", "o");
    w.push(t);
    expected.push_back(t);
  }
  CHECK(w.statements() == expected);
}

TEST_CASE("render_char: empty window is all zero") {
  StatementWindow w(10);
  const MentalImage img = render_char(w);
  CHECK(img.rows == 10);
  CHECK(img.cols == 80);
  CHECK(img.size() == 800);
  CHECK(all_zero(img));
}

TEST_CASE("render_char: one statement lands on row 0 with code/255 cells") {
  StatementWindow w(10);
  w.push(Triplet("I", "love", "Samu"));
  const MentalImage img = render_char(w);
  const std::string text = "i.love(samu);";
  for (std::size_t i = 0; i < text.size(); ++i)
    CHECK(img.at(0, static_cast<int>(i)) ==
          doctest::Approx(static_cast<unsigned char>(text[i]) / 255.0));
  CHECK(img.at(0, static_cast<int>(text.size())) == 0.0);
  CHECK(img.at(1, 0) == 0.0);
  CHECK(in_unit_range(img));
}

TEST_CASE("render_char is deterministic and pure") {
  StatementWindow w(10);
  w.push(Triplet("sky", "is", "blue"));
  w.push(Triplet("i", "love", "samu"));
  CHECK(render_char(w) == render_char(w));
  CHECK(render_char(w, Arrangement::pyramid) == render_char(w, Arrangement::pyramid));
}

TEST_CASE("pyramid arrangement centers each row") {
  StatementWindow w(10);
  w.push(Triplet("a", "b", "c"));  // "a.b(c);" is 7 chars, pad (80-7)/2 = 36
  const MentalImage img = render_char(w, Arrangement::pyramid);
  CHECK(img.at(0, 35) == 0.0);
  CHECK(img.at(0, 36) == doctest::Approx('a' / 255.0));
  const MentalImage left = render_char(w, Arrangement::justified);
  CHECK(left.at(0, 0) == doctest::Approx('a' / 255.0));
}

TEST_CASE("statements overflowing the rows are truncated oldest-first") {
  StatementWindow w(20);
  for (int i = 0; i < 15; ++i) w.push(Triplet("s" + std::to_string(i), "p", "o"));
  const MentalImage img = render_char(w);
  // row 0 holds statement 5, the oldest that still fits on 10 rows
  CHECK(img.at(0, 0) == doctest::Approx('s' / 255.0));
  CHECK(img.at(0, 1) == doctest::Approx('5' / 255.0));
}

TEST_CASE("render_pixel: empty window is all zero, cells binary") {
  StatementWindow w(10);
  CHECK(all_zero(render_pixel(w)));
  w.push(Triplet("i", "love", "samu"));
  const MentalImage img = render_pixel(w);
  CHECK(img.rows == 256);
  CHECK(img.cols == 256);
  CHECK(img.size() == 65536);
  bool any_lit = false;
  for (double v : img.cells) {
    CHECK((v == 0.0 || v == 1.0));
    any_lit |= v == 1.0;
  }
  CHECK(any_lit);
  CHECK(render_pixel(w) == img);
}

TEST_CASE("ca_step: fixed points and the hand-computed 3x3 case") {
  MentalImage zeros{3, 3, std::vector<double>(9, 0.0)};
  CHECK(ca_step(zeros) == zeros);
  MentalImage ones{3, 3, std::vector<double>(9, 1.0)};
  CHECK(ca_step(ones) == ones);

  // center row 0.4 0.8 0.2, others zero; the center becomes
  // (up + left + down + right)/4 = (0 + 0.4 + 0 + 0.2)/4 = 0.15
  MentalImage img{3, 3, {0.0, 0.0, 0.0, 0.4, 0.8, 0.2, 0.0, 0.0, 0.0}};
  const MentalImage out = ca_step(img);
  CHECK(out.at(1, 1) == doctest::Approx((0.4 + 0.2) / 4.0));
  // borders are copied
  CHECK(out.at(1, 0) == 0.4);
  CHECK(out.at(1, 2) == 0.2);
  CHECK(out.at(0, 1) == 0.0);
}

TEST_CASE("ca_step rejects images smaller than 3x3") {
  MentalImage tiny{2, 2, std::vector<double>(4, 0.0)};
  CHECK_THROWS_AS(ca_step(tiny), std::invalid_argument);
}

TEST_CASE("ca_step preserves range and dimensions") {
  StatementWindow w(10);
  w.push(Triplet("the", "sky", "blue"));
  w.push(Triplet("i", "love", "samu"));
  MentalImage img = render_char(w);
  for (int i = 0; i < 5; ++i) {
    img = ca_step(img);
    CHECK(img.rows == 10);
    CHECK(img.cols == 80);
    CHECK(in_unit_range(img));
  }
}

TEST_CASE("char_dump restores printable text") {
  StatementWindow w(10);
  w.push(Triplet("i", "love", "samu"));
  const std::string dump = char_dump(render_char(w));
  CHECK(dump.substr(0, 13) == "i.love(samu);");
}

TEST_CASE("pbm_dump emits a P1 header with the right size") {
  StatementWindow w(4);
  const std::string dump = pbm_dump(render_pixel(w));
  CHECK(dump.rfind("P1\n256 256\n", 0) == 0);
}

TEST_SUITE_END();
