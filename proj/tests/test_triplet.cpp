#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "samu/corpus.hpp"
#include "samu/rng.hpp"
#include "samu/triplet.hpp"

using namespace samu;

namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() /
                 ("samu-triplet-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

Triplet random_triplet(std::mt19937_64& gen) {
  auto word = [&gen] {
    std::string w;
    const std::size_t len = 1 + gen() % 6;
    for (std::size_t i = 0; i < len; ++i) w.push_back('a' + static_cast<char>(gen() % 26));
    return w;
  };
  return Triplet(word(), word(), word());
}

}  // namespace

TEST_SUITE_BEGIN("triplet");

TEST_CASE("construction normalizes case and rejects empty members") {
  const Triplet t("Mouse", "Become", "LION");
  CHECK(t.s() == "mouse");
  CHECK(t.p() == "become");
  CHECK(t.o() == "lion");
  CHECK(t.statement() == "mouse.become(lion);");
  CHECK(t.words() == "mouse become lion");
  CHECK_THROWS_AS(Triplet("", "b", "c"), std::invalid_argument);
  CHECK_THROWS_AS(Triplet("a", "", "c"), std::invalid_argument);
  CHECK_THROWS_AS(Triplet("a", "b", ""), std::invalid_argument);
}

TEST_CASE("cmp counts positional matches") {
  const Triplet a("mouse", "become", "lion");
  CHECK(cmp(a, Triplet("mouse", "become", "lion")) == 1.0);
  CHECK(cmp(a, Triplet("cat", "become", "lion")) == doctest::Approx(2.0 / 3.0));
  CHECK(cmp(Triplet("a", "b", "c"), Triplet("x", "y", "z")) == 0.0);
  // same tokens in different positions do not match
  CHECK(cmp(Triplet("a", "b", "c"), Triplet("b", "c", "a")) == 0.0);
}

TEST_CASE("cmp is symmetric with cmp(t,t)=1") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const Triplet a = random_triplet(gen);
    const Triplet b = random_triplet(gen);
    CHECK(cmp(a, b) == cmp(b, a));
    CHECK(cmp(a, a) == 1.0);
  }
}

TEST_CASE("reward_partial spans [-1.5,1.5] in steps of one") {
  const Triplet t("mouse", "become", "lion");
  CHECK(reward_partial(t, t) == 1.5);
  CHECK(reward_partial(Triplet("a", "b", "c"), Triplet("x", "y", "z")) == -1.5);
  CHECK(reward_partial(t, Triplet("mouse", "x", "y")) == -0.5);
  CHECK(reward_partial(t, Triplet("mouse", "become", "y")) == 0.5);
}

TEST_CASE("reward_partial equals 3*cmp - 1.5 and is monotone in matches") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    const Triplet a = random_triplet(gen);
    const Triplet b = random_triplet(gen);
    CHECK(reward_partial(a, b) == doctest::Approx(3.0 * cmp(a, b) - 1.5).epsilon(1e-12));
  }
  // monotone: more matching members never lowers the reward
  const Triplet base("s", "p", "o");
  const double r0 = reward_partial(base, Triplet("x", "y", "z"));
  const double r1 = reward_partial(base, Triplet("s", "y", "z"));
  const double r2 = reward_partial(base, Triplet("s", "p", "z"));
  const double r3 = reward_partial(base, base);
  CHECK(r0 < r1);
  CHECK(r1 < r2);
  CHECK(r2 < r3);
}

TEST_CASE("reward_strict is all or nothing") {
  const Triplet t("i", "love", "samu");
  CHECK(reward_strict(t, t) == 1.0);
  CHECK(reward_strict(t, Triplet("i", "love", "you")) == -2.0);
  CHECK(reward_strict(t, Triplet("x", "y", "z")) == -2.0);
}

TEST_CASE("trial sums stay inside the paper bounds") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 50; ++trial) {
    double partial_sum = 0.0, strict_sum = 0.0;
    for (int i = 0; i < 7; ++i)
      partial_sum += reward_partial(random_triplet(gen), random_triplet(gen));
    for (int i = 0; i < 10; ++i)
      strict_sum += reward_strict(random_triplet(gen), random_triplet(gen));
    CHECK(partial_sum >= -10.5);
    CHECK(partial_sum <= 10.5);
    CHECK(strict_sum >= -20.0);
    CHECK(strict_sum <= 10.0);
  }
}

TEST_CASE("preprocess_raw applies the corpus substitutions") {
  CHECK(preprocess_raw("Mt 1:2. Abraham was the father of Isaac;") ==
        std::vector<std::string>{"Mt", "Abraham was the father of Isaac"});
  CHECK(preprocess_raw("") == std::vector<std::string>{});
  CHECK(preprocess_raw("a.b.c") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("preprocess_raw on a verse-numbered sample") {
  // three lines shaped like the BBE source, substitutions applied by hand
  const std::string raw =
      "1:2 The son of Abraham was Isaac; and the son of Isaac was Jacob.\n"
      "1:3 And the sons of Judah were Perez and Zerah by Tamar;\n"
      "1:4 And the son of Ram was Amminadab; and the son of Amminadab was Nahshon.\n";
  const std::vector<std::string> expected{
      "The son of Abraham was Isaac",
      "and the son of Isaac was Jacob",
      "And the sons of Judah were Perez and Zerah by Tamar",
      "And the son of Ram was Amminadab",
      "and the son of Amminadab was Nahshon",
  };
  CHECK(preprocess_raw(raw) == expected);
}

TEST_CASE("preprocess_raw is idempotent") {
  const std::string raw = "A 1. b: c; 22 d\ne.f";
  const auto once = preprocess_raw(raw);
  std::string joined;
  for (const auto& s : once) joined += s + "\n";
  CHECK(preprocess_raw(joined) == once);
}

TEST_CASE("triplet cache round trip") {
  const fs::path dir = temp_dir();
  const fs::path cache = dir / "t.triplets";
  const std::vector<Triplet> triplets{Triplet("i", "love", "samu"),
                                      Triplet("sky", "is", "blue")};
  write_triplet_cache(cache, triplets);
  CHECK(read_triplet_cache(cache) == triplets);
}

TEST_CASE("malformed cache line reports its line number") {
  const fs::path dir = temp_dir();
  const fs::path cache = dir / "bad.triplets";
  write_file(cache, "a b c\nhello there\n");
  CHECK_THROWS_WITH_AS(read_triplet_cache(cache),
                       doctest::Contains("bad.triplets:2"), std::runtime_error);
}

TEST_CASE("cache write rejects tokens with whitespace") {
  const fs::path dir = temp_dir();
  CHECK_THROWS_AS(write_triplet_cache(dir / "x.triplets",
                                      {Triplet("a b", "c", "d")}),
                  std::invalid_argument);
}

TEST_CASE("load_corpus reads the introductory linkage corpus") {
  const Corpus corpus = load_corpus(fs::path(SAMU_DATA_DIR) / "corpora" / "intro.lnk");
  CHECK(corpus.sentences.size() == 10);
  CHECK(corpus.sentences.front() == "Who are you");
  REQUIRE(corpus.triplets.size() == 10);
  CHECK(corpus.triplets[1] == Triplet("i", "am", "robot"));
  CHECK(corpus.by_sentence.size() == 10);
}

TEST_CASE("load_corpus on an empty file yields an empty corpus") {
  const fs::path dir = temp_dir();
  write_file(dir / "empty.txt", "");
  const Corpus corpus = load_corpus(dir / "empty.txt");
  CHECK(corpus.sentences.empty());
  CHECK(corpus.triplets.empty());
}

TEST_CASE("load_corpus prefers an existing cache and writes a missing one") {
  const fs::path dir = temp_dir();
  const fs::path lnk = fs::path(SAMU_DATA_DIR) / "corpora" / "story7.lnk";
  const fs::path cache = dir / "story7.triplets";

  const Corpus extracted = load_corpus(lnk, cache);
  CHECK(extracted.triplets.size() == 7);
  REQUIRE(fs::exists(cache));

  // overwrite the cache; the cached content must win over extraction
  write_triplet_cache(cache, {Triplet("only", "one", "line")});
  const Corpus cached = load_corpus(lnk, cache);
  CHECK(cached.triplets == std::vector<Triplet>{Triplet("only", "one", "line")});
  CHECK(cached.sentences.size() == 7);
}

TEST_CASE("loading the same linkage file twice is deterministic") {
  const fs::path lnk = fs::path(SAMU_DATA_DIR) / "corpora" / "story7.lnk";
  const Corpus a = load_corpus(lnk);
  const Corpus b = load_corpus(lnk);
  CHECK(a.sentences == b.sentences);
  CHECK(a.triplets == b.triplets);
}

TEST_CASE("plain sentence file without a triplet source fails loudly") {
  const fs::path dir = temp_dir();
  write_file(dir / "plain.txt", "The sky is blue\n");
  CHECK_THROWS_AS(load_corpus(dir / "plain.txt"), std::runtime_error);
  CHECK_THROWS_AS(load_corpus(dir / "missing.txt"), std::runtime_error);
}

TEST_SUITE_END();
