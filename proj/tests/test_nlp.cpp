#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "samu/nlp.hpp"

using namespace samu;

namespace {

Linkage love_samu() {
  Linkage lk;
  lk.words = {"I", "love", "Samu"};
  lk.links = {{"Ss", 0, 1, "love"}, {"Os", 1, 2, "love"}};
  return lk;
}

// random but well-formed interchange records for the round-trip property
std::vector<ParsedSentence> random_records(std::mt19937_64& gen) {
  auto word = [&gen] {
    std::string w;
    const std::size_t len = 1 + gen() % 5;
    for (std::size_t i = 0; i < len; ++i) w.push_back('a' + static_cast<char>(gen() % 26));
    return w;
  };
  std::vector<ParsedSentence> records(1 + gen() % 4);
  for (ParsedSentence& rec : records) {
    const std::size_t nwords = 2 + gen() % 6;
    std::vector<std::string> words(nwords);
    for (auto& w : words) w = word();
    for (std::size_t i = 0; i < nwords; ++i) {
      if (i) rec.sentence += ' ';
      rec.sentence += words[i];
    }
    const std::size_t nlinkages = gen() % 3;
    for (std::size_t l = 0; l < nlinkages; ++l) {
      Linkage lk;
      lk.words = words;
      const std::size_t nlinks = gen() % 4;
      for (std::size_t k = 0; k < nlinks; ++k) {
        Link link;
        link.left = static_cast<int>(gen() % (nwords - 1));
        link.right = link.left + 1 + static_cast<int>(gen() % (nwords - 1 - link.left));
        link.label = (gen() % 2 ? "Ss" : "Os");
        link.link_word = word();
        lk.links.push_back(std::move(link));
      }
      rec.linkages.push_back(std::move(lk));
    }
  }
  return records;
}

}  // namespace

TEST_SUITE_BEGIN("nlp");

TEST_CASE("extracts (I, love, Samu) from its linkage") {
  const auto triplets = extract_triplets(love_samu());
  REQUIRE(triplets.size() == 1);
  CHECK(triplets[0] == Triplet("i", "love", "samu"));
}

TEST_CASE("no O link means no triplet") {
  Linkage lk = love_samu();
  lk.links.pop_back();
  CHECK(extract_triplets(lk).empty());
}

TEST_CASE("an O link with no matching predicate emits nothing") {
  Linkage lk;
  lk.words = {"a", "b", "c"};
  lk.links = {{"Os", 1, 2, "b"}};
  CHECK(extract_triplets(lk).empty());
}

TEST_CASE("alternate predicate path rewrites p before emitting") {
  // link word is a connector name, the right word of the S link is the verb
  Linkage lk;
  lk.words = {"This", "car", "is", "mine"};
  lk.links = {{"Ss", 1, 2, "Ss*b"}, {"Os", 2, 3, "is"}};
  const auto triplets = extract_triplets(lk);
  REQUIRE(triplets.size() == 1);
  CHECK(triplets[0] == Triplet("car", "is", "mine"));
}

TEST_CASE("squirrel sentence extracts per the hand trace") {
  Linkage lk;
  lk.words = {"A",  "rare",    "black", "squirrel", "has", "become", "a",
              "regular", "visitor", "to", "a", "suburban", "garden"};
  lk.links = {{"Ss", 3, 4, "become"}, {"Os", 5, 8, "become"}};
  const auto triplets = extract_triplets(lk);
  REQUIRE(triplets.size() == 1);
  CHECK(triplets[0] == Triplet("squirrel", "become", "visitor"));
}

TEST_CASE("duplicate emissions are kept within one linkage") {
  Linkage lk;
  lk.words = {"I", "love", "Samu"};
  lk.links = {{"Ss", 0, 1, "love"}, {"Os", 1, 2, "love"}, {"Os", 1, 2, "love"}};
  const auto triplets = extract_triplets(lk);
  CHECK(triplets.size() == 2);
  CHECK(triplets[0] == triplets[1]);
}

TEST_CASE("output length never exceeds the number of O links") {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 100; ++i) {
    for (const ParsedSentence& rec : random_records(gen)) {
      for (const Linkage& lk : rec.linkages) {
        std::size_t o_links = 0;
        for (const Link& link : lk.links) o_links += !link.label.empty() && link.label[0] == 'O';
        CHECK(extract_triplets(lk).size() <= o_links);
      }
    }
  }
}

TEST_CASE("emitted tokens come from the words or a link word") {
  std::mt19937_64 gen(5);
  auto appears = [](const Linkage& lk, const std::string& tok) {
    for (const std::string& w : lk.words)
      if (to_lower(w) == tok) return true;
    for (const Link& link : lk.links)
      if (to_lower(link.link_word) == tok) return true;
    return false;
  };
  for (int i = 0; i < 100; ++i) {
    for (const ParsedSentence& rec : random_records(gen)) {
      for (const Linkage& lk : rec.linkages) {
        for (const Triplet& t : extract_triplets(lk)) {
          CHECK(appears(lk, t.s()));
          CHECK(appears(lk, t.p()));
          CHECK(appears(lk, t.o()));
        }
      }
    }
  }
}

TEST_CASE("sentence_triplets deduplicates across linkages") {
  ParsedSentence rec;
  rec.sentence = "I love Samu";
  rec.linkages = {love_samu(), love_samu()};
  CHECK(sentence_triplets(rec).size() == 1);
}

TEST_CASE("read_linkages: empty stream yields nothing") {
  std::istringstream in("");
  CHECK(read_linkages(in, "empty").empty());
}

TEST_CASE("read_linkages: one record with one linkage of two links") {
  std::istringstream in(
      "#S I love Samu\n"
      "#L\n"
      "Ss 0 1 love\n"
      "Os 1 2 Samu\n"
      "\n");
  const auto records = read_linkages(in, "one");
  REQUIRE(records.size() == 1);
  CHECK(records[0].sentence == "I love Samu");
  REQUIRE(records[0].linkages.size() == 1);
  CHECK(records[0].linkages[0].words == std::vector<std::string>{"I", "love", "Samu"});
  REQUIRE(records[0].linkages[0].links.size() == 2);
  CHECK(records[0].linkages[0].links[1] == Link{"Os", 1, 2, "Samu"});
}

TEST_CASE("read_linkages reports syntax errors with line numbers") {
  {
    std::istringstream in("#S a b\n#L\nSs 0\n");
    CHECK_THROWS_WITH_AS(read_linkages(in, "f"), doctest::Contains("f:3"),
                         std::runtime_error);
  }
  {
    std::istringstream in("#S a b\n#L\nSs 1 0 x\n");
    CHECK_THROWS_WITH_AS(read_linkages(in, "f"), doctest::Contains("left < right"),
                         std::runtime_error);
  }
  {
    std::istringstream in("#S a b\n#L\nSs 0 9 x\n");
    CHECK_THROWS_WITH_AS(read_linkages(in, "f"), doctest::Contains("out of range"),
                         std::runtime_error);
  }
  {
    std::istringstream in("Ss 0 1 x\n");
    CHECK_THROWS_WITH_AS(read_linkages(in, "f"), doctest::Contains("f:1"),
                         std::runtime_error);
  }
}

TEST_CASE("write then read is the identity on random records") {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 50; ++i) {
    const auto records = random_records(gen);
    std::ostringstream out;
    write_linkages(out, records);
    std::istringstream in(out.str());
    CHECK(read_linkages(in, "roundtrip") == records);
  }
}

TEST_CASE("conllu adapter produces snippet-compatible links") {
  // "I love Samu": love is the root, I its nsubj, Samu its obj
  std::istringstream in(
      "# text = I love Samu\n"
      "1\tI\tI\tPRON\tPRP\t_\t2\tnsubj\t_\t_\n"
      "2\tlove\tlove\tVERB\tVBP\t_\t0\troot\t_\t_\n"
      "3\tSamu\tSamu\tPROPN\tNNP\t_\t2\tobj\t_\t_\n"
      "\n");
  const auto records = conllu_to_linkages(in, "conllu");
  REQUIRE(records.size() == 1);
  CHECK(records[0].sentence == "I love Samu");
  REQUIRE(records[0].linkages.size() == 1);
  const auto triplets = extract_triplets(records[0].linkages[0]);
  REQUIRE(triplets.size() == 1);
  CHECK(triplets[0] == Triplet("i", "love", "samu"));
}

TEST_SUITE_END();
