#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "samu/lzw.hpp"

using namespace samu;

namespace {

Triplet sym(char c) { return Triplet(std::string(1, c), std::string(1, c), std::string(1, c)); }

// shape tree used to compare the dump parser against direct traversal
struct Shape {
  std::string label;  // "" for the root
  std::vector<Shape> kids;
  friend bool operator==(const Shape&, const Shape&) = default;
};

Shape shape_of(const LzwTree::Node& n) {
  Shape s;
  s.label = n.label ? n.label->words() : "";
  for (const auto& c : n.children) s.kids.push_back(shape_of(*c));
  return s;
}

// post-order dump parser, used only by these tests
Shape parse_dump(const std::string& dump) {
  std::vector<std::vector<Shape>> pending(64);
  std::istringstream in(dump);
  std::string line;
  Shape root;
  while (std::getline(in, line)) {
    std::size_t u = 0;
    while (u < line.size() && line[u] == '_') ++u;
    REQUIRE(u % 2 == 0);
    const int depth = static_cast<int>(u / 2);
    const std::string marker = std::to_string(depth) + "__ ";
    REQUIRE(line.compare(u, marker.size(), marker) == 0);
    Shape node;
    node.label = line.substr(u + marker.size());
    node.kids = std::move(pending[static_cast<std::size_t>(depth) + 1]);
    pending[static_cast<std::size_t>(depth) + 1].clear();
    if (depth == 0) {
      REQUIRE(node.label.empty());
      root = std::move(node);
    } else {
      pending[static_cast<std::size_t>(depth)].push_back(std::move(node));
    }
  }
  return root;
}

int max_depth_of(const LzwTree::Node& n) {
  int best = n.depth;
  for (const auto& c : n.children) best = std::max(best, max_depth_of(*c));
  return best;
}

void collect_phrases(const LzwTree::Node& n, std::vector<Triplet>& path,
                     std::set<std::vector<Triplet>>& out) {
  for (const auto& c : n.children) {
    path.push_back(*c->label);
    out.insert(path);
    collect_phrases(*c, path, out);
    path.pop_back();
  }
}

}  // namespace

TEST_SUITE_BEGIN("lzw");

TEST_CASE("first symbol inserts under the root and resets the cursor") {
  LzwTree tree;
  const LzwTree::Node* node = tree.build_step(sym('a'));
  CHECK(node == tree.root());
  CHECK(tree.cursor() == tree.root());
  REQUIRE(tree.root()->children.size() == 1);
  CHECK(*tree.root()->children[0]->label == sym('a'));
  CHECK(tree.root()->children[0]->depth == 1);
  CHECK(tree.node_count() == 1);
}

TEST_CASE("a,b alternation builds {root->a, root->b, a->b}") {
  LzwTree tree;
  std::vector<const LzwTree::Node*> trace;
  for (char c : {'a', 'b', 'a', 'b', 'a', 'b'}) trace.push_back(tree.build_step(sym(c)));

  // phrases a | b | ab | ab(open): three nodes
  CHECK(tree.node_count() == 3);
  CHECK(LzwTree::children_of(*tree.root()) == std::vector<Triplet>{sym('a'), sym('b')});
  const LzwTree::Node* a = tree.root()->find(sym('a'));
  REQUIRE(a != nullptr);
  CHECK(LzwTree::children_of(*a) == std::vector<Triplet>{sym('b')});
  const LzwTree::Node* b = tree.root()->find(sym('b'));
  REQUIRE(b != nullptr);
  CHECK(LzwTree::children_of(*b).empty());  // a leaf has no candidates

  // cursor walk: insert, insert, descend a, insert under a, descend a, descend b
  const LzwTree::Node* root = tree.root();
  CHECK(trace == std::vector<const LzwTree::Node*>{root, root, a, root, a, a->find(sym('b'))});
}

TEST_CASE("dump of the alternation tree is bit-exact") {
  LzwTree tree;
  for (char c : {'a', 'b', 'a', 'b', 'a', 'b'}) tree.build_step(sym(c));
  CHECK(tree.dump() ==
        "____2__ b b b\n"
        "__1__ a a a\n"
        "__1__ b b b\n"
        "0__ \n");
}

TEST_CASE("empty tree dumps as the bare root line") {
  LzwTree tree;
  CHECK(tree.dump() == "0__ \n");
}

TEST_CASE("genealogy stream reproduces the quoted depth-2 line") {
  const Triplet A("son", "was", "Isaac"), B("son", "was", "Jacob"),
      C("sons", "were", "and"), D("sons", "were", "Zerah"), E("son", "was", "Hezron"),
      F("son", "was", "Ram"), G("son", "was", "Amminadab");
  const std::vector<Triplet> stream{A, B, C, D, E, F, G, A, B, C, D, E, F, D, E, F, G, G};
  REQUIRE(stream.size() == 18);
  LzwTree tree;
  for (const Triplet& t : stream) tree.build_step(t);
  const std::string dump = tree.dump();
  // tokens are case-folded on construction
  CHECK(dump.find("____2__ son was hezron\n__1__ sons were zerah\n") != std::string::npos);
  CHECK(dump.substr(dump.size() - 5) == "0__ \n");
}

TEST_CASE("a depth-7 node dumps with 14 underscores") {
  LzwTree tree;
  for (int i = 0; i < 35; ++i) tree.build_step(sym('a'));
  CHECK(tree.dump().find("______________7__ a a a\n") != std::string::npos);
}

TEST_CASE("depth never exceeds the cap and growth stops there") {
  LzwTree tree;  // default cap 10
  for (int i = 0; i < 400; ++i) tree.build_step(sym('a'));
  CHECK(max_depth_of(*tree.root()) == 10);
  CHECK(tree.node_count() == 10);
  // the cursor can stand on the capped node but never descend past it
  for (int i = 0; i < 25; ++i) {
    tree.build_step(sym('a'));
    CHECK(tree.cursor()->depth <= 10);
  }
  CHECK(tree.node_count() == 10);
}

TEST_CASE("phrase-set oracle agrees on random streams") {
  std::mt19937_64 gen(2025);
  for (int run = 0; run < 20; ++run) {
    const int max_depth = run % 2 ? 3 : 10;
    LzwTree tree(max_depth);
    std::set<std::vector<Triplet>> dict;
    std::vector<Triplet> cur;
    const int alphabet = 2 + static_cast<int>(gen() % 5);
    for (int step = 0; step < 600; ++step) {
      const Triplet t = sym(static_cast<char>('a' + gen() % alphabet));
      std::vector<Triplet> ext = cur;
      ext.push_back(t);
      const bool hit = dict.count(ext) > 0;
      const LzwTree::Node* node = tree.build_step(t);
      if (hit) {
        cur = std::move(ext);
        REQUIRE(node != tree.root());
        CHECK(node->depth == static_cast<int>(cur.size()));
        CHECK(*node->label == t);
      } else {
        CHECK(node == tree.root());
        if (static_cast<int>(ext.size()) <= max_depth) {
          // the phrase rule: a previously seen phrase extended by one symbol
          CHECK((cur.empty() || dict.count(cur) > 0));
          dict.insert(std::move(ext));
        }
        cur.clear();
      }
    }
    // the tree's root-to-node paths are exactly the dictionary phrases
    std::set<std::vector<Triplet>> tree_phrases;
    std::vector<Triplet> path;
    collect_phrases(*tree.root(), path, tree_phrases);
    CHECK(tree_phrases == dict);
    CHECK(max_depth_of(*tree.root()) <= max_depth);
  }
}

TEST_CASE("dump then parse is the identity on tree shape") {
  std::mt19937_64 gen(99);
  for (int run = 0; run < 20; ++run) {
    LzwTree tree;
    const int alphabet = 2 + static_cast<int>(gen() % 4);
    for (int step = 0; step < 300; ++step)
      tree.build_step(sym(static_cast<char>('a' + gen() % alphabet)));
    CHECK(parse_dump(tree.dump()) == shape_of(*tree.root()));
  }
}

TEST_CASE("preorder/restore reproduce the tree and cursor") {
  std::mt19937_64 gen(7);
  LzwTree tree(6);
  for (int step = 0; step < 200; ++step)
    tree.build_step(sym(static_cast<char>('a' + gen() % 3)));
  const LzwTree copy = LzwTree::restore(6, tree.preorder(), tree.cursor_path());
  CHECK(copy.dump() == tree.dump());
  CHECK(copy.cursor()->depth == tree.cursor()->depth);
  CHECK(copy.cursor_path() == tree.cursor_path());
}

TEST_SUITE_END();
