#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "samu/triplet.hpp"

namespace samu {

/// Dictionary trie over the triplet stream. Each read triplet either walks
/// the cursor down an existing branch or grows the tree by one node and
/// sends the cursor back to the root, so the paths between consecutive root
/// resets are exactly the dictionary phrases. The children of the cursor
/// node are the narrowed candidate set for the next prediction.
class LzwTree {
public:
  struct Node {
    std::optional<Triplet> label;  // nullopt only for the root
    int depth = 0;
    std::vector<std::unique_ptr<Node>> children;  // insertion order

    Node* find(const Triplet& t) {
      for (auto& c : children)
        if (*c->label == t) return c.get();
      return nullptr;
    }
    const Node* find(const Triplet& t) const {
      return const_cast<Node*>(this)->find(t);
    }
  };

  explicit LzwTree(int max_depth = 10);

  LzwTree(LzwTree&&) noexcept = default;
  LzwTree& operator=(LzwTree&&) noexcept = default;

  /// Advances the tree by one triplet and returns the node the cursor ends
  /// on: the matched child on a hit; the root after an insertion or when a
  /// descent would exceed the depth cap.
  const Node* build_step(const Triplet& t);

  const Node* root() const { return root_.get(); }
  const Node* cursor() const { return cursor_; }
  int max_depth() const { return max_depth_; }
  std::size_t node_count() const;  // labelled nodes, root excluded

  static std::vector<Triplet> children_of(const Node& node);

  /// Post-order dump, children before their parent, siblings in insertion
  /// order. Each line is 2*depth underscores, the depth, "__", a space,
  /// then the node's "S P O"; the root line is just "0__ " and comes last.
  std::string dump() const;

  // persistence: pre-order rows plus the cursor's path from the root
  std::vector<std::pair<int, Triplet>> preorder() const;
  std::vector<Triplet> cursor_path() const;
  static LzwTree restore(int max_depth, const std::vector<std::pair<int, Triplet>>& rows,
                         const std::vector<Triplet>& cursor);

private:
  int max_depth_;
  std::unique_ptr<Node> root_;
  Node* cursor_;
};

}  // namespace samu
