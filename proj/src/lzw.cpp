#include "samu/lzw.hpp"

#include <stdexcept>

namespace samu {

LzwTree::LzwTree(int max_depth)
    : max_depth_(max_depth), root_(std::make_unique<Node>()) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  cursor_ = root_.get();
}

const LzwTree::Node* LzwTree::build_step(const Triplet& t) {
  if (Node* child = cursor_->find(t)) {
    cursor_ = child;
    return cursor_;
  }
  if (cursor_->depth < max_depth_) {
    auto node = std::make_unique<Node>();
    node->label = t;
    node->depth = cursor_->depth + 1;
    cursor_->children.push_back(std::move(node));
  }
  cursor_ = root_.get();
  return cursor_;
}

namespace {

std::size_t count_below(const LzwTree::Node& n) {
  std::size_t total = n.children.size();
  for (const auto& c : n.children) total += count_below(*c);
  return total;
}

void dump_node(const LzwTree::Node& n, std::string& out) {
  for (const auto& c : n.children) dump_node(*c, out);
  out.append(static_cast<std::size_t>(2 * n.depth), '_');
  out += std::to_string(n.depth);
  out += "__ ";
  if (n.label) out += n.label->words();
  out += '\n';
}

void preorder_node(const LzwTree::Node& n, std::vector<std::pair<int, Triplet>>& rows) {
  if (n.label) rows.emplace_back(n.depth, *n.label);
  for (const auto& c : n.children) preorder_node(*c, rows);
}

}  // namespace

std::size_t LzwTree::node_count() const { return count_below(*root_); }

std::vector<Triplet> LzwTree::children_of(const Node& node) {
  std::vector<Triplet> out;
  out.reserve(node.children.size());
  for (const auto& c : node.children) out.push_back(*c->label);
  return out;
}

std::string LzwTree::dump() const {
  std::string out;
  dump_node(*root_, out);
  return out;
}

std::vector<std::pair<int, Triplet>> LzwTree::preorder() const {
  std::vector<std::pair<int, Triplet>> rows;
  preorder_node(*root_, rows);
  return rows;
}

std::vector<Triplet> LzwTree::cursor_path() const {
  // depth-first search for the cursor, recording the path taken
  std::vector<Triplet> path;
  struct Walker {
    const Node* target;
    std::vector<Triplet>* out;
    bool walk(const Node& n, std::vector<Triplet>& path) const {
      if (&n == target) {
        *out = path;
        return true;
      }
      for (const auto& c : n.children) {
        path.push_back(*c->label);
        if (walk(*c, path)) return true;
        path.pop_back();
      }
      return false;
    }
  };
  std::vector<Triplet> acc;
  Walker{cursor_, &path}.walk(*root_, acc);
  return path;
}

LzwTree LzwTree::restore(int max_depth, const std::vector<std::pair<int, Triplet>>& rows,
                         const std::vector<Triplet>& cursor) {
  LzwTree tree(max_depth);
  std::vector<Node*> path{tree.root_.get()};
  for (const auto& [depth, label] : rows) {
    if (depth < 1 || depth > static_cast<int>(path.size()) || depth > max_depth)
      throw std::invalid_argument("inconsistent depth in LZW rows");
    Node* parent = path[static_cast<std::size_t>(depth) - 1];
    auto node = std::make_unique<Node>();
    node->label = label;
    node->depth = depth;
    Node* raw = node.get();
    parent->children.push_back(std::move(node));
    path.resize(static_cast<std::size_t>(depth));
    path.push_back(raw);
  }
  Node* at = tree.root_.get();
  for (const Triplet& t : cursor) {
    at = at->find(t);
    if (!at) throw std::invalid_argument("LZW cursor path is not in the tree");
  }
  tree.cursor_ = at;
  return tree;
}

}  // namespace samu
