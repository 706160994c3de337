#include "twobridge/btree.hpp"

#include <algorithm>
#include <sstream>
#include <stack>

#include "twobridge/errors.hpp"

namespace twobridge {

namespace {

const Rational kOne(1);

std::unique_ptr<TreeNode> make_child(const TreeNode& parent, std::int64_t label,
                                     TreeNode::Kind kind, Rational remainder) {
  auto node = std::make_unique<TreeNode>();
  node->kind = kind;
  node->remainder = std::move(remainder);
  node->path = parent.path;
  node->path.push_back(label);
  return node;
}

}  // namespace

std::unique_ptr<TreeNode> build_tree(const Rational& r) {
  if (r <= Rational(0) || r >= kOne)
    throw OutOfRange("expansion tree requires 0 < p/q < 1, got " + r.str());

  auto root = std::make_unique<TreeNode>();
  root->remainder = r;

  std::stack<TreeNode*> pending;

  // Root edges carry the integral component: floor(r) = 0 and ceil(r) = 1.
  for (std::int64_t label : {std::int64_t{0}, std::int64_t{1}}) {
    root->edges.push_back(
        {label, make_child(*root, label, TreeNode::Kind::internal,
                           r - Rational(label))});
    pending.push(root->edges.back().child.get());
  }

  while (!pending.empty()) {
    TreeNode* node = pending.top();
    pending.pop();

    if (node->remainder.is_zero()) {  // expansion complete
      node->kind = TreeNode::Kind::leaf;
      continue;
    }
    if (!(node->remainder < kOne && -kOne < node->remainder))
      throw SubexpansionOutOfBounds("remainder " + node->remainder.str() +
                                    " at " + node->cf().str());

    Rational inv = node->remainder.reciprocal();
    if (inv.is_integer()) {
      // Single edge; |1/r| > 1 rules out a +-1 label here.
      node->edges.push_back({inv.num(),
                             make_child(*node, inv.num(), TreeNode::Kind::leaf,
                                        Rational(0))});
      continue;
    }
    for (std::int64_t label : {inv.floor(), inv.ceil()}) {
      if (label == 1 || label == -1) {
        node->edges.push_back(
            {label, make_child(*node, label, TreeNode::Kind::dead, Rational(0))});
        continue;
      }
      node->edges.push_back(
          {label, make_child(*node, label, TreeNode::Kind::internal,
                             inv - Rational(label))});
      pending.push(node->edges.back().child.get());
    }
  }
  return root;
}

std::vector<ContinuedFraction> leaves(const TreeNode& root) {
  std::vector<ContinuedFraction> out;
  std::stack<const TreeNode*> todo;
  todo.push(&root);
  while (!todo.empty()) {
    const TreeNode* node = todo.top();
    todo.pop();
    if (node->kind == TreeNode::Kind::leaf) out.push_back(node->cf());
    for (const auto& e : node->edges) todo.push(e.child.get());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TreeStats tree_stats(const TreeNode& root) {
  TreeStats st;
  std::stack<const TreeNode*> todo;
  todo.push(&root);
  while (!todo.empty()) {
    const TreeNode* node = todo.top();
    todo.pop();
    switch (node->kind) {
      case TreeNode::Kind::internal: ++st.internal; break;
      case TreeNode::Kind::leaf: ++st.live_leaves; break;
      case TreeNode::Kind::dead: ++st.dead_leaves; break;
    }
    for (const auto& e : node->edges) todo.push(e.child.get());
  }
  return st;
}

std::string to_dot(const TreeNode& root, bool ascii) {
  std::ostringstream os;
  os << "digraph expansion_tree {\n";
  os << "  node [shape=ellipse];\n";
  std::size_t next_id = 0;
  // Preorder walk; ids are assigned as nodes are emitted.
  std::stack<std::pair<const TreeNode*, std::size_t>> todo;

  auto emit_node = [&](const TreeNode* node) {
    std::size_t id = next_id++;
    os << "  n" << id << " [label=\"";
    switch (node->kind) {
      case TreeNode::Kind::internal:
        os << node->remainder.str() << "\"";
        break;
      case TreeNode::Kind::leaf:
        os << node->cf().str() << "\", shape=box";
        break;
      case TreeNode::Kind::dead:
        os << (ascii ? "DNE" : "∄") << "\", shape=plaintext";
        break;
    }
    os << "];\n";
    return id;
  };

  std::size_t root_id = emit_node(&root);
  for (auto it = root.edges.rbegin(); it != root.edges.rend(); ++it)
    todo.push({it->child.get(), root_id});
  while (!todo.empty()) {
    auto [node, parent_id] = todo.top();
    todo.pop();
    std::size_t id = emit_node(node);
    // The parent edge to this node: recover its label from the path.
    os << "  n" << parent_id << " -> n" << id << " [label=\""
       << node->path.back() << "\"];\n";
    for (auto it = node->edges.rbegin(); it != node->edges.rend(); ++it)
      todo.push({it->child.get(), id});
  }
  os << "}\n";
  return os.str();
}

}  // namespace twobridge
