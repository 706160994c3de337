#ifndef TWOBRIDGE_BTREE_HPP
#define TWOBRIDGE_BTREE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "twobridge/contfrac.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

// Binary expansion tree of 0 < p/q < 1. The root carries p/q and branches on
// the integral component 0/1; an interior vertex carries the remainder r of
// the expansion so far and branches on floor(1/r) and ceil(1/r) (one edge
// when 1/r is an integer, which closes the path). An edge labelled +-1 leads
// to a dead end, since no further rewrite can repair it; every live leaf
// spells out one expansion of p/q with all terms >= 2 in absolute value.
struct TreeNode {
  enum class Kind { internal, leaf, dead };

  struct Edge {
    std::int64_t label;
    std::unique_ptr<TreeNode> child;
  };

  Kind kind = Kind::internal;
  Rational remainder;              // 0 at a leaf; meaningless at a dead end
  std::vector<std::int64_t> path;  // edge labels from the root; empty at root
  std::vector<Edge> edges;         // at most two, floor edge first

  ContinuedFraction cf() const { return ContinuedFraction::from_flat(path); }
};

struct TreeStats {
  std::size_t internal = 0;
  std::size_t live_leaves = 0;
  std::size_t dead_leaves = 0;
};

// Builds the full tree with an explicit stack. Throws OutOfRange unless
// 0 < r < 1, and SubexpansionOutOfBounds if a remainder with |r| >= 1 ever
// shows up below the root (it cannot; the check is a tripwire).
std::unique_ptr<TreeNode> build_tree(const Rational& r);

// Live-leaf expansions, sorted and deduplicated.
std::vector<ContinuedFraction> leaves(const TreeNode& root);

TreeStats tree_stats(const TreeNode& root);

// Graphviz rendering: interior vertices show their remainder, live leaves
// their expansion, dead ends "∄" ("DNE" with ascii = true).
std::string to_dot(const TreeNode& root, bool ascii = false);

}  // namespace twobridge

#endif  // TWOBRIDGE_BTREE_HPP
