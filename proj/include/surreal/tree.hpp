#pragma once

#include "surreal/arena.hpp"
#include "surreal/dyadic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace surreal {

enum class Side { Root, Left, Right };

struct TreeNode {
  NodeId id;  // canonical
  std::optional<NodeId> parent;
  Side side = Side::Root;
  std::uint32_t birthday = 0;
};

// The tree of numbers born on days 0..last_day(). Day n lists its 2^n nodes
// in increasing order; each node's children are {x^L | x} and {x | x^R}.
class Tree {
 public:
  const std::vector<std::vector<TreeNode>>& days() const { return days_; }
  std::uint32_t last_day() const {
    return static_cast<std::uint32_t>(days_.size() - 1);
  }
  std::size_t size() const { return index_.size(); }
  bool contains(NodeId id) const { return index_.count(id) != 0; }
  // Throws NotInTree.
  const TreeNode& at(NodeId id) const;

 private:
  friend Tree generate(Arena&, std::uint32_t, std::optional<std::size_t>);

  std::vector<std::vector<TreeNode>> days_;
  std::unordered_map<NodeId, TreeNode> index_;
};

// Builds days 0..days. Throws ResourceLimit when the 2^(days+1) - 1 nodes
// would exceed `budget` (default: the arena's node budget).
Tree generate(Arena& arena, std::uint32_t days,
              std::optional<std::size_t> budget = std::nullopt);

// Parent chain from 0 down to x, inclusive. Throws NotInTree.
std::vector<NodeId> branch(const Tree& tree, NodeId x);

// Last day on which the branches to x and y agree. Throws SameNode if x == y,
// NotInTree if either is missing.
std::uint32_t bifurcation(const Tree& tree, NodeId x, NodeId y);

// The integer n with n <= x <= n + 1 (the floor of x's value), confirmed with
// the cut relations. Returns nullopt if the relations disagree.
std::optional<BigInt> weak_archimedean_witness(Arena& arena, NodeId x);

// For a nonzero integer node n, its parent when that parent is n - 1
// (n > 0) or n + 1 (n < 0); otherwise nullopt.
std::optional<NodeId> regular_parent(Arena& arena, const Tree& tree, NodeId n);

struct Violation {
  std::string condition;
  NodeId node;
  std::string detail;
};

struct ConditionReport {
  std::uint32_t days = 0;
  std::size_t nodes_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Re-verifies the generated tree from scratch: day census and ordering,
// ancestor branches, bifurcation points, weak-Archimedean bounds, integer
// regularity (0 is the limit root), and birthdays equal to depth.
ConditionReport check_conditions(Arena& arena, const Tree& tree);

}  // namespace surreal
