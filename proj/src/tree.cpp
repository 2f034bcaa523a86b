#include "surreal/tree.hpp"

#include "surreal/errors.hpp"
#include "surreal/oracle.hpp"
#include "surreal/signexp.hpp"

#include <algorithm>

namespace surreal {

const TreeNode& Tree::at(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw NotInTree("node #" + std::to_string(id.index) + " is not in the tree");
  }
  return it->second;
}

Tree generate(Arena& arena, std::uint32_t days,
              std::optional<std::size_t> budget) {
  std::size_t limit = budget.value_or(arena.node_budget());
  if (days >= 62 || (std::size_t{2} << days) - 1 > limit) {
    throw ResourceLimit("a tree of " + std::to_string(days) +
                        " days exceeds the node budget of " +
                        std::to_string(limit));
  }

  Tree tree;
  TreeNode root{arena.zero(), std::nullopt, Side::Root, 0};
  tree.days_.push_back({root});
  tree.index_.emplace(root.id, root);

  for (std::uint32_t day = 1; day <= days; ++day) {
    std::vector<TreeNode> level;
    level.reserve(std::size_t{1} << day);
    for (const TreeNode& parent : tree.days_.back()) {
      level.push_back(
          {left_child(arena, parent.id), parent.id, Side::Left, day});
      level.push_back(
          {right_child(arena, parent.id), parent.id, Side::Right, day});
    }
    for (const TreeNode& n : level) tree.index_.emplace(n.id, n);
    tree.days_.push_back(std::move(level));
  }
  return tree;
}

std::vector<NodeId> branch(const Tree& tree, NodeId x) {
  std::vector<NodeId> chain;
  const TreeNode* at = &tree.at(x);
  chain.push_back(at->id);
  while (at->parent) {
    at = &tree.at(*at->parent);
    chain.push_back(at->id);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::uint32_t bifurcation(const Tree& tree, NodeId x, NodeId y) {
  if (x == y) throw SameNode("bifurcation needs two distinct nodes");
  auto bx = branch(tree, x);
  auto by = branch(tree, y);
  std::size_t common = 0;
  while (common < bx.size() && common < by.size() && bx[common] == by[common]) {
    ++common;
  }
  // Both branches start at the root, so common >= 1.
  return static_cast<std::uint32_t>(common - 1);
}

std::optional<BigInt> weak_archimedean_witness(Arena& arena, NodeId x) {
  BigInt n = value(arena, x).floor();
  NodeId lo = from_dyadic(arena, Dyadic(n));
  NodeId hi = from_dyadic(arena, Dyadic(n + 1));
  if (arena.leq(lo, x) && arena.leq(x, hi)) return n;
  return std::nullopt;
}

std::optional<NodeId> regular_parent(Arena& arena, const Tree& tree,
                                     NodeId n) {
  const TreeNode& node = tree.at(n);
  Dyadic v = value(arena, n);
  if (!v.is_integer() || v.is_zero() || !node.parent) return std::nullopt;
  Dyadic expected = v.sign() > 0 ? v - 1 : v + 1;
  if (value(arena, *node.parent) == expected) return node.parent;
  return std::nullopt;
}

namespace {

void check_census(Arena& arena, const Tree& tree, ConditionReport& report) {
  for (std::uint32_t day = 0; day <= tree.last_day(); ++day) {
    const auto& level = tree.days()[day];
    if (level.size() != (std::size_t{1} << day)) {
      report.violations.push_back(
          {"census", level.empty() ? arena.zero() : level.front().id,
           "day " + std::to_string(day) + " has " +
               std::to_string(level.size()) + " nodes"});
    }
    for (std::size_t i = 1; i < level.size(); ++i) {
      if (!arena.lt(level[i - 1].id, level[i].id)) {
        report.violations.push_back(
            {"census", level[i].id, "day is not strictly increasing"});
      }
    }
    if (!level.empty()) {
      Dyadic d(static_cast<long long>(day));
      if (value(arena, level.front().id) != -d ||
          value(arena, level.back().id) != d) {
        report.violations.push_back(
            {"census", level.front().id, "day extremes are not -n and n"});
      }
    }
  }
  if (tree.days().front().size() != 1 ||
      tree.days().front().front().id != arena.zero()) {
    report.violations.push_back(
        {"census", arena.zero(), "day 0 must contain exactly 0"});
  }
}

void check_node(Arena& arena, const Tree& tree, std::uint32_t day,
                const TreeNode& node, ConditionReport& report) {
  auto flag = [&](const char* condition, std::string detail) {
    report.violations.push_back({condition, node.id, std::move(detail)});
  };

  // Ancestor: a branch runs from 0 to x along parent links.
  auto chain = branch(tree, node.id);
  if (chain.front() != arena.zero() || chain.back() != node.id) {
    flag("ancestor", "branch does not run from 0 to the node");
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const TreeNode& child = tree.at(chain[i]);
    bool ordered = child.side == Side::Left
                       ? arena.lt(child.id, chain[i - 1])
                       : child.side == Side::Right &&
                             arena.lt(chain[i - 1], child.id);
    if (!ordered || child.parent != chain[i - 1]) {
      flag("ancestor", "step " + std::to_string(i) + " is not a parent link");
    }
  }

  // Date of birth: depth, recorded birthday and cut birthday coincide.
  if (chain.size() != std::size_t{day} + 1 || node.birthday != day ||
      arena.birthday(node.id) != day) {
    flag("date-of-birth", "birthday differs from tree depth " +
                              std::to_string(day));
  }
  if (node.parent && tree.at(*node.parent).birthday + 1 != node.birthday) {
    flag("date-of-birth", "birthday is not parent birthday + 1");
  }

  if (!weak_archimedean_witness(arena, node.id)) {
    flag("weak-archimedean", "no integer n with n <= x <= n + 1");
  }

  Dyadic v = value(arena, node.id);
  if (v.is_integer()) {
    if (v.is_zero()) {
      if (node.parent) flag("limit-regular", "0 must be the root");
    } else if (!regular_parent(arena, tree, node.id)) {
      flag("limit-regular", "integer is not generated by its predecessor");
    }
  }
}

void check_bifurcations(const Tree& tree, ConditionReport& report) {
  std::vector<NodeId> all;
  for (const auto& level : tree.days()) {
    for (const TreeNode& n : level) all.push_back(n.id);
  }
  std::vector<std::vector<NodeId>> branches;
  branches.reserve(all.size());
  for (NodeId id : all) branches.push_back(branch(tree, id));

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      ++report.pairs_checked;
      std::uint32_t alpha = bifurcation(tree, all[i], all[j]);
      const auto& bx = branches[i];
      const auto& by = branches[j];
      bool ok = alpha < bx.size() && alpha < by.size();
      for (std::size_t b = 0; ok && b <= alpha; ++b) ok = bx[b] == by[b];
      for (std::size_t g = alpha + 1; ok && g < bx.size() && g < by.size();
           ++g) {
        ok = bx[g] != by[g];
      }
      if (!ok) {
        report.violations.push_back(
            {"bifurcation", all[i],
             "branches to #" + std::to_string(all[i].index) + " and #" +
                 std::to_string(all[j].index) + " rejoin after day " +
                 std::to_string(alpha)});
      }
    }
  }
}

}  // namespace

ConditionReport check_conditions(Arena& arena, const Tree& tree) {
  ConditionReport report;
  report.days = tree.last_day();
  check_census(arena, tree, report);
  for (std::uint32_t day = 0; day <= tree.last_day(); ++day) {
    for (const TreeNode& node : tree.days()[day]) {
      check_node(arena, tree, day, node, report);
      ++report.nodes_checked;
    }
  }
  check_bifurcations(tree, report);
  return report;
}

}  // namespace surreal
