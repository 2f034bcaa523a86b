#pragma once

#include "surreal/dyadic.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <vector>

namespace surreal {

// Handle to an interned cut. Two handles are equal iff the cuts are
// structurally identical; semantic equality is Arena::eq.
struct NodeId {
  std::uint32_t index = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

}  // namespace surreal

template <>
struct std::hash<surreal::NodeId> {
  std::size_t operator()(surreal::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.index);
  }
};

namespace surreal {

// A cut {left | right}. Option lists are sorted by index and duplicate-free.
struct SurrealNode {
  std::vector<NodeId> left;
  std::vector<NodeId> right;
  std::uint32_t birthday = 0;
};

inline constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 22;

// Memo tables keyed by a pair of node ids.
template <class V>
using PairMemo = std::unordered_map<std::uint64_t, V>;

inline std::uint64_t pair_key(NodeId a, NodeId b) {
  return (std::uint64_t{a.index} << 32) | b.index;
}

// Append-only store of hash-consed cuts.
//
// Nodes are immutable once created, so ids stay valid for the arena's
// lifetime. The arena is not synchronized: the memo tables are mutated by
// the relations, so an arena must be confined to one thread at a time.
class Arena {
 public:
  explicit Arena(std::size_t node_budget = kDefaultNodeBudget);

  Arena(const Arena&) = delete;
  Arena& operator=(const Arena&) = delete;
  Arena(Arena&&) = default;
  Arena& operator=(Arena&&) = default;

  NodeId zero() const { return NodeId{0}; }

  // Interns {left | right}. Options must already live in this arena, which
  // forces bottom-up construction. Throws CutViolation if some left option is
  // not lt some right option, ResourceLimit if the node budget is exhausted.
  NodeId make(std::span<const NodeId> left, std::span<const NodeId> right);
  NodeId make(std::initializer_list<NodeId> left,
              std::initializer_list<NodeId> right) {
    return make(std::span<const NodeId>(left.begin(), left.size()),
                std::span<const NodeId>(right.begin(), right.size()));
  }

  const SurrealNode& node(NodeId id) const { return nodes_.at(id.index); }
  std::span<const NodeId> left(NodeId id) const { return node(id).left; }
  std::span<const NodeId> right(NodeId id) const { return node(id).right; }
  bool contains(NodeId id) const { return id.index < nodes_.size(); }
  std::size_t size() const { return nodes_.size(); }
  std::size_t node_budget() const { return node_budget_; }

  // Birthday of the stored cut; not invariant under eq.
  std::uint32_t birthday(NodeId id) const { return node(id).birthday; }

  // x <= y iff every left option of x is < y and x is < every right option
  // of y.
  bool leq(NodeId x, NodeId y);
  // x < y iff x <= some left option of y, or some right option of x is <= y.
  bool lt(NodeId x, NodeId y);
  bool eq(NodeId x, NodeId y) { return leq(x, y) && leq(y, x); }
  bool apart(NodeId x, NodeId y) { return lt(x, y) || lt(y, x); }

  // Caches owned by the arena on behalf of the arithmetic and oracle layers;
  // they live here so that their lifetime matches the ids they refer to.
  struct Memos {
    std::unordered_map<NodeId, Dyadic> value;
    std::unordered_map<Dyadic, NodeId> from_dyadic;
    std::unordered_map<NodeId, NodeId> canonical;
    std::unordered_map<NodeId, NodeId> neg;
    PairMemo<NodeId> add;
    PairMemo<NodeId> mul_pos;
    PairMemo<NodeId> mul_conway;
    PairMemo<NodeId> mul;
  };
  Memos& memos() { return memos_; }

 private:
  struct Key {
    std::vector<NodeId> left;
    std::vector<NodeId> right;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  std::vector<SurrealNode> nodes_;
  std::unordered_map<Key, NodeId, KeyHash> intern_;
  PairMemo<bool> leq_memo_;
  PairMemo<bool> lt_memo_;
  Memos memos_;
  std::size_t node_budget_;
};

}  // namespace surreal
