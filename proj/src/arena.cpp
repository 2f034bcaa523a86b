#include "surreal/arena.hpp"

#include "surreal/errors.hpp"

#include <algorithm>
#include <string>

namespace surreal {

namespace {

std::vector<NodeId> sorted_unique(std::span<const NodeId> ids) {
  std::vector<NodeId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::size_t Arena::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::uint32_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (NodeId id : k.left) mix(id.index);
  mix(0xffffffffu);
  for (NodeId id : k.right) mix(id.index);
  return h;
}

Arena::Arena(std::size_t node_budget) : node_budget_(node_budget) {
  if (node_budget_ == 0) throw ResourceLimit("node budget must be positive");
  nodes_.push_back(SurrealNode{});
  intern_.emplace(Key{}, NodeId{0});
}

NodeId Arena::make(std::span<const NodeId> left,
                   std::span<const NodeId> right) {
  for (NodeId id : left) {
    if (!contains(id)) throw Error("unknown node #" + std::to_string(id.index));
  }
  for (NodeId id : right) {
    if (!contains(id)) throw Error("unknown node #" + std::to_string(id.index));
  }
  Key key{sorted_unique(left), sorted_unique(right)};
  if (auto it = intern_.find(key); it != intern_.end()) return it->second;

  for (NodeId l : key.left) {
    for (NodeId r : key.right) {
      if (!lt(l, r)) throw CutViolation(l.index, r.index);
    }
  }
  if (nodes_.size() >= node_budget_) {
    throw ResourceLimit("node budget of " + std::to_string(node_budget_) +
                        " exhausted");
  }

  std::uint32_t birthday = 0;
  bool has_options = !key.left.empty() || !key.right.empty();
  for (NodeId id : key.left) birthday = std::max(birthday, this->birthday(id));
  for (NodeId id : key.right) birthday = std::max(birthday, this->birthday(id));
  if (has_options) ++birthday;

  NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(SurrealNode{key.left, key.right, birthday});
  intern_.emplace(std::move(key), id);
  return id;
}

bool Arena::leq(NodeId x, NodeId y) {
  auto k = pair_key(x, y);
  if (auto it = leq_memo_.find(k); it != leq_memo_.end()) return it->second;
  bool result = true;
  for (std::size_t i = 0; result && i < nodes_[x.index].left.size(); ++i) {
    if (!lt(nodes_[x.index].left[i], y)) result = false;
  }
  for (std::size_t i = 0; result && i < nodes_[y.index].right.size(); ++i) {
    if (!lt(x, nodes_[y.index].right[i])) result = false;
  }
  leq_memo_.emplace(k, result);
  return result;
}

bool Arena::lt(NodeId x, NodeId y) {
  auto k = pair_key(x, y);
  if (auto it = lt_memo_.find(k); it != lt_memo_.end()) return it->second;
  bool result = false;
  for (std::size_t i = 0; !result && i < nodes_[y.index].left.size(); ++i) {
    if (leq(x, nodes_[y.index].left[i])) result = true;
  }
  for (std::size_t i = 0; !result && i < nodes_[x.index].right.size(); ++i) {
    if (leq(nodes_[x.index].right[i], y)) result = true;
  }
  lt_memo_.emplace(k, result);
  return result;
}

}  // namespace surreal
