#include "surreal/arithmetic.hpp"

#include "surreal/errors.hpp"
#include "surreal/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace surreal {

namespace {

std::string describe(Arena& arena, NodeId x) {
  return value(arena, x).to_string();
}

void require_positive(Arena& arena, NodeId x, const char* what) {
  if (!arena.lt(arena.zero(), x)) {
    throw NegativeOperand(std::string(what) + " must be positive, got " +
                          describe(arena, x));
  }
}

// Copies of option lists: recursion below appends to the arena.
std::vector<NodeId> lefts(const Arena& arena, NodeId x) {
  auto s = arena.left(x);
  return {s.begin(), s.end()};
}
std::vector<NodeId> rights(const Arena& arena, NodeId x) {
  auto s = arena.right(x);
  return {s.begin(), s.end()};
}

}  // namespace

NodeId neg(Arena& arena, NodeId x) {
  if (auto it = arena.memos().neg.find(x); it != arena.memos().neg.end()) {
    return it->second;
  }
  std::vector<NodeId> l, r;
  for (NodeId xr : rights(arena, x)) l.push_back(neg(arena, xr));
  for (NodeId xl : lefts(arena, x)) r.push_back(neg(arena, xl));
  NodeId result = arena.make(l, r);
  arena.memos().neg.emplace(x, result);
  return result;
}

NodeId add(Arena& arena, NodeId x, NodeId y) {
  auto key = pair_key(x, y);
  if (auto it = arena.memos().add.find(key); it != arena.memos().add.end()) {
    return it->second;
  }
  std::vector<NodeId> l, r;
  for (NodeId xl : lefts(arena, x)) l.push_back(add(arena, xl, y));
  for (NodeId yl : lefts(arena, y)) l.push_back(add(arena, x, yl));
  for (NodeId xr : rights(arena, x)) r.push_back(add(arena, xr, y));
  for (NodeId yr : rights(arena, y)) r.push_back(add(arena, x, yr));
  NodeId result = arena.make(l, r);
  arena.memos().add.emplace(key, result);
  return result;
}

NodeId sub(Arena& arena, NodeId x, NodeId y) {
  return add(arena, x, neg(arena, y));
}

NodeId canonicalize(Arena& arena, NodeId x) {
  auto& memo = arena.memos().canonical;
  if (auto it = memo.find(x); it != memo.end()) return it->second;
  NodeId result = from_dyadic(arena, value(arena, x));
  arena.memos().canonical.emplace(x, result);
  return result;
}

NodeId mul_pos(Arena& arena, NodeId x, NodeId y) {
  NodeId zero = arena.zero();
  if (!arena.leq(zero, x) || !arena.leq(zero, y)) {
    throw NegativeOperand("mul_pos needs nonnegative operands, got " +
                          describe(arena, x) + " and " + describe(arena, y));
  }
  if (arena.eq(x, zero) || arena.eq(y, zero)) return zero;

  x = canonicalize(arena, x);
  y = canonicalize(arena, y);
  auto key = pair_key(x, y);
  if (auto it = arena.memos().mul_pos.find(key);
      it != arena.memos().mul_pos.end()) {
    return it->second;
  }

  auto c = [&arena](NodeId n) { return canonicalize(arena, n); };
  auto times = [&](NodeId a, NodeId b) { return c(mul_pos(arena, a, b)); };
  auto plus = [&](NodeId a, NodeId b) { return c(add(arena, a, b)); };
  auto minus = [&](NodeId a, NodeId b) { return c(sub(arena, a, b)); };

  const auto xl = lefts(arena, x);
  const auto xr = rights(arena, x);
  const auto yl = lefts(arena, y);
  const auto yr = rights(arena, y);

  std::vector<NodeId> l, r;
  for (NodeId a : xl) {
    NodeId ay = times(a, y);
    NodeId gap = minus(x, a);
    for (NodeId b : yl) l.push_back(plus(ay, times(gap, b)));
    for (NodeId b : yr) r.push_back(plus(ay, times(gap, b)));
  }
  for (NodeId a : xr) {
    NodeId ay = times(a, y);
    NodeId gap = minus(a, x);
    for (NodeId b : yr) l.push_back(minus(ay, times(gap, b)));
    for (NodeId b : yl) r.push_back(minus(ay, times(gap, b)));
  }
  NodeId result = arena.make(l, r);
  arena.memos().mul_pos.emplace(key, result);
  return result;
}

NodeId mul_conway(Arena& arena, NodeId x, NodeId y) {
  x = canonicalize(arena, x);
  y = canonicalize(arena, y);
  auto key = pair_key(x, y);
  if (auto it = arena.memos().mul_conway.find(key);
      it != arena.memos().mul_conway.end()) {
    return it->second;
  }

  auto c = [&arena](NodeId n) { return canonicalize(arena, n); };
  auto times = [&](NodeId a, NodeId b) { return c(mul_conway(arena, a, b)); };
  // a y + x b - a b
  auto term = [&](NodeId a, NodeId b) {
    NodeId s = c(add(arena, times(a, y), times(x, b)));
    return c(sub(arena, s, times(a, b)));
  };

  const auto xl = lefts(arena, x);
  const auto xr = rights(arena, x);
  const auto yl = lefts(arena, y);
  const auto yr = rights(arena, y);

  std::vector<NodeId> l, r;
  for (NodeId a : xl) {
    for (NodeId b : yl) l.push_back(term(a, b));
    for (NodeId b : yr) r.push_back(term(a, b));
  }
  for (NodeId a : xr) {
    for (NodeId b : yr) l.push_back(term(a, b));
    for (NodeId b : yl) r.push_back(term(a, b));
  }
  NodeId result = arena.make(l, r);
  arena.memos().mul_conway.emplace(key, result);
  return result;
}

NodeId int_bound(Arena& arena, NodeId x) {
  BigInt n = value(arena, x).floor() + 2;
  if (n.sign() <= 0) n = 1;
  return from_dyadic(arena, Dyadic(n));
}

DiffPair to_diff(Arena& arena, NodeId x) {
  NodeId n = int_bound(arena, x);
  return {n, canonicalize(arena, sub(arena, n, x))};
}

NodeId from_diff(Arena& arena, DiffPair p) {
  require_positive(arena, p.a, "minuend");
  require_positive(arena, p.b, "subtrahend");
  return sub(arena, p.a, p.b);
}

DiffPair mul_diff(Arena& arena, DiffPair p, DiffPair q) {
  for (NodeId part : {p.a, p.b, q.a, q.b}) {
    require_positive(arena, part, "difference-pair part");
  }
  auto c = [&arena](NodeId n) { return canonicalize(arena, n); };
  auto times = [&](NodeId a, NodeId b) { return c(mul_pos(arena, a, b)); };
  NodeId plus = c(add(arena, times(p.a, q.a), times(p.b, q.b)));
  NodeId minus = c(add(arena, times(p.a, q.b), times(p.b, q.a)));
  return {plus, minus};
}

DiffPair add_diff(Arena& arena, DiffPair p, DiffPair q) {
  return {canonicalize(arena, add(arena, p.a, q.a)),
          canonicalize(arena, add(arena, p.b, q.b))};
}

NodeId mul(Arena& arena, NodeId x, NodeId y) {
  auto key = pair_key(x, y);
  if (auto it = arena.memos().mul.find(key); it != arena.memos().mul.end()) {
    return it->second;
  }
  DiffPair product = mul_diff(arena, to_diff(arena, x), to_diff(arena, y));
  NodeId result = canonicalize(arena, from_diff(arena, product));
  arena.memos().mul.emplace(key, result);
  return result;
}

}  // namespace surreal
