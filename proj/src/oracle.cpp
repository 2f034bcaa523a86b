#include "surreal/oracle.hpp"

#include <optional>

namespace surreal {

Dyadic value(Arena& arena, NodeId x) {
  auto& memo = arena.memos().value;
  if (auto it = memo.find(x); it != memo.end()) return it->second;

  std::optional<Dyadic> lo;
  for (NodeId l : arena.left(x)) {
    Dyadic v = value(arena, l);
    if (!lo || *lo < v) lo = std::move(v);
  }
  std::optional<Dyadic> hi;
  for (NodeId r : arena.right(x)) {
    Dyadic v = value(arena, r);
    if (!hi || v < *hi) hi = std::move(v);
  }
  Dyadic result = simplest_between(lo, hi);
  memo.emplace(x, result);
  return result;
}

NodeId from_dyadic(Arena& arena, const Dyadic& d) {
  auto& memo = arena.memos().from_dyadic;
  if (auto it = memo.find(d); it != memo.end()) return it->second;

  NodeId result;
  if (d.is_zero()) {
    result = arena.zero();
  } else if (d.is_integer() && d.sign() > 0) {
    result = arena.make({from_dyadic(arena, d - 1)}, {});
  } else if (d.is_integer()) {
    result = arena.make({}, {from_dyadic(arena, d + 1)});
  } else {
    Dyadic ulp(1, d.exp());
    NodeId lo = from_dyadic(arena, d - ulp);
    NodeId hi = from_dyadic(arena, d + ulp);
    result = arena.make({lo}, {hi});
  }
  arena.memos().from_dyadic.emplace(d, result);
  return result;
}

}  // namespace surreal
