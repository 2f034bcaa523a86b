#include "doctest.h"

#include "brute_tree.hpp"
#include "surreal/arena.hpp"
#include "surreal/errors.hpp"
#include "surreal/oracle.hpp"

#include <random>
#include <vector>

using namespace surreal;

namespace {

struct Fixture {
  Arena arena;
  NodeId zero = arena.zero();
  NodeId one = arena.make({zero}, {});
  NodeId minus_one = arena.make({}, {zero});
  NodeId half = arena.make({zero}, {one});
  NodeId one_alt = arena.make({minus_one, zero}, {});  // {-1,0|}
};

// Canonical nodes for days <= max_day plus a spread of non-canonical cuts
// built from random option subsets.
std::vector<NodeId> mixed_corpus(Arena& arena, int max_day, int extra,
                                 unsigned seed) {
  std::vector<NodeId> canon;
  for (const auto& b : brute::births(max_day)) {
    canon.push_back(from_dyadic(arena, Dyadic(BigInt(b.value.num), b.value.exp)));
  }
  std::vector<NodeId> out = canon;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, canon.size() - 1);
  while (static_cast<int>(out.size()) < static_cast<int>(canon.size()) + extra) {
    // Choose a split value, then options strictly on each side of it.
    std::size_t split = pick(rng);
    std::vector<NodeId> left, right;
    for (int k = 0; k < 3; ++k) {
      std::size_t a = pick(rng);
      if (a < split) left.push_back(canon[a]);
      std::size_t b = pick(rng);
      if (b > split) right.push_back(canon[b]);
    }
    out.push_back(arena.make(left, right));
  }
  return out;
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "make interns and computes birthdays") {
  CHECK(arena.make({}, {}) == zero);
  CHECK(arena.birthday(zero) == 0);
  CHECK(arena.birthday(one) == 1);
  CHECK(arena.birthday(half) == 2);
  CHECK(arena.birthday(one_alt) == 2);
  CHECK(arena.make({zero, zero}, {}) == one);
  CHECK(arena.make({zero, minus_one}, {}) == one_alt);
  CHECK(arena.left(one_alt).size() == 2);
}

TEST_CASE_FIXTURE(Fixture, "make rejects cut violations") {
  CHECK_THROWS_AS(arena.make({zero}, {zero}), CutViolation);
  CHECK_THROWS_AS(arena.make({one}, {half}), CutViolation);
  try {
    arena.make({one}, {zero});
    FAIL("expected CutViolation");
  } catch (const CutViolation& e) {
    CHECK(e.left() == one.index);
    CHECK(e.right() == zero.index);
  }
}

TEST_CASE("node budget is enforced") {
  Arena arena(3);
  NodeId one = arena.make({arena.zero()}, {});
  arena.make({}, {arena.zero()});
  CHECK_THROWS_AS(arena.make({one}, {}), ResourceLimit);
  CHECK(arena.make({arena.zero()}, {}) == one);  // existing nodes still resolve
}

TEST_CASE_FIXTURE(Fixture, "order relation examples") {
  CHECK(arena.leq(zero, zero));
  CHECK_FALSE(arena.leq(one, zero));
  CHECK(arena.leq(half, one));
  CHECK(arena.lt(zero, one));
  CHECK_FALSE(arena.lt(zero, zero));
  CHECK(arena.lt(half, one));
  CHECK(arena.lt(minus_one, half));
  CHECK(arena.eq(one, one));
  CHECK(arena.eq(one, one_alt));
  CHECK_FALSE(arena.eq(zero, one));
  CHECK(arena.apart(zero, one));
  CHECK_FALSE(arena.apart(one, one));
  CHECK_FALSE(arena.apart(one, one_alt));
}

TEST_CASE_FIXTURE(Fixture, "oracle values") {
  CHECK(value(arena, zero) == Dyadic(0));
  CHECK(value(arena, half) == Dyadic::parse("1/2"));
  CHECK(value(arena, one_alt) == Dyadic(1));
  CHECK(from_dyadic(arena, Dyadic(0)) == zero);
  NodeId two = from_dyadic(arena, Dyadic(2));
  CHECK(arena.left(two).size() == 1);
  CHECK(arena.left(two)[0] == one);
  CHECK(arena.right(two).empty());
  NodeId three_quarters = from_dyadic(arena, Dyadic::parse("3/4"));
  CHECK(three_quarters == arena.make({half}, {one}));
  CHECK(arena.birthday(three_quarters) == 3);
}

TEST_CASE("from_dyadic is earliest-born and inverts value") {
  Arena arena;
  for (const auto& b : brute::births(7)) {
    Dyadic v(BigInt(b.value.num), b.value.exp);
    NodeId n = from_dyadic(arena, v);
    CHECK(value(arena, n) == v);
    CHECK(arena.birthday(n) == static_cast<std::uint32_t>(b.day));
  }
}

TEST_CASE("relations agree with the oracle on a mixed corpus") {
  Arena arena;
  auto corpus = mixed_corpus(arena, 3, 40, 7);
  for (NodeId x : corpus) {
    CHECK(arena.eq(from_dyadic(arena, value(arena, x)), x));
    for (NodeId y : corpus) {
      Dyadic vx = value(arena, x);
      Dyadic vy = value(arena, y);
      CHECK(arena.lt(x, y) == (vx < vy));
      CHECK(arena.leq(x, y) == (vx <= vy));
      CHECK(arena.eq(x, y) == (vx == vy));
    }
  }
}

TEST_CASE("ordered-set laws and option sandwich on a mixed corpus") {
  Arena arena;
  auto corpus = mixed_corpus(arena, 2, 15, 11);
  for (NodeId x : corpus) {
    for (NodeId l : arena.left(x)) CHECK(arena.lt(l, x));
    for (NodeId r : arena.right(x)) CHECK(arena.lt(x, r));
    CHECK_FALSE(arena.apart(x, x));
  }
  for (NodeId x : corpus) {
    for (NodeId y : corpus) {
      if (arena.lt(x, y)) CHECK_FALSE(arena.lt(y, x));
      if (!arena.lt(x, y) && !arena.lt(y, x)) CHECK(arena.eq(x, y));
      CHECK(arena.apart(x, y) == arena.apart(y, x));
      for (NodeId z : corpus) {
        if (arena.lt(x, y)) CHECK((arena.lt(x, z) || arena.lt(z, y)));
        if (arena.apart(x, y)) CHECK((arena.apart(x, z) || arena.apart(z, y)));
      }
    }
  }
}
