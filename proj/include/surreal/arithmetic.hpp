#pragma once

#include "surreal/arena.hpp"

namespace surreal {

// -x = {-x^R | -x^L}.
NodeId neg(Arena& arena, NodeId x);

// x + y = {x^L + y, x + y^L | x^R + y, x + y^R}. Memoized on the id pair;
// the result is generally not canonical.
NodeId add(Arena& arena, NodeId x, NodeId y);

// x + (-y).
NodeId sub(Arena& arena, NodeId x, NodeId y);

// The earliest-born node eq to x.
NodeId canonicalize(Arena& arena, NodeId x);

// Product of nonnegative surreals:
//
//   xy = { x^L y + (x - x^L) y^L,  x^R y - (x^R - x) y^R
//        | x^L y + (x - x^L) y^R,  x^R y - (x^R - x) y^L }
//
// evaluated over the canonical forms of x and y. A term whose options do not
// exist is dropped, and a zero operand yields 0. Every intermediate product,
// difference and sum is canonicalized, so the recursion consumes canonical
// options only: each call either replaces y by one of its options, or keeps
// y and replaces x by one of its options.
//
// Throws NegativeOperand unless 0 <= x and 0 <= y.
NodeId mul_pos(Arena& arena, NodeId x, NodeId y);

// Conway's product x^L y + x y^L - x^L y^L (and its three siblings) over the
// canonical forms of x and y, for any signs. Kept as an independent check on
// mul_pos.
NodeId mul_conway(Arena& arena, NodeId x, NodeId y);

// The canonical positive integer max(1, floor(x) + 2); both 0 and x are
// below it.
NodeId int_bound(Arena& arena, NodeId x);

// a - b with a and b positive.
struct DiffPair {
  NodeId a;
  NodeId b;

  friend bool operator==(const DiffPair&, const DiffPair&) = default;
};

// (n, n - x) with n = int_bound(x); both parts canonical.
DiffPair to_diff(Arena& arena, NodeId x);

// a - b. Throws NegativeOperand if either part is not positive.
NodeId from_diff(Arena& arena, DiffPair p);

// (a - b)(a' - b') = (aa' + bb') - (ab' + ba'), parts canonicalized.
DiffPair mul_diff(Arena& arena, DiffPair p, DiffPair q);

// (a - b) + (a' - b') = (a + a') - (b + b'), parts canonicalized.
DiffPair add_diff(Arena& arena, DiffPair p, DiffPair q);

// Product on all surreals, routed through difference pairs; the result is
// canonical.
NodeId mul(Arena& arena, NodeId x, NodeId y);

}  // namespace surreal
