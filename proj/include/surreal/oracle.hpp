#pragma once

#include "surreal/arena.hpp"
#include "surreal/dyadic.hpp"

namespace surreal {

// Numeric value of a cut: the simplest dyadic between its greatest left
// option value and its least right option value. Memoized per node.
//
// This path never consults Arena::lt/leq, so it can be used to check them.
Dyadic value(Arena& arena, NodeId x);

// The canonical (earliest-born) cut with value d:
//   0 -> {|},  n > 0 -> {n-1|},  n < 0 -> {|n+1},
//   m/2^k (k >= 1) -> {(m-1)/2^k | (m+1)/2^k}.
NodeId from_dyadic(Arena& arena, const Dyadic& d);

}  // namespace surreal
