#pragma once

#include "surreal/arena.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surreal {

enum class Filter { All, Positive, Nonnegative };

// Canonical nodes born by max_day that pass the filter, in increasing order.
struct Corpus {
  std::vector<NodeId> nodes;
  std::string description;
  std::uint32_t max_day = 0;
  Filter filter = Filter::All;
};

// Throws ResourceLimit when the tree for max_day would exceed the budget.
Corpus corpus(Arena& arena, std::uint32_t max_day, Filter filter);

// What a law quantifies over: single nodes, or difference pairs (a, b) with
// a and b drawn from the corpus.
enum class Domain { Nodes, DiffPairs };

struct LawContext {
  Arena& arena;
  const Corpus& corpus;
};

// A law is a predicate over `arity` elements of its domain. The tuple handed
// to the predicate is flattened: arity ids for Domain::Nodes, 2 * arity ids
// (a0, b0, a1, b1, ...) for Domain::DiffPairs. Predicates are total: laws
// with hypotheses hold vacuously on tuples that miss them.
struct LawSpec {
  std::string name;
  int arity = 1;
  Domain domain = Domain::Nodes;
  std::string statement;
  std::function<bool(LawContext&, std::span<const NodeId>)> predicate;
  std::uint32_t default_max_day = 3;
  Filter default_filter = Filter::All;
};

struct LawReport {
  std::string law;
  std::string corpus;
  Domain domain = Domain::Nodes;
  int arity = 1;
  std::uint64_t tuples_checked = 0;
  std::uint64_t failures = 0;
  // At most kMaxCounterexamples flattened tuples, in enumeration order.
  std::vector<std::vector<NodeId>> counterexamples;

  bool ok() const { return failures == 0; }
};

inline constexpr std::size_t kMaxCounterexamples = 10;

// Evaluates the law on every tuple in lexicographic order over the corpus,
// stopping after `limit` tuples when one is given.
LawReport check(Arena& arena, const LawSpec& law, const Corpus& corpus,
                std::optional<std::uint64_t> limit = std::nullopt);

// Every registered law, in a fixed order.
const std::vector<LawSpec>& registry();

// nullptr if no law has that name.
const LawSpec* find_law(std::string_view name);

// The "for all c: c < a implies c < b, and b < c implies a < c" form of
// a <= b, with c ranging over `witnesses`.
bool derived_leq(Arena& arena, std::span<const NodeId> witnesses, NodeId a,
                 NodeId b);

}  // namespace surreal
