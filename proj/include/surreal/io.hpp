#pragma once

#include "surreal/arena.hpp"
#include "surreal/laws.hpp"
#include "surreal/tree.hpp"

#include "json.hpp"

#include <string>

namespace surreal {

using Json = nlohmann::ordered_json;

// The canonical form of x as a cut whose options are written as dyadic
// values, e.g. "{1/2|1}". Zero is "{|}".
std::string display(Arena& arena, NodeId x);

// {"days": [[{"value", "parent", "sign"}, ...], ...]}; parent is the
// parent's value or null at the root, sign is the full sign expansion.
Json tree_json(Arena& arena, const Tree& tree);

// Parent edges labelled with node values; nodes are named n<arena index>.
std::string tree_dot(Arena& arena, const Tree& tree);

Json report_json(Arena& arena, const ConditionReport& report);

// {law, corpus, tuples_checked, failures, counterexamples}. Counterexample
// members are values; difference pairs appear as [a, b].
Json law_json(Arena& arena, const LawReport& report);

}  // namespace surreal
