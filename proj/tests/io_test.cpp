#include "doctest.h"

#include "surreal/io.hpp"
#include "surreal/oracle.hpp"

using namespace surreal;

TEST_CASE("canonical display") {
  Arena arena;
  auto show = [&](const char* v) { return display(arena, from_dyadic(arena, Dyadic::parse(v))); };
  CHECK(show("0") == "{|}");
  CHECK(show("1") == "{0|}");
  CHECK(show("-2") == "{|-1}");
  CHECK(show("3/4") == "{1/2|1}");
  CHECK(show("-5/8") == "{-3/4|-1/2}");
  // Non-canonical inputs display their canonical form.
  NodeId one_alt = arena.make({from_dyadic(arena, Dyadic(-1)), arena.zero()}, {});
  CHECK(display(arena, one_alt) == "{0|}");
}

TEST_CASE("tree as JSON") {
  Arena arena;
  Json j = tree_json(arena, generate(arena, 2));
  REQUIRE(j["days"].size() == 3);
  CHECK(j["days"][0][0].dump() == R"({"value":"0","parent":null,"sign":""})");
  CHECK(j["days"][2][1].dump() == R"({"value":"-1/2","parent":"-1","sign":"-+"})");
  std::size_t total = 0;
  for (const auto& day : j["days"]) total += day.size();
  CHECK(total == 7);
}

TEST_CASE("tree as DOT") {
  Arena arena;
  std::string dot = tree_dot(arena, generate(arena, 1));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("[label=\"-1\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n") != std::string::npos);
  CHECK(dot.back() == '\n');
}

TEST_CASE("reports as JSON") {
  Arena arena;
  Tree tree = generate(arena, 3);
  Json r = report_json(arena, check_conditions(arena, tree));
  CHECK(r["ok"] == true);
  CHECK(r["nodes_checked"] == 15);

  LawReport law;
  law.law = "X";
  law.corpus = "c";
  law.tuples_checked = 4;
  law.failures = 1;
  law.counterexamples = {{arena.zero(), from_dyadic(arena, Dyadic(1))}};
  CHECK(law_json(arena, law).dump() ==
        R"({"law":"X","corpus":"c","tuples_checked":4,"failures":1,"counterexamples":[["0","1"]]})");
  law.domain = Domain::DiffPairs;
  CHECK(law_json(arena, law)["counterexamples"].dump() == R"([[["0","1"]]])");
}
