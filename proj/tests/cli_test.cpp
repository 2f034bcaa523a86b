#include "doctest.h"

#include "surreal/cli.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<const char*> args, const std::string& input = "") {
  args.insert(args.begin(), "surreal");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = surreal::cli::run(static_cast<int>(args.size()), args.data(), in,
                               out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  Outcome r = invoke({"eval", "{|}", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"expr":"{|}","canonical":"{|}","value":"0","birthday":0,"signs":""})" "\n");

  r = invoke({"eval", "{0|1} + {0|1} == 1", "--json"});
  CHECK(r.out == R"({"expr":"{0|1} + {0|1} == 1","result":true})" "\n");

  r = invoke({"eval", "3/4"});
  CHECK(r.out == "canonical {1/2|1}\nvalue     3/4\nbirthday  3\nsigns     +-+\n");

  CHECK(invoke({"eval", "sign(3/4)"}).out == "+-+\n");
  CHECK(invoke({"eval", "--", "-1 * -1 == 1"}).out == "true\n");
  CHECK(invoke({"eval", "birthday(2)", "--json"}).out ==
        R"j({"expr":"birthday(2)","result":2})j" "\n");
}

TEST_CASE("eval failures map to exit codes") {
  Outcome r = invoke({"eval", "1 + * 2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 4") != std::string::npos);
  CHECK(invoke({"eval", "1/3"}).code == 2);
  r = invoke({"eval", "{1|0}"});
  CHECK(r.code == 1);
  CHECK(r.err.find("left option 1 is not less than right option 0") != std::string::npos);
  CHECK(invoke({"eval", "1 + (1 < 2)"}).code == 1);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"eval"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("tree") {
  Outcome r = invoke({"tree", "--days", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"({"value":"-2","parent":"-1","sign":"--"})") != std::string::npos);
  CHECK(r.out.find(R"({"value":"2","parent":"1","sign":"++"}]]})") != std::string::npos);

  r = invoke({"tree", "--days", "3", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("violations":[],"ok":true)") != std::string::npos);

  r = invoke({"tree", "--days", "1", "--format", "dot"});
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(invoke({"tree", "--days", "2", "--format", "xml"}).code == 2);
  CHECK(invoke({"tree"}).code == 2);
  CHECK(invoke({"tree", "--days", "70"}).code == 1);
}

TEST_CASE("laws") {
  Outcome r = invoke({"laws", "--law", "DIST_POS", "--max-day", "3", "--positive"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"law":"DIST_POS","corpus":"canonical, birthday <= 3, positive","tuples_checked":343,"failures":0,"counterexamples":[]})" "\n");
  r = invoke({"laws", "--law", "ADD_COMM", "--max-day", "2", "--limit", "7"});
  CHECK(r.out.find(R"("tuples_checked":7,)") != std::string::npos);
  CHECK(invoke({"laws", "--law", "NOPE"}).code == 2);

  r = invoke({"laws", "--max-day", "1"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') > 40);
}

TEST_CASE("repl") {
  Outcome r = invoke({"repl"}, "1 + 1\n\n  sign(3/4)  \n{1|0}\n:quit\n7\n");
  CHECK(r.code == 0);
  CHECK(r.out == "canonical {1|}\nvalue     2\nbirthday  2\nsigns     ++\n+-+\n");
  CHECK(r.err.find("cut violation") != std::string::npos);
  CHECK(invoke({"repl"}, "2").out.find("value     2") != std::string::npos);
}

TEST_CASE("node budget from the environment") {
  setenv("SURREAL_NODE_BUDGET", "20", 1);
  CHECK(invoke({"tree", "--days", "4"}).code == 1);
  CHECK(invoke({"eval", "2"}).code == 0);
  setenv("SURREAL_NODE_BUDGET", "lots", 1);
  CHECK(invoke({"eval", "2"}).code == 2);
  unsetenv("SURREAL_NODE_BUDGET");
  CHECK(invoke({"tree", "--days", "4"}).code == 0);
}
