#include "doctest.h"

#include "surreal/arithmetic.hpp"
#include "surreal/oracle.hpp"
#include "surreal/signexp.hpp"

#include <stdexcept>
#include <vector>

using namespace surreal;

namespace {

SignSeq s(const char* text) { return SignSeq::parse(text); }

// Every sign sequence of length <= n, shortest first.
std::vector<SignSeq> all_sequences(std::size_t n) {
  std::vector<SignSeq> out{SignSeq{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == n) continue;
    for (Sign sign : {Sign::Minus, Sign::Plus}) {
      SignSeq next = out[i];
      next.push_back(sign);
      out.push_back(next);
    }
  }
  return out;
}

// Reference evaluation of a sign expansion: start at 0 with step 1; each
// sign moves by the step in its direction, and the step halves once the
// direction first changes.
Dyadic reference_value(const SignSeq& seq) {
  Dyadic x(0);
  Dyadic step(1);
  bool changed = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && seq[i] != seq[0]) changed = true;
    if (changed) step = step * Dyadic(BigInt(1), 1);
    x = seq[i] == Sign::Plus ? x + step : x - step;
  }
  return x;
}

}  // namespace

TEST_CASE("text form") {
  CHECK(s("+-+").to_string() == "+-+");
  CHECK(s("").empty());
  CHECK_THROWS_AS(s("+x"), std::invalid_argument);
}

TEST_CASE("seq_lt padding rule") {
  CHECK(seq_lt(s("-"), s("")));
  CHECK(seq_lt(s(""), s("+")));
  CHECK(seq_lt(s("+-"), s("+")));
  CHECK_FALSE(seq_lt(s(""), s("")));
  CHECK_FALSE(seq_lt(s("+-+"), s("+-+")));
  CHECK(seq_lt(s("+-+"), s("+")));
  CHECK(seq_lt(s("--"), s("-+")));
}

TEST_CASE("encode examples") {
  Arena arena;
  CHECK(encode(arena, arena.zero()).empty());
  CHECK(encode(arena, from_dyadic(arena, Dyadic::parse("3/4"))) == s("+-+"));
  CHECK(encode(arena, from_dyadic(arena, Dyadic(-2))) == s("--"));
  NodeId one_alt = arena.make({from_dyadic(arena, Dyadic(-1)), arena.zero()}, {});
  CHECK(encode(arena, one_alt) == s("+"));
}

TEST_CASE("decode examples") {
  Arena arena;
  CHECK(decode(arena, s("")) == arena.zero());
  CHECK(decode(arena, s("++")) == from_dyadic(arena, Dyadic(2)));
  CHECK(decode(arena, s("+-+")) == from_dyadic(arena, Dyadic::parse("3/4")));
}

TEST_CASE("sequences up to length 8: round trip, value, order") {
  Arena arena;
  auto seqs = all_sequences(8);
  REQUIRE(seqs.size() == 511);
  std::vector<NodeId> nodes;
  for (const auto& seq : seqs) {
    NodeId x = decode(arena, seq);
    nodes.push_back(x);
    CHECK(encode(arena, x) == seq);
    CHECK(value(arena, x) == reference_value(seq));
    CHECK(arena.birthday(x) == seq.size());
  }
  for (std::size_t i = 0; i < seqs.size(); i += 3) {
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      CHECK(seq_lt(seqs[i], seqs[j]) == arena.lt(nodes[i], nodes[j]));
    }
  }
}

TEST_CASE("seq_lt is cotransitive") {
  auto seqs = all_sequences(4);
  for (const auto& a : seqs) {
    for (const auto& b : seqs) {
      if (!seq_lt(a, b)) continue;
      for (const auto& c : seqs) CHECK((seq_lt(a, c) || seq_lt(c, b)));
    }
  }
}

TEST_CASE("encoding non-canonical sums") {
  Arena arena;
  NodeId half = from_dyadic(arena, Dyadic::parse("1/2"));
  NodeId quarter = from_dyadic(arena, Dyadic::parse("1/4"));
  NodeId sum = add(arena, half, quarter);
  CHECK(encode(arena, sum) == s("+-+"));
  CHECK(encode(arena, sum).size() == arena.birthday(canonicalize(arena, sum)));
}
