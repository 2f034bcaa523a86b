#include "doctest.h"

#include "brute_tree.hpp"
#include "surreal/dyadic.hpp"
#include "surreal/errors.hpp"

#include <optional>
#include <stdexcept>

using surreal::BigInt;
using surreal::Dyadic;
using surreal::simplest_between;

namespace {

Dyadic d(const char* text) { return Dyadic::parse(text); }

Dyadic from_frac(const brute::Frac& f) { return Dyadic(BigInt(f.num), f.exp); }

}  // namespace

TEST_CASE("dyadic values are stored reduced") {
  Dyadic half(BigInt(4), 3);
  CHECK(half.num() == 1);
  CHECK(half.exp() == 1);
  Dyadic zero(BigInt(0), 5);
  CHECK(zero.exp() == 0);
  CHECK(Dyadic(BigInt(-6), 2) == d("-3/2"));
  CHECK(Dyadic(BigInt(8), 3).is_integer());
}

TEST_CASE("exact arithmetic") {
  CHECK(surreal::dy_add(d("1/2"), d("1/2")) == Dyadic(1));
  CHECK(surreal::dy_mul(d("1/2"), d("1/2")) == d("1/4"));
  CHECK(surreal::dy_neg(d("3/8")) == d("-3/8"));
  CHECK(d("3/4") - d("1/4") == d("1/2"));
  CHECK(surreal::dy_cmp(d("-1/2"), d("1/4")) < 0);
  CHECK(d("5/4") > Dyadic(1));
}

TEST_CASE("floor and ceil") {
  CHECK(surreal::dy_floor(d("-3/4")) == -1);
  CHECK(surreal::dy_floor(d("3/4")) == 0);
  CHECK(surreal::dy_floor(d("-2")) == -2);
  CHECK(surreal::dy_floor(d("7/2")) == 3);
  CHECK(d("-3/4").ceil() == 0);
  CHECK(d("5/4").ceil() == 2);
}

TEST_CASE("products outgrow 64 bits without loss") {
  Dyadic big(BigInt(1) << 70);
  Dyadic p = big * big + Dyadic(BigInt(1), 80);
  CHECK(p.exp() == 80);
  CHECK(p.num() == (BigInt(1) << 220) + 1);
  CHECK(p - big * big == Dyadic(BigInt(1), 80));
}

TEST_CASE("text form") {
  CHECK(d("3/4").to_string() == "3/4");
  CHECK(d("-5/2^3").to_string() == "-5/8");
  CHECK(d("6/4").to_string() == "3/2");
  CHECK(d("12").to_string() == "12");
  CHECK(d("0/8").to_string() == "0");
  CHECK_THROWS_AS(d("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(d("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(d("x"), std::invalid_argument);
  CHECK_THROWS_AS(d("1/"), std::invalid_argument);
}

TEST_CASE("simplest_between examples") {
  CHECK(simplest_between(std::nullopt, std::nullopt) == Dyadic(0));
  CHECK(simplest_between(Dyadic(0), Dyadic(1)) == d("1/2"));
  CHECK(simplest_between(d("1/2"), std::nullopt) == Dyadic(1));
  CHECK(simplest_between(std::nullopt, d("-1/2")) == Dyadic(-1));
  CHECK(simplest_between(d("-1/2"), d("3/4")) == Dyadic(0));
  CHECK(simplest_between(d("5/2"), d("11/4")) == d("21/8"));
  CHECK(simplest_between(d("-3"), d("-5/2")) == d("-11/4"));
}

TEST_CASE("simplest_between rejects empty intervals") {
  CHECK_THROWS_AS(simplest_between(Dyadic(1), Dyadic(1)), surreal::EmptyInterval);
  CHECK_THROWS_AS(simplest_between(Dyadic(2), Dyadic(1)), surreal::EmptyInterval);
}

TEST_CASE("simplest_between matches the earliest birth up to day 8") {
  const auto day8 = brute::births(8);
  const auto day5 = brute::births(5);
  // Bounds from days <= 5; the earliest point inside any such interval is
  // born by day 6, well inside the day-8 census.
  for (std::size_t i = 0; i < day5.size(); ++i) {
    const auto& lo = day5[i].value;
    CHECK(simplest_between(from_frac(lo), std::nullopt) ==
          from_frac(brute::earliest_between(day8, true, lo, false, {})));
    CHECK(simplest_between(std::nullopt, from_frac(lo)) ==
          from_frac(brute::earliest_between(day8, false, {}, true, lo)));
    for (std::size_t j = i + 1; j < day5.size(); ++j) {
      const auto& hi = day5[j].value;
      Dyadic expected =
          from_frac(brute::earliest_between(day8, true, lo, true, hi));
      Dyadic got = simplest_between(from_frac(lo), from_frac(hi));
      CHECK(got == expected);
      CHECK(from_frac(lo) < got);
      CHECK(got < from_frac(hi));
    }
  }
}
