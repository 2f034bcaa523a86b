#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace surreal {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational num / 2^exp, always stored reduced: exp == 0 or num is odd.
//
// Every finitely-born surreal has exactly one such value, which makes this
// type the independent oracle the cut-based relations are checked against.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(BigInt n) : num_(std::move(n)) {}
  Dyadic(BigInt num, std::uint32_t exp);

  const BigInt& num() const { return num_; }
  std::uint32_t exp() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  // Greatest integer <= value.
  BigInt floor() const;
  // Least integer >= value.
  BigInt ceil() const;

  // "n" for integers, "p/q" otherwise (q = 2^exp written in decimal).
  std::string to_string() const;

  // Accepts "n", "p/q" with q a power of two, and "p/2^k". Throws
  // std::invalid_argument on anything else, including general rationals.
  static Dyadic parse(std::string_view text);

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }

 private:
  void normalize();

  BigInt num_ = 0;
  std::uint32_t exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

// Named forms of the arithmetic, for callers that prefer them.
inline Dyadic dy_add(const Dyadic& a, const Dyadic& b) { return a + b; }
inline Dyadic dy_neg(const Dyadic& a) { return -a; }
inline Dyadic dy_mul(const Dyadic& a, const Dyadic& b) { return a * b; }
inline std::strong_ordering dy_cmp(const Dyadic& a, const Dyadic& b) {
  return a <=> b;
}
inline BigInt dy_floor(const Dyadic& a) { return a.floor(); }

// The earliest-born dyadic strictly inside (lo, hi); an absent bound is
// unbounded on that side. Throws EmptyInterval when lo >= hi.
//
// If the interval holds an integer, the answer is the integer of least
// absolute value in it. Otherwise it is the unique member with the smallest
// exponent.
Dyadic simplest_between(const std::optional<Dyadic>& lo,
                        const std::optional<Dyadic>& hi);

}  // namespace surreal

template <>
struct std::hash<surreal::Dyadic> {
  std::size_t operator()(const surreal::Dyadic& d) const {
    return boost::multiprecision::hash_value(d.num()) * 31u + d.exp();
  }
};
