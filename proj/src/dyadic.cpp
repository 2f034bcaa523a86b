#include "surreal/dyadic.hpp"

#include "surreal/errors.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace surreal {

namespace {

BigInt pow2(std::uint32_t k) { return BigInt(1) << k; }

// Floor division of a by 2^k.
BigInt floor_shift(const BigInt& a, std::uint32_t k) {
  if (a.sign() >= 0) return a >> k;
  // -((-a - 1) >> k) - 1 rounds towards negative infinity.
  return -(((-a) - 1) >> k) - 1;
}

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("missing digits");
  BigInt n = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("not an integer: " + std::string(s));
    }
    n = n * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-n) : n;
}

}  // namespace

Dyadic::Dyadic(BigInt num, std::uint32_t exp) : num_(std::move(num)), exp_(exp) {
  normalize();
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  std::uint32_t twos = static_cast<std::uint32_t>(boost::multiprecision::lsb(
      boost::multiprecision::abs(num_)));
  std::uint32_t shift = std::min(twos, exp_);
  num_ >>= shift;  // exact: the low `shift` bits are zero
  exp_ -= shift;
}

BigInt Dyadic::floor() const { return floor_shift(num_, exp_); }

BigInt Dyadic::ceil() const {
  BigInt f = floor();
  return exp_ == 0 ? f : BigInt(f + 1);
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + pow2(exp_).str();
}

Dyadic Dyadic::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  std::string_view den = text.substr(slash + 1);
  std::uint32_t exp = 0;
  if (den.size() > 2 && den.substr(0, 2) == "2^") {
    BigInt k = parse_integer(den.substr(2));
    if (k.sign() < 0 || k > 1u << 20) {
      throw std::invalid_argument("exponent out of range");
    }
    exp = static_cast<std::uint32_t>(k);
  } else {
    BigInt d = parse_integer(den);
    if (d.sign() <= 0 || (d & (d - 1)) != 0) {
      throw std::invalid_argument(
          "denominator " + std::string(den) +
          " is not a power of two; only dyadic rationals are finitely born");
    }
    exp = static_cast<std::uint32_t>(boost::multiprecision::msb(d));
  }
  return Dyadic(std::move(num), exp);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::uint32_t e = std::max(a.exp_, b.exp_);
  BigInt n = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
  return Dyadic(std::move(n), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

Dyadic operator-(const Dyadic& a) {
  Dyadic r = a;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::uint32_t e = std::max(a.exp_, b.exp_);
  BigInt l = a.num_ << (e - a.exp_);
  BigInt r = b.num_ << (e - b.exp_);
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
  return os << d.to_string();
}

Dyadic simplest_between(const std::optional<Dyadic>& lo,
                        const std::optional<Dyadic>& hi) {
  if (lo && hi && !(*lo < *hi)) {
    throw EmptyInterval("empty interval (" + lo->to_string() + ", " +
                        hi->to_string() + ")");
  }
  bool lo_below_zero = !lo || lo->sign() < 0;
  bool hi_above_zero = !hi || hi->sign() > 0;
  if (lo_below_zero && hi_above_zero) return Dyadic(0);

  // The interval lies on one side of zero; try the integer nearest zero.
  if (!lo_below_zero) {
    Dyadic candidate(lo->floor() + 1);
    if (!hi || candidate < *hi) return candidate;
  } else {
    Dyadic candidate(hi->ceil() - 1);
    if (!lo || *lo < candidate) return candidate;
  }

  // Both bounds are present and no integer fits. The first exponent k with a
  // multiple of 2^-k strictly inside holds exactly one such point.
  for (std::uint32_t k = 1;; ++k) {
    BigInt m = floor_shift(lo->num() << k, lo->exp()) + 1;
    Dyadic candidate(m, k);
    if (candidate < *hi) return candidate;
  }
}

}  // namespace surreal
