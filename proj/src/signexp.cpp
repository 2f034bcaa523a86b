#include "surreal/signexp.hpp"

#include "surreal/arithmetic.hpp"

#include <algorithm>
#include <stdexcept>

namespace surreal {

SignSeq SignSeq::parse(std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char ch : text) {
    if (ch == '+') {
      signs.push_back(Sign::Plus);
    } else if (ch == '-') {
      signs.push_back(Sign::Minus);
    } else {
      throw std::invalid_argument("sign expansion may only contain '+' and '-'");
    }
  }
  return SignSeq(std::move(signs));
}

std::string SignSeq::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(s == Sign::Plus ? '+' : '-');
  return out;
}

bool seq_lt(const SignSeq& s, const SignSeq& t) {
  std::size_t n = std::max(s.size(), t.size());
  for (std::size_t i = 0; i < n; ++i) {
    int a = i < s.size() ? static_cast<int>(s[i]) : 0;
    int b = i < t.size() ? static_cast<int>(t[i]) : 0;
    if (a != b) return a < b;
  }
  return false;
}

NodeId left_child(Arena& arena, NodeId canonical) {
  auto l = arena.left(canonical);
  std::vector<NodeId> left(l.begin(), l.end());
  std::vector<NodeId> right{canonical};
  return arena.make(left, right);
}

NodeId right_child(Arena& arena, NodeId canonical) {
  auto r = arena.right(canonical);
  std::vector<NodeId> left{canonical};
  std::vector<NodeId> right(r.begin(), r.end());
  return arena.make(left, right);
}

SignSeq encode(Arena& arena, NodeId x) {
  NodeId target = canonicalize(arena, x);
  SignSeq out;
  NodeId at = arena.zero();
  while (at != target) {
    if (arena.lt(at, target)) {
      out.push_back(Sign::Plus);
      at = right_child(arena, at);
    } else {
      out.push_back(Sign::Minus);
      at = left_child(arena, at);
    }
  }
  return out;
}

NodeId decode(Arena& arena, const SignSeq& s) {
  NodeId at = arena.zero();
  for (Sign sign : s.signs()) {
    at = sign == Sign::Plus ? right_child(arena, at) : left_child(arena, at);
  }
  return at;
}

}  // namespace surreal
