#pragma once

#include "surreal/arena.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace surreal {

enum class Sign : signed char { Minus = -1, Plus = 1 };

// A finite sign expansion; the empty sequence is 0.
class SignSeq {
 public:
  SignSeq() = default;
  explicit SignSeq(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  // Parses a string over '+' and '-'. Throws std::invalid_argument otherwise.
  static SignSeq parse(std::string_view text);

  const std::vector<Sign>& signs() const { return signs_; }
  std::size_t size() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  Sign operator[](std::size_t i) const { return signs_[i]; }
  void push_back(Sign s) { signs_.push_back(s); }

  std::string to_string() const;

  friend bool operator==(const SignSeq&, const SignSeq&) = default;

 private:
  std::vector<Sign> signs_;
};

// Lexicographic order where a missing entry sits strictly between - and +.
bool seq_lt(const SignSeq& s, const SignSeq& t);

// The children of a canonical node in the tree of numbers: {x^L | x} and
// {x | x^R}.
NodeId left_child(Arena& arena, NodeId canonical);
NodeId right_child(Arena& arena, NodeId canonical);

// Turns taken from 0 to the canonical form of x.
SignSeq encode(Arena& arena, NodeId x);

// Follows the turns from 0; always yields a canonical node.
NodeId decode(Arena& arena, const SignSeq& s);

}  // namespace surreal
