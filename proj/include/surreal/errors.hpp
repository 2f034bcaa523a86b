#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace surreal {

// Base of everything the library throws on a contract violation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A left option was not strictly less than a right option. Carries the
// offending arena indices; callers with access to the oracle render values.
class CutViolation : public Error {
 public:
  CutViolation(std::uint32_t left, std::uint32_t right)
      : Error("cut violation: left option #" + std::to_string(left) +
              " is not less than right option #" + std::to_string(right)),
        left_(left),
        right_(right) {}

  std::uint32_t left() const { return left_; }
  std::uint32_t right() const { return right_; }

 private:
  std::uint32_t left_;
  std::uint32_t right_;
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

class NegativeOperand : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotInTree : public Error {
 public:
  using Error::Error;
};

class SameNode : public Error {
 public:
  using Error::Error;
};

// Raised by evaluation when an operand has the wrong kind (e.g. a boolean
// used as a summand).
class EvalError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected, std::string found)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected +
              (found.empty() ? std::string() : ", found '" + found + "'")),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace surreal
