#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadcf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ComputationError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public ComputationError {
 public:
  BudgetExceeded(const std::string& what, std::size_t steps)
      : ComputationError(what + " (" + std::to_string(steps) + " steps)"), steps_(steps) {}
  std::size_t steps() const { return steps_; }

 private:
  std::size_t steps_;
};

}  // namespace quadcf
