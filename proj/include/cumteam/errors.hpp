#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cumteam {

// Syntax error in formula text. Offsets are 1-based character positions.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A formula or query refers to something outside the domain it is evaluated over,
// or uses a construct the selected logic does not support.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration or evaluation refused because an input exceeds a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed relational model, universe, or entailment relation.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed circuit netlist or circuit-encoded model. Line numbers are 1-based, 0 if unknown.
class CircuitError : public std::runtime_error {
 public:
  explicit CircuitError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cumteam
