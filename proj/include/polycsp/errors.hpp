#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycsp {

// Structural misuse: ring/arity/mode mismatches, unsupported rings, bad arguments.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation exceeded a configured bound (term guard, oracle limit, search bound).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; carries the 1-based position when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace polycsp
