#pragma once

#include <stdexcept>
#include <string>

namespace betent {

/// Failure categories. Each maps onto one CLI exit code.
enum class ErrorKind {
  parse,           // malformed input, nonpositive weight, empty graph
  degenerate,      // measure undefined on this graph (edgeless, all-zero counts)
  unknown_vertex,  // label or index not in the graph
  verification,    // registry expectation mismatch
  overflow,        // path count exceeded 64 bits
  size_limit,      // brute-force oracle called on too large a graph
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown by parsers; carries the 1-based line where the problem was found (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace betent
