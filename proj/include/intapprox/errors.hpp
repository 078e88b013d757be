#ifndef INTAPPROX_ERRORS_HPP
#define INTAPPROX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intapprox {

// Incompatible matrix or module shapes.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The vertices handed to convex_closure are not connected, so no minimum
// interval containing them exists.
struct NoJoinError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Requested computation is outside what this library implements.
struct UnsupportedError : std::logic_error {
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Shape, Commutativity };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error(describe(kind, line, what)), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  // 1-based line of the offending input; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string describe(Kind kind, std::size_t line, const std::string& what) {
    std::string prefix;
    switch (kind) {
      case Kind::Syntax: prefix = "syntax error"; break;
      case Kind::Shape: prefix = "shape error"; break;
      case Kind::Commutativity: prefix = "commutativity error"; break;
    }
    if (line != 0) prefix += " at line " + std::to_string(line);
    return prefix + ": " + what;
  }

  Kind kind_;
  std::size_t line_;
};

}  // namespace intapprox

#endif  // INTAPPROX_ERRORS_HPP
