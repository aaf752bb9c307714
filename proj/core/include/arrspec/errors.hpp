#pragma once

#include <stdexcept>
#include <string>

namespace arrspec {

/// Bad user input: malformed documents, degenerate arrangements, bad arguments.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A library function was called outside its documented domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The computed ring or classes violate a structural guarantee (rank checks, integrality).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Should be unreachable; indicates an arithmetic or bookkeeping bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arrspec
