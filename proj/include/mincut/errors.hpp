#pragma once

#include <stdexcept>
#include <string>

namespace mincut {

// Malformed input: bad vertex ids, self-loops, capacity overflow, parse errors.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

// A precondition between modules was violated (e.g. a flow that is not maximum,
// or a predicate that forbids a terminal vertex).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mincut
