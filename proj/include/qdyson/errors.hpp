#pragma once

#include <stdexcept>
#include <string>

namespace qdyson {

// Invalid arguments from the caller: malformed vectors, unsorted partitions,
// mismatched variable counts, duplicate interpolation nodes.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Division by the zero element of a field or ring.
class ArithmeticError : public std::domain_error {
 public:
  explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

// A closed form was evaluated where one of its factors 1 - q^k vanishes in a
// denominator.
class PoleError : public ArithmeticError {
 public:
  explicit PoleError(const std::string& what) : ArithmeticError(what) {}
};

// The hypotheses of a recursion are not met (repeated maximum, empty block).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qdyson
