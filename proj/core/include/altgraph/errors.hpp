#pragma once

#include <stdexcept>
#include <string>

namespace altgraph {

// Instance exceeds a size guard (degree, vertex count, subset count...).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search ran past its node or wall-clock budget.
class BudgetExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

// Input violates an operation's hypothesis (disconnected, irregular, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed object contradicts the structure a check expects, such as an
// automorphism whose image of a canonical set is not canonical.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace altgraph
