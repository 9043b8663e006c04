#pragma once

#include <stdexcept>
#include <string>

namespace cyldom {

/// A precondition on an argument was violated (bad n, m, mismatched sizes).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap (word length, memory budget, oracle budget) was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity broke an internal invariant (e.g. a zero growth rate).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyldom
