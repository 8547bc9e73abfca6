#pragma once

#include <stdexcept>
#include <string>

namespace secluded {

// Raised for malformed caller input: unknown vertex ids, violated
// preconditions, unparsable files. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal invariant of an algorithm is broken.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace secluded
