#pragma once

#include <stdexcept>
#include <string>

namespace mcb {

// Malformed input: bad labels, invalid parameters, broken preconditions.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Instance outside the supported regime, or an exhausted search budget.
// The CLI maps this to exit code 3.
class ScopeError : public std::runtime_error {
 public:
  explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcb
