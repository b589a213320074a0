#pragma once

#include <stdexcept>
#include <string>

namespace nhm {

/// Malformed text input (points, sets, descriptors).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its domain: invalid point, tag mismatch,
/// violated ordering constraint, unsupported space.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace nhm
