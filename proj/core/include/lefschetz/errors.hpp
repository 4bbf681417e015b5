#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

// Malformed or inconsistent input: wrong sizes, out-of-range indices,
// unparseable words, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured budget (word length, search states, polygon cap) was hit.
// Never a mathematical verdict.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request falls outside what the implementation can compute exactly
// (e.g. immersed polygon counts).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lefschetz
