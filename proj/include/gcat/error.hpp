#pragma once

#include <stdexcept>
#include <string>

namespace gcat {

// Input violates a documented invariant (bad file, face missing, index out of range).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but outside what the library handles.
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mapping-torus base piece wraps around the circle, so no trivialization exists.
class NoTrivialization : public UnsupportedInput {
 public:
  using UnsupportedInput::UnsupportedInput;
};

}  // namespace gcat
