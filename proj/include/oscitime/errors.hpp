#pragma once

#include <stdexcept>

namespace oscitime {

// Raised when an operation would push a function past the degree,
// harmonic, or support bounds.  Growth is reported, never truncated.
class support_overflow_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two internal evaluation routes of the same quantity
// disagree beyond tolerance.  Signals an algebra bug, not bad input.
class inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace oscitime
