#pragma once

#include <stdexcept>
#include <string>

namespace hgmatch {

// Malformed input: bad JSON, schema violations, references to unknown
// vertices or edges. Messages carry enough location detail to fix the input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The operation's stated precondition does not hold for these arguments
// (e.g. cut not tight, hypergraph not matching covered).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search ran past its node budget. Results are never
// silently truncated; callers may retry with a larger budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A consequence the underlying theory guarantees failed to verify.
// This always indicates a bug, never a property of the input.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hgmatch
