#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace queens {

// Square or board side outside the admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A line that does not meet the board.
class EmptyIntersectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuplicateSquareError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Placement violates an operation's precondition (e.g. three in a line).
class InvalidPlacementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The placement is too large for the lower-bound argument to say anything.
class BoundNotApplicableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The certificate planner could not produce a verified plan. Never expected.
class PlannerError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Search stopped before it was exhaustive. Never means "none exists".
// For solve/table, `lower` is the proven lower bound and `upper` a known
// upper bound, if any.
class InconclusiveError : public std::runtime_error {
 public:
  InconclusiveError(const std::string& what, int lower, std::optional<int> upper = std::nullopt)
      : std::runtime_error(what), lower(lower), upper(upper) {}

  int lower;
  std::optional<int> upper;
};

}  // namespace queens
