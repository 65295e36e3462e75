#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pesp {

// Malformed instance text or flag values.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an algorithm does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A timetable violates the bounds of some activity.
class InfeasibleTimetable : public std::runtime_error {
 public:
  InfeasibleTimetable(std::string activity_id, const std::string& what)
      : std::runtime_error(what), activity_id_(std::move(activity_id)) {}

  const std::string& activity_id() const { return activity_id_; }

 private:
  std::string activity_id_;
};

}  // namespace pesp
