#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pesp/model.h"

namespace pesp {

struct Violation {
  // Id of the offending event or activity; empty for instance-level rules.
  std::string element;
  std::string rule;
  // False only for t^ac + t^br >= T with both times below T: the overlap
  // formula still applies and the solvers accept the instance.
  bool blocking = true;
};

// Checks every structural invariant of an instance. An empty result means
// the instance is well formed.
std::vector<Violation> ValidateInstance(const Instance& instance);

// The subset of ValidateInstance the algorithms refuse to work with.
std::vector<Violation> BlockingViolations(const Instance& instance);

// Periodic tension of one activity. Throws PreconditionError if an
// endpoint is unscheduled or the activity index is out of range.
int TensionOf(const Instance& instance, const Timetable& timetable, std::size_t activity);

// True for activities whose bounds can restrict a timetable, i.e. every
// non-energy activity with upper - lower < T - 1.
bool IsConstraining(const Instance& instance, const Activity& activity);

// Computes tensions, overlaps of the selected energy activities and both
// objective values. Throws InfeasibleTimetable naming the first activity
// whose tension leaves its bounds, PreconditionError for a malformed
// matching or timetable.
Solution Evaluate(const Instance& instance, const Matching& matching, const Timetable& timetable);

// Recomputes a solution from its matching and timetable and lists every
// stored field that disagrees. Empty means consistent.
std::vector<std::string> CheckSolution(const Instance& instance, const Solution& solution);

}  // namespace pesp
