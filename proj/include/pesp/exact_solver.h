#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "pesp/model.h"
#include "pesp/rational.h"

namespace pesp {

enum class Objective { kMinTravel, kMaxOverlap };
enum class SolveStatus { kOptimal, kInfeasible, kLimitReached };

struct SolveRequest {
  Instance instance;
  Objective objective = Objective::kMinTravel;
  // ε-constraint: minimum total overlap, only used with kMinTravel.
  std::int64_t overlap_floor = 0;
  std::optional<std::chrono::duration<double>> time_limit;
  std::optional<std::int64_t> node_limit;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Solution> solution;
  // Best proven bound on the objective (lower bound for kMinTravel, upper
  // bound for kMaxOverlap). Equals the solution's objective when optimal.
  Rational bound{0};
  std::int64_t nodes = 0;
};

Rational ObjectiveValue(const Solution& solution, Objective objective);

std::string_view ToString(SolveStatus status);
std::string_view ToString(Objective objective);

// Depth-first branch and bound over event times. One event per connected
// component is fixed at 0, every other event branches over 0..T-1 in order
// of decreasing incident weight; domains are filtered by forward checking on
// the constraining activities. For a complete timetable the best matching
// is a maximum-weight assignment on the realized overlaps.
//
// Among optimal timetables the result is the lexicographically smallest
// one when events are read in branching order. Throws PreconditionError if
// the instance does not validate or the floor is negative.
SolveResult SolveExact(const SolveRequest& request);

}  // namespace pesp
