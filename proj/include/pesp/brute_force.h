#pragma once

#include "pesp/exact_solver.h"

namespace pesp {

inline constexpr std::size_t kBruteForceMaxEvents = 8;
inline constexpr int kBruteForceMaxPeriod = 12;

// Reference solver: enumerates every timetable (one event per connected
// component fixed at 0) and, for each feasible one, every matching.
// Throws PreconditionError beyond |E| <= 8, T <= 12 or on invalid input.
// Limits in the request are ignored.
SolveResult BruteForce(const SolveRequest& request);

}  // namespace pesp
