#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pesp/model.h"
#include "pesp/periodic.h"

namespace pesp {

// A connected component of the graph formed by the selected energy
// activities and all wait activities. Every event has at most one incoming
// and one outgoing arc there, so a component is a directed cycle or a
// directed path.
struct Component {
  bool is_cycle = false;
  // Events in traversal order. For a cycle the walk starts at the smallest
  // event index; for a path it starts at the node without incoming arc.
  std::vector<std::size_t> events;
  // arcs[k] runs from events[k] to events[k + 1] (cyclically for cycles).
  std::vector<std::size_t> arcs;
};

// Splits the events into cycles and paths over matching ∪ waits. Components
// are ordered by their smallest event index.
std::vector<Component> Decompose(const Instance& instance, const Matching& matching);

struct CycleStats {
  std::vector<std::size_t> cycle_arcs;
  std::int64_t low_sum = 0;   // Σ wait lower + Σ energy t^min
  std::int64_t high_sum = 0;  // Σ wait upper + Σ energy t^max
  std::int64_t delta = 0;     // distance of [low_sum, high_sum] to T·Z
  DeltaSide delta_side = DeltaSide::kNone;
  // Energy arc with the smallest t^min (first in cycle order on ties).
  std::size_t min_energy_arc = 0;
  // Σ t^min over the energy arcs of the cycle.
  std::int64_t weight = 0;
};

// Throws PreconditionError for a path or a cycle without energy arcs.
CycleStats CycleStatsOf(const Instance& instance, const Component& cycle);

// Maximum overlap a cycle can realize: weight - min{t^min(a0), delta}.
std::int64_t BestCycleOverlap(const Instance& instance, const CycleStats& stats);

// Times for the events of one component that maximize its overlap; every
// other event stays kUnscheduled. The lexicographically smallest event id
// of the component is anchored at 0.
Timetable BuildCycleTimetable(const Instance& instance, const Matching& matching, const Component& component);

// BuildCycleTimetable over all components of Decompose(matching), merged.
// Only meaningful when waits and energy arcs are the sole constraining
// activities (one-station networks).
Timetable TimetableForMatching(const Instance& instance, const Matching& matching);

// All arrivals at arrival_time, all departures l^max later, where l^max is
// the largest lower bound over all activities. Throws PreconditionError
// when a wait upper bound forbids that.
Timetable BuildBaselTimetable(const Instance& instance, int arrival_time);

}  // namespace pesp
