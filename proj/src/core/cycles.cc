#include "pesp/cycles.h"

#include <algorithm>
#include <limits>

#include "pesp/errors.h"
#include "pesp/evaluate.h"

namespace pesp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool IsEnergy(const Instance& instance, std::size_t arc) {
  return instance.activities[arc].kind == ActivityKind::kEnergy;
}

// Tensions realizing the optimum of one component, aligned with its arcs.
std::vector<std::int64_t> ComponentTensions(const Instance& instance, const Component& component) {
  const std::int64_t period = instance.period;
  std::vector<std::int64_t> x(component.arcs.size());
  std::vector<std::int64_t> room(component.arcs.size());
  for (std::size_t k = 0; k < component.arcs.size(); ++k) {
    const Activity& a = instance.activities[component.arcs[k]];
    if (a.kind == ActivityKind::kEnergy) {
      x[k] = EnergyMinTime(instance, a);
      room[k] = EnergyMaxTime(instance, a) - x[k];
    } else {
      x[k] = a.lower;
      room[k] = a.upper - a.lower;
    }
  }
  if (!component.is_cycle) return x;

  const CycleStats stats = CycleStatsOf(instance, component);
  const auto a0 = static_cast<std::size_t>(
      std::find(component.arcs.begin(), component.arcs.end(), stats.min_energy_arc) - component.arcs.begin());
  const Activity& critical = instance.activities[stats.min_energy_arc];
  switch (stats.delta_side) {
    case DeltaSide::kNone: {
      // Lift tensions from their lower ends until the sum hits a multiple of T.
      const std::int64_t target = FloorDiv(stats.low_sum + period - 1, period) * period;
      std::int64_t slack = target - stats.low_sum;
      for (std::size_t k = 0; k < x.size() && slack > 0; ++k) {
        const std::int64_t step = std::min(slack, room[k]);
        x[k] += step;
        slack -= step;
      }
      break;
    }
    case DeltaSide::kLower:
      x[a0] = FloorMod(EnergyMinTime(instance, critical) - stats.delta, period);
      break;
    case DeltaSide::kUpper:
      for (std::size_t k = 0; k < x.size(); ++k) x[k] += room[k];
      x[a0] = FloorMod(EnergyMaxTime(instance, critical) + stats.delta, period);
      break;
  }
  return x;
}

}  // namespace

std::vector<Component> Decompose(const Instance& instance, const Matching& matching) {
  const std::size_t n = instance.events.size();
  std::vector<std::size_t> next(n, kNone), prev(n, kNone);
  auto link = [&](std::size_t arc) {
    const Activity& a = instance.activities[arc];
    if (next[a.tail] != kNone || prev[a.head] != kNone) {
      throw PreconditionError("activity '" + a.id + "' shares an endpoint with another wait or selected energy arc");
    }
    next[a.tail] = arc;
    prev[a.head] = arc;
  };
  for (std::size_t i = 0; i < instance.activities.size(); ++i) {
    if (instance.activities[i].kind == ActivityKind::kWait) link(i);
  }
  for (std::size_t arc : matching.selected) {
    if (arc >= instance.activities.size() || !IsEnergy(instance, arc)) {
      throw PreconditionError("matching contains a non-energy activity");
    }
    link(arc);
  }

  std::vector<bool> seen(n, false);
  std::vector<Component> components;
  auto walk = [&](std::size_t start, bool is_cycle) {
    Component c;
    c.is_cycle = is_cycle;
    std::size_t v = start;
    while (true) {
      seen[v] = true;
      c.events.push_back(v);
      const std::size_t arc = next[v];
      if (arc == kNone) break;
      const std::size_t w = instance.activities[arc].head;
      c.arcs.push_back(arc);
      if (w == start) break;
      v = w;
    }
    components.push_back(std::move(c));
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (prev[v] == kNone) walk(v, false);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) walk(v, true);
  }
  std::sort(components.begin(), components.end(), [](const Component& a, const Component& b) {
    return *std::min_element(a.events.begin(), a.events.end()) < *std::min_element(b.events.begin(), b.events.end());
  });
  return components;
}

CycleStats CycleStatsOf(const Instance& instance, const Component& cycle) {
  if (!cycle.is_cycle) throw PreconditionError("cycle statistics need a cycle, got a path");
  CycleStats stats;
  stats.cycle_arcs = cycle.arcs;
  int best_min = std::numeric_limits<int>::max();
  bool has_energy = false;
  for (std::size_t arc : cycle.arcs) {
    const Activity& a = instance.activities[arc];
    if (a.kind == ActivityKind::kEnergy) {
      const int t_min = EnergyMinTime(instance, a);
      stats.low_sum += t_min;
      stats.high_sum += EnergyMaxTime(instance, a);
      stats.weight += t_min;
      if (t_min < best_min) {
        best_min = t_min;
        stats.min_energy_arc = arc;
      }
      has_energy = true;
    } else {
      stats.low_sum += a.lower;
      stats.high_sum += a.upper;
    }
  }
  if (!has_energy) throw PreconditionError("cycle contains no energy activity");
  const MultipleDistance d = DistanceToMultiple(stats.low_sum, stats.high_sum, instance.period);
  stats.delta = d.distance;
  stats.delta_side = d.side;
  return stats;
}

std::int64_t BestCycleOverlap(const Instance& instance, const CycleStats& stats) {
  const int t_min = EnergyMinTime(instance, instance.activities[stats.min_energy_arc]);
  return stats.weight - std::min<std::int64_t>(t_min, stats.delta);
}

Timetable BuildCycleTimetable(const Instance& instance, const Matching& matching, const Component& component) {
  (void)matching;
  Timetable timetable = Timetable::Unscheduled(instance.events.size());
  if (component.events.empty()) return timetable;
  const std::vector<std::int64_t> x = ComponentTensions(instance, component);

  std::vector<std::int64_t> offset(component.events.size(), 0);
  for (std::size_t k = 0; k + 1 < component.events.size(); ++k) offset[k + 1] = offset[k] + x[k];

  std::size_t anchor = 0;
  for (std::size_t k = 1; k < component.events.size(); ++k) {
    if (instance.events[component.events[k]].id < instance.events[component.events[anchor]].id) anchor = k;
  }
  for (std::size_t k = 0; k < component.events.size(); ++k) {
    timetable.times[component.events[k]] = static_cast<int>(FloorMod(offset[k] - offset[anchor], instance.period));
  }
  return timetable;
}

Timetable TimetableForMatching(const Instance& instance, const Matching& matching) {
  Timetable merged = Timetable::Unscheduled(instance.events.size());
  for (const Component& c : Decompose(instance, matching)) {
    const Timetable part = BuildCycleTimetable(instance, matching, c);
    for (std::size_t v : c.events) merged.times[v] = part.times[v];
  }
  return merged;
}

Timetable BuildBaselTimetable(const Instance& instance, int arrival_time) {
  int l_max = 0;
  for (const Activity& a : instance.activities) l_max = std::max(l_max, a.lower);
  Timetable timetable = Timetable::Unscheduled(instance.events.size());
  const int arr = static_cast<int>(FloorMod(arrival_time, instance.period));
  const int dep = static_cast<int>(FloorMod(std::int64_t{arrival_time} + l_max, instance.period));
  for (std::size_t i = 0; i < instance.events.size(); ++i) {
    timetable.times[i] = instance.events[i].kind == EventKind::kArrival ? arr : dep;
  }
  for (std::size_t i = 0; i < instance.activities.size(); ++i) {
    const Activity& a = instance.activities[i];
    if (a.kind != ActivityKind::kWait) continue;
    if (TensionOf(instance, timetable, i) > a.upper) {
      throw PreconditionError("Basel structure infeasible: wait '" + a.id + "' cannot last " +
                              std::to_string(l_max));
    }
  }
  return timetable;
}

}  // namespace pesp
