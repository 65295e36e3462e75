#include "pesp/evaluate.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "pesp/errors.h"
#include "pesp/periodic.h"

namespace pesp {
namespace {

void CheckActivity(const Instance& instance, const Activity& a, std::vector<Violation>& out) {
  const int period = instance.period;
  const std::size_t num_events = instance.events.size();
  auto report = [&](std::string rule) { out.push_back({a.id, std::move(rule)}); };

  if (a.tail >= num_events || a.head >= num_events) {
    report("endpoint refers to an unknown event");
    return;
  }
  if (a.lower < 0 || a.lower > period - 1) report("lower bound must lie in [0, T-1]");
  if (a.upper < a.lower || a.upper > a.lower + period - 1) {
    report("upper bound must lie in [lower, lower + T - 1]");
  }
  if (a.weight.numerator() < 0) report("weight must be nonnegative");

  const Event& tail = instance.events[a.tail];
  const Event& head = instance.events[a.head];
  switch (a.kind) {
    case ActivityKind::kEnergy: {
      if (tail.kind != EventKind::kDeparture || head.kind != EventKind::kArrival) {
        report("energy activity must run from a departure to an arrival");
        break;
      }
      if (a.lower != 0 || a.upper != period - 1) report("energy activity must have bounds [0, T-1]");
      if (a.weight.numerator() != 0) report("energy activity must have weight 0");
      if (tail.accel_time && head.brake_time && *tail.accel_time + *head.brake_time >= period) {
        // Tolerated by the solvers while both phases fit into one period.
        const bool blocking = std::max(*tail.accel_time, *head.brake_time) >= period;
        out.push_back({a.id, "acceleration time plus braking time must be smaller than T", blocking});
      }
      break;
    }
    case ActivityKind::kTransfer:
      if (a.upper != a.lower + period - 1) report("transfer activity must be free (upper = lower + T - 1)");
      break;
    case ActivityKind::kWait:
      if (tail.kind != EventKind::kArrival || head.kind != EventKind::kDeparture) {
        report("wait activity must run from an arrival to a departure");
      } else if (tail.line != head.line || tail.station != head.station) {
        report("wait activity must connect events of the same line and station");
      }
      break;
    case ActivityKind::kDrive:
    case ActivityKind::kHeadway:
      break;
  }
}

void CheckWaitStructure(const Instance& instance, std::vector<Violation>& out) {
  const std::size_t n = instance.events.size();
  std::vector<int> wait_out(n, 0), wait_in(n, 0);
  using Group = std::pair<std::string, std::string>;
  std::map<Group, std::tuple<int, int, int>> groups;  // arrivals, departures, waits
  for (const Event& e : instance.events) {
    auto& [arrivals, departures, waits] = groups[{e.line, e.station}];
    (e.kind == EventKind::kArrival ? arrivals : departures) += 1;
  }
  for (const Activity& a : instance.activities) {
    if (a.kind != ActivityKind::kWait || a.tail >= n || a.head >= n) continue;
    ++wait_out[a.tail];
    ++wait_in[a.head];
    const Event& tail = instance.events[a.tail];
    if (tail.line == instance.events[a.head].line && tail.station == instance.events[a.head].station) {
      std::get<2>(groups[{tail.line, tail.station}]) += 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (wait_out[i] > 1) out.push_back({instance.events[i].id, "arrival has more than one wait activity"});
    if (wait_in[i] > 1) out.push_back({instance.events[i].id, "departure has more than one wait activity"});
  }
  for (const auto& [group, counts] : groups) {
    const auto& [arrivals, departures, waits] = counts;
    if (waits != std::min(arrivals, departures)) {
      out.push_back({"", "wait activities of line '" + group.first + "' at station '" + group.second +
                             "' do not match arrivals to departures"});
    }
  }
}

}  // namespace

std::vector<Violation> ValidateInstance(const Instance& instance) {
  std::vector<Violation> out;
  if (instance.period < 1) {
    out.push_back({"", "period must be a positive integer"});
    return out;
  }
  std::set<std::string> event_ids;
  for (const Event& e : instance.events) {
    if (!event_ids.insert(e.id).second) out.push_back({e.id, "duplicate event id"});
    if (e.kind == EventKind::kArrival) {
      if (!e.brake_time || *e.brake_time <= 0) out.push_back({e.id, "arrival needs a positive braking time"});
      if (e.accel_time) out.push_back({e.id, "arrival must not carry an acceleration time"});
    } else {
      if (!e.accel_time || *e.accel_time <= 0) {
        out.push_back({e.id, "departure needs a positive acceleration time"});
      }
      if (e.brake_time) out.push_back({e.id, "departure must not carry a braking time"});
    }
  }
  std::set<std::string> activity_ids;
  for (const Activity& a : instance.activities) {
    if (!activity_ids.insert(a.id).second) out.push_back({a.id, "duplicate activity id"});
    CheckActivity(instance, a, out);
  }
  CheckWaitStructure(instance, out);
  return out;
}

int TensionOf(const Instance& instance, const Timetable& timetable, std::size_t activity) {
  if (activity >= instance.activities.size()) throw PreconditionError("unknown activity index");
  const Activity& a = instance.activities[activity];
  if (a.tail >= timetable.times.size() || a.head >= timetable.times.size() ||
      timetable.times[a.tail] == kUnscheduled || timetable.times[a.head] == kUnscheduled) {
    throw PreconditionError("activity '" + a.id + "' has an unscheduled endpoint");
  }
  return PeriodicTension(timetable.times[a.tail], timetable.times[a.head], a.lower, instance.period);
}

bool IsConstraining(const Instance& instance, const Activity& activity) {
  return activity.kind != ActivityKind::kEnergy && activity.upper - activity.lower < instance.period - 1;
}

Solution Evaluate(const Instance& instance, const Matching& matching, const Timetable& timetable) {
  if (timetable.times.size() != instance.events.size()) {
    throw PreconditionError("timetable size does not match the number of events");
  }
  for (std::size_t i = 0; i < timetable.times.size(); ++i) {
    const int t = timetable.times[i];
    if (t < 0 || t >= instance.period) {
      throw PreconditionError("event '" + instance.events[i].id + "' has no time in [0, T)");
    }
  }
  std::set<std::size_t> tails, heads;
  for (std::size_t idx : matching.selected) {
    if (idx >= instance.activities.size() || instance.activities[idx].kind != ActivityKind::kEnergy) {
      throw PreconditionError("matching contains a non-energy activity");
    }
    const Activity& a = instance.activities[idx];
    if (!tails.insert(a.tail).second || !heads.insert(a.head).second) {
      throw PreconditionError("matching selects two energy activities sharing an endpoint ('" + a.id + "')");
    }
  }

  Solution s;
  s.matching = matching;
  s.timetable = timetable;
  s.tensions.resize(instance.activities.size());
  for (std::size_t i = 0; i < instance.activities.size(); ++i) {
    const Activity& a = instance.activities[i];
    const int x = TensionOf(instance, timetable, i);
    if (x > a.upper) {
      throw InfeasibleTimetable(a.id, "activity '" + a.id + "' has tension " + std::to_string(x) +
                                          " above its upper bound " + std::to_string(a.upper));
    }
    s.tensions[i] = x;
    s.travel_time += a.weight * x;
  }
  for (std::size_t idx : matching.selected) {
    const Activity& a = instance.activities[idx];
    const int o = OverlapOfTension(s.tensions[idx], EnergyMinTime(instance, a), EnergyMaxTime(instance, a));
    s.overlaps[idx] = o;
    s.total_overlap += o;
  }
  return s;
}

std::vector<std::string> CheckSolution(const Instance& instance, const Solution& solution) {
  std::vector<std::string> problems;
  Solution fresh;
  try {
    fresh = Evaluate(instance, solution.matching, solution.timetable);
  } catch (const std::exception& e) {
    problems.emplace_back(e.what());
    return problems;
  }
  if (fresh.tensions != solution.tensions) problems.emplace_back("stored tensions differ from the timetable");
  if (fresh.overlaps != solution.overlaps) problems.emplace_back("stored overlaps differ from the timetable");
  if (fresh.travel_time != solution.travel_time) problems.emplace_back("stored travel time is wrong");
  if (fresh.total_overlap != solution.total_overlap) problems.emplace_back("stored total overlap is wrong");
  return problems;
}

}  // namespace pesp

namespace pesp {

std::vector<Violation> BlockingViolations(const Instance& instance) {
  std::vector<Violation> out = ValidateInstance(instance);
  std::erase_if(out, [](const Violation& v) { return !v.blocking; });
  return out;
}

}  // namespace pesp
