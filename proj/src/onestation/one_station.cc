#include <algorithm>
#include <map>
#include <set>

#include "pesp/cycles.h"
#include "pesp/errors.h"
#include "pesp/evaluate.h"
#include "pesp/one_station.h"

namespace pesp {

Instance BuildOneStation(const OneStationSpec& spec, int period) {
  const int n = spec.n;
  auto fail = [](const std::string& what) { throw PreconditionError("one-station spec: " + what); };
  if (n < 1) fail("need at least one line");
  if (period < 1) fail("period must be positive");
  if (static_cast<int>(spec.accel_times.size()) != n || static_cast<int>(spec.brake_times.size()) != n ||
      static_cast<int>(spec.wait_bounds.size()) != n) {
    fail("per-line vectors must have n entries");
  }
  if (!spec.wait_weights.empty() && static_cast<int>(spec.wait_weights.size()) != n) fail("wait_weights size");
  if (!spec.line_names.empty() && static_cast<int>(spec.line_names.size()) != n) fail("line_names size");

  std::vector<std::string> names = spec.line_names;
  if (names.empty()) {
    for (int k = 0; k < n; ++k) names.push_back("L" + std::to_string(k + 1));
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) fail("duplicate line names");

  for (int k = 0; k < n; ++k) {
    if (spec.accel_times[k] <= 0 || spec.brake_times[k] <= 0) fail("times must be positive");
    const auto [l, u] = spec.wait_bounds[k];
    if (l < 0 || l > period - 1 || u < l || u > l + period - 1) fail("bad wait bounds for line " + names[k]);
  }

  Instance inst;
  inst.period = period;
  for (int k = 0; k < n; ++k) {
    Event arr{names[k] + "_arr", EventKind::kArrival, names[k], spec.station, spec.brake_times[k], std::nullopt};
    Event dep{names[k] + "_dep", EventKind::kDeparture, names[k], spec.station, std::nullopt, spec.accel_times[k]};
    inst.events.push_back(std::move(arr));
    inst.events.push_back(std::move(dep));
  }
  auto arr = [](int k) { return static_cast<std::size_t>(2 * k); };
  auto dep = [](int k) { return static_cast<std::size_t>(2 * k + 1); };

  for (int k = 0; k < n; ++k) {
    const Rational w = spec.wait_weights.empty() ? Rational(0) : spec.wait_weights[k];
    inst.activities.push_back(
        {"w_" + names[k], ActivityKind::kWait, arr(k), dep(k), spec.wait_bounds[k].first, spec.wait_bounds[k].second, w});
  }
  if (spec.transfers) {
    for (const TransferSpec& t : *spec.transfers) {
      if (t.from_line < 0 || t.from_line >= n || t.to_line < 0 || t.to_line >= n) fail("transfer line out of range");
      if (t.lower < 0 || t.lower > period - 1) fail("bad transfer lower bound");
      inst.activities.push_back({"t_" + names[t.from_line] + "_" + names[t.to_line], ActivityKind::kTransfer,
                                 arr(t.from_line), dep(t.to_line), t.lower, t.lower + period - 1, t.weight});
    }
  }
  std::vector<std::pair<int, int>> pairs;
  if (spec.energy_arcs) {
    pairs = *spec.energy_arcs;
  } else {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) pairs.emplace_back(j, i);
    }
  }
  std::set<std::pair<int, int>> seen;
  for (auto [j, i] : pairs) {
    if (j < 0 || j >= n || i < 0 || i >= n) fail("energy pair out of range");
    if (!seen.insert({j, i}).second) fail("duplicate energy pair");
    if (std::max(spec.accel_times[j], spec.brake_times[i]) >= period ||
        (!spec.allow_wide_windows && spec.accel_times[j] + spec.brake_times[i] >= period)) {
      fail("t_ac + t_br must stay below the period");
    }
    inst.activities.push_back(
        {"e_" + names[j] + "_" + names[i], ActivityKind::kEnergy, dep(j), arr(i), 0, period - 1, Rational(0)});
  }
  return inst;
}

OneStationView ViewOf(const Instance& instance) {
  auto fail = [](const std::string& what) { throw PreconditionError("not a one-station network: " + what); };
  if (const auto v = BlockingViolations(instance); !v.empty()) fail(v.front().element + ": " + v.front().rule);
  OneStationView view;
  std::map<std::string, int> line_of;
  for (const Event& e : instance.events) {
    if (e.station != instance.events.front().station) fail("more than one station");
    if (line_of.emplace(e.line, view.n).second) {
      view.lines.push_back(e.line);
      ++view.n;
    }
  }
  constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
  view.arrival.assign(view.n, kMissing);
  view.departure.assign(view.n, kMissing);
  view.wait.assign(view.n, kMissing);
  for (std::size_t v = 0; v < instance.events.size(); ++v) {
    const Event& e = instance.events[v];
    auto& slot = e.kind == EventKind::kArrival ? view.arrival : view.departure;
    if (slot[line_of[e.line]] != kMissing) fail("line '" + e.line + "' has two events of the same kind");
    slot[line_of[e.line]] = v;
  }
  for (int k = 0; k < view.n; ++k) {
    if (view.arrival[k] == kMissing || view.departure[k] == kMissing) fail("line '" + view.lines[k] + "' is incomplete");
    view.brake.push_back(*instance.events[view.arrival[k]].brake_time);
    view.accel.push_back(*instance.events[view.departure[k]].accel_time);
  }
  view.wait_lower.assign(view.n, 0);
  view.wait_upper.assign(view.n, 0);
  view.energy.assign(view.n, std::vector<std::optional<std::size_t>>(view.n));
  std::size_t energy_count = 0;
  for (std::size_t k = 0; k < instance.activities.size(); ++k) {
    const Activity& a = instance.activities[k];
    const int tail_line = line_of[instance.events[a.tail].line];
    const int head_line = line_of[instance.events[a.head].line];
    switch (a.kind) {
      case ActivityKind::kWait:
        if (view.wait[tail_line] != kMissing) fail("line '" + view.lines[tail_line] + "' has two waits");
        view.wait[tail_line] = k;
        view.wait_lower[tail_line] = a.lower;
        view.wait_upper[tail_line] = a.upper;
        break;
      case ActivityKind::kEnergy:
        if (view.energy[tail_line][head_line]) fail("parallel energy activities");
        view.energy[tail_line][head_line] = k;
        ++energy_count;
        break;
      case ActivityKind::kTransfer:
        break;
      default:
        fail("activity '" + a.id + "' is neither wait, transfer nor energy");
    }
  }
  for (int k = 0; k < view.n; ++k) {
    if (view.wait[k] == kMissing) fail("line '" + view.lines[k] + "' has no wait");
  }
  view.all_energy = energy_count == static_cast<std::size_t>(view.n) * view.n;
  return view;
}

bool IsOneStation(const Instance& instance) {
  try {
    ViewOf(instance);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

std::int64_t MatchingWeight(const Instance& instance, const Matching& matching) {
  std::int64_t total = 0;
  for (std::size_t k : matching.selected) total += EnergyMinTime(instance, instance.activities[k]);
  return total;
}

Solution SolveForMatching(const Instance& instance, const Matching& matching) {
  return Evaluate(instance, matching, TimetableForMatching(instance, matching));
}

}  // namespace pesp
