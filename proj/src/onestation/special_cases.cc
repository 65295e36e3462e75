#include <algorithm>
#include <numeric>

#include "pesp/cycles.h"
#include "pesp/errors.h"
#include "pesp/one_station.h"
#include "pesp/periodic.h"

namespace pesp {
namespace {

bool AllEqual(const std::vector<int>& v) { return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end(); }

// Lines sorted by t ascending, ties by line index.
std::vector<int> SortedLines(const OneStationView& view) {
  std::vector<int> order(view.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return view.accel[a] < view.accel[b]; });
  return order;
}

}  // namespace

bool HasFreeWaits(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  for (int k = 0; k < view.n; ++k) {
    if (view.wait_upper[k] != view.wait_lower[k] + instance.period - 1) return false;
  }
  return true;
}

bool HasUniformTimes(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  return view.all_energy && (AllEqual(view.accel) || AllEqual(view.brake));
}

bool HasEqualTimes(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  return view.all_energy && view.accel == view.brake;
}

std::int64_t LargePeriodThreshold(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  std::int64_t wait_max = 0, energy_max = 0;
  for (int k = 0; k < view.n; ++k) wait_max = std::max<std::int64_t>(wait_max, view.wait_upper[k]);
  for (const Activity& a : instance.activities) {
    if (a.kind != ActivityKind::kEnergy) continue;
    energy_max = std::max<std::int64_t>(energy_max, EnergyMinTime(instance, a) + EnergyMaxTime(instance, a));
  }
  return wait_max + energy_max;
}

bool HasLargePeriod(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  return view.all_energy && instance.period >= view.n * LargePeriodThreshold(instance);
}

Solution SolveFreeWaiting(const Instance& instance) {
  if (!HasFreeWaits(instance)) throw PreconditionError("free-waiting solver needs every wait to be free");
  // With a free wait on every cycle [L, U] spans a full period, so each
  // cycle reaches a multiple of T without giving up any overlap.
  return SolveForMatching(instance, MaxWeightMatching(instance).matching);
}

Solution SolveUniformTimes(const Instance& instance) {
  if (!HasUniformTimes(instance)) throw PreconditionError("uniform solver needs equal acceleration or braking times");
  const int n = ViewOf(instance).n;
  std::vector<int> next(n);
  for (int k = 0; k < n; ++k) next[k] = (k + 1) % n;
  return SolveForMatching(instance, MakeHamiltonianCycle(instance, std::move(next)).report.matching);
}

Solution SolveLargePeriod(const Instance& instance) {
  if (!HasLargePeriod(instance)) throw PreconditionError("period is below n * u_max");
  const OneStationView view = ViewOf(instance);
  const HamiltonianCycle cycle = MaxWeightHamiltonianCycle(instance);
  // Open the cycle at its lightest arc (first in line order).
  std::vector<std::size_t> arcs;
  bool dropped = false;
  for (int k = 0; k < view.n; ++k) {
    const int w = std::min(view.accel[k], view.brake[cycle.next[k]]);
    if (!dropped && w == cycle.min_arc_weight) {
      dropped = true;
      continue;
    }
    arcs.push_back(*view.energy[k][cycle.next[k]]);
  }
  return SolveForMatching(instance, MakeMatching(std::move(arcs)));
}

std::int64_t ContiguousCycleOverlap(std::span<const int> t, std::span<const std::pair<int, int>> waits, int s, int l,
                                    int period) {
  if (t.size() != waits.size()) throw PreconditionError("times and waits differ in length");
  if (!std::is_sorted(t.begin(), t.end())) throw PreconditionError("train times must be sorted ascending");
  if (s < 0 || s > l || l >= static_cast<int>(t.size())) throw PreconditionError("bad block range");
  // Arcs dep(k) -> arr(k-1) for k = s+1..l, closed by dep(s) -> arr(l).
  std::int64_t inner = 0, low = t[s], high = t[l];
  for (int k = s; k <= l; ++k) {
    low += waits[k].first;
    high += waits[k].second;
    if (k < l) inner += t[k];
    if (k > s) high += t[k];
  }
  low += inner;
  const std::int64_t delta = DistanceToMultiple(low, high, period).distance;
  return inner + std::max<std::int64_t>(t[s] - delta, 0);
}

EqualTimesResult SolveEqualTimesDP(const Instance& instance) {
  if (!HasEqualTimes(instance)) throw PreconditionError("DP needs t_ac = t_br on every line and all energy pairs");
  const OneStationView view = ViewOf(instance);
  const int n = view.n;
  EqualTimesResult out;
  out.sorted_lines = SortedLines(view);
  std::vector<std::int64_t> t(n), l(n), u(n);
  for (int k = 0; k < n; ++k) {
    const int line = out.sorted_lines[k];
    t[k] = view.accel[line];
    l[k] = view.wait_lower[line];
    u[k] = view.wait_upper[line];
  }

  // opt[i]: best overlap for the first i sorted trains; choice[i]: start of
  // the last block. For a fixed end i the cycle statistics of C_j^i are
  // extended towards smaller j.
  std::vector<std::int64_t> opt(n + 1, 0);
  std::vector<int> choice(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int last = i - 1;
    std::int64_t inner = 0;   // Σ_{k=j}^{last-1} t_k
    std::int64_t waits_l = 0, waits_u = 0;
    std::int64_t tail = 0;    // Σ_{k=j+1}^{last} t_k
    opt[i] = -1;
    for (int j = last; j >= 0; --j) {
      waits_l += l[j];
      waits_u += u[j];
      if (j < last) {
        inner += t[j];
        tail += t[j + 1];
      }
      const std::int64_t low = waits_l + t[j] + inner;
      const std::int64_t high = waits_u + tail + t[last];
      const std::int64_t delta = DistanceToMultiple(low, high, instance.period).distance;
      const std::int64_t value = inner + std::max<std::int64_t>(t[j] - delta, 0) + opt[j];
      if (value >= opt[i]) {
        opt[i] = value;
        choice[i] = j;
      }
    }
  }
  out.optimum = opt[n];

  for (int i = n; i > 0; i = choice[i]) out.blocks.emplace_back(choice[i], i - 1);
  std::reverse(out.blocks.begin(), out.blocks.end());
  std::vector<std::size_t> arcs;
  for (auto [s, e] : out.blocks) {
    for (int k = s + 1; k <= e; ++k) arcs.push_back(*view.energy[out.sorted_lines[k]][out.sorted_lines[k - 1]]);
    arcs.push_back(*view.energy[out.sorted_lines[s]][out.sorted_lines[e]]);
  }
  out.solution = SolveForMatching(instance, MakeMatching(std::move(arcs)));
  return out;
}

bool HasCrossingCycles(const Instance& instance, const Matching& matching) {
  const OneStationView view = ViewOf(instance);
  const std::vector<int> sorted = SortedLines(view);
  std::vector<int> rank(view.n);
  for (int r = 0; r < view.n; ++r) rank[sorted[r]] = r;
  std::vector<int> line_of(instance.events.size());
  for (int k = 0; k < view.n; ++k) line_of[view.arrival[k]] = line_of[view.departure[k]] = k;

  // Rank range per cycle; ties in t are ordered by line index.
  std::vector<std::pair<int, int>> ranges;
  for (const Component& c : Decompose(instance, matching)) {
    if (!c.is_cycle) continue;
    int lo = view.n, hi = -1;
    for (std::size_t e : c.events) {
      lo = std::min(lo, rank[line_of[e]]);
      hi = std::max(hi, rank[line_of[e]]);
    }
    ranges.emplace_back(lo, hi);
  }
  std::sort(ranges.begin(), ranges.end());
  int reach = -1;
  for (auto [lo, hi] : ranges) {
    if (reach >= lo) return true;
    reach = std::max(reach, hi);
  }
  return false;
}

}  // namespace pesp
