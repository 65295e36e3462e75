#include <algorithm>
#include <limits>
#include <numeric>

#include "pesp/errors.h"
#include "pesp/one_station.h"

namespace pesp {
namespace {

int ArcWeight(const OneStationView& view, int from, int to) { return std::min(view.accel[from], view.brake[to]); }

// Lines on the cycle through `start`.
std::vector<int> CycleOf(const std::vector<int>& next, int start) {
  std::vector<int> cycle{start};
  for (int v = next[start]; v != start; v = next[v]) cycle.push_back(v);
  return cycle;
}

}  // namespace

HamiltonianCycle MakeHamiltonianCycle(const Instance& instance, std::vector<int> next) {
  const OneStationView view = ViewOf(instance);
  if (!view.all_energy) throw PreconditionError("Hamiltonian cycles need all energy pairs");
  if (static_cast<int>(next.size()) != view.n) throw PreconditionError("successor list has wrong length");
  for (int v : next) {
    if (v < 0 || v >= view.n) throw PreconditionError("successor out of range");
  }
  if (static_cast<int>(CycleOf(next, 0).size()) != view.n) throw PreconditionError("successors do not form one cycle");

  HamiltonianCycle out;
  std::vector<std::size_t> arcs;
  out.min_arc_weight = std::numeric_limits<std::int64_t>::max();
  for (int k = 0; k < view.n; ++k) {
    arcs.push_back(*view.energy[k][next[k]]);
    out.min_arc_weight = std::min<std::int64_t>(out.min_arc_weight, ArcWeight(view, k, next[k]));
  }
  out.report.matching = MakeMatching(std::move(arcs));
  out.report.weight = MatchingWeight(instance, out.report.matching);
  out.next = std::move(next);
  return out;
}

HamiltonianCycle MaxWeightHamiltonianCycle(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  if (!view.all_energy) throw PreconditionError("Hamiltonian cycles need all energy pairs");
  const int n = view.n;
  if (n > kMaxExactHamiltonianLines) throw PreconditionError("too many lines for the exact Hamiltonian cycle");
  if (n == 1) return MakeHamiltonianCycle(instance, {0});

  // Paths from line 0 through the lines in `mask` (bit b is line b+1),
  // ending at line v+1.
  const int m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  constexpr std::int32_t kUnset = std::numeric_limits<std::int32_t>::min();
  std::vector<std::int32_t> dp((full + 1) * m, kUnset);
  auto at = [&](std::size_t mask, int v) -> std::int32_t& { return dp[mask * m + v]; };
  for (int v = 0; v < m; ++v) at(std::size_t{1} << v, v) = ArcWeight(view, 0, v + 1);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (int v = 0; v < m; ++v) {
      const std::int32_t cur = at(mask, v);
      if (cur == kUnset) continue;
      for (int u = 0; u < m; ++u) {
        if (mask >> u & 1) continue;
        std::int32_t& slot = at(mask | std::size_t{1} << u, u);
        slot = std::max(slot, cur + ArcWeight(view, v + 1, u + 1));
      }
    }
  }
  int last = 0;
  std::int32_t best = kUnset;
  for (int v = 0; v < m; ++v) {
    const std::int32_t total = at(full, v) + ArcWeight(view, v + 1, 0);
    if (total > best) {
      best = total;
      last = v;
    }
  }
  // Walk back, preferring the smallest predecessor.
  std::vector<int> next(n);
  next[last + 1] = 0;
  std::size_t mask = full;
  int v = last;
  while (mask != (std::size_t{1} << v)) {
    const std::size_t rest = mask ^ (std::size_t{1} << v);
    int pred = -1;
    for (int u = 0; u < m && pred < 0; ++u) {
      if ((rest >> u & 1) && at(rest, u) != kUnset && at(rest, u) + ArcWeight(view, u + 1, v + 1) == at(mask, v)) pred = u;
    }
    next[pred + 1] = v + 1;
    mask = rest;
    v = pred;
  }
  next[0] = v + 1;
  return MakeHamiltonianCycle(instance, std::move(next));
}

MergeTrace MergeHeuristic(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  if (!view.all_energy) throw PreconditionError("merge heuristic needs all energy pairs");
  const int n = view.n;
  std::vector<int> by_ac(n), by_br(n);
  std::iota(by_ac.begin(), by_ac.end(), 0);
  std::iota(by_br.begin(), by_br.end(), 0);
  std::stable_sort(by_ac.begin(), by_ac.end(), [&](int a, int b) { return view.accel[a] < view.accel[b]; });
  std::stable_sort(by_br.begin(), by_br.end(), [&](int a, int b) { return view.brake[a] < view.brake[b]; });
  std::vector<int> position(n);
  for (int p = 0; p < n; ++p) position[by_ac[p]] = p;

  MergeTrace trace;
  for (int p = 0; p < n; ++p) trace.greedy_weight += ArcWeight(view, by_ac[p], by_br[p]);

  // image[p]: arrival line paired with the departure of acceleration rank p.
  std::vector<int> image = by_br;
  auto successors = [&] {
    std::vector<int> next(n);
    for (int p = 0; p < n; ++p) next[by_ac[p]] = image[p];
    return next;
  };
  for (;;) {
    const std::vector<int> next = successors();
    const std::vector<int> cycle = CycleOf(next, by_ac[0]);
    if (static_cast<int>(cycle.size()) == n) break;
    std::vector<char> in_cycle(n, 0);
    for (int line : cycle) in_cycle[position[line]] = 1;
    int p = 0;
    while (!(in_cycle[p] && !in_cycle[p + 1])) ++p;
    std::swap(image[p], image[p + 1]);
    ++trace.swaps;
  }
  trace.cycle = MakeHamiltonianCycle(instance, successors());
  return trace;
}

Solution SolveSingleCycleVariant(const Instance& instance) {
  return SolveForMatching(instance, MaxWeightHamiltonianCycle(instance).report.matching);
}

}  // namespace pesp
