#include <algorithm>
#include <numeric>

#include "pesp/assignment.h"
#include "pesp/errors.h"
#include "pesp/one_station.h"

namespace pesp {
namespace {

std::vector<int> SortedBy(const std::vector<int>& times) {
  std::vector<int> order(times.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return times[a] < times[b]; });
  return order;
}

}  // namespace

WeightedMatchingReport GreedyMatching(const Instance& instance) {
  const OneStationView view = ViewOf(instance);
  if (!view.all_energy) throw PreconditionError("greedy matching needs all energy pairs");
  const auto by_ac = SortedBy(view.accel);
  const auto by_br = SortedBy(view.brake);
  std::vector<std::size_t> arcs;
  for (int r = 0; r < view.n; ++r) arcs.push_back(*view.energy[by_ac[r]][by_br[r]]);
  WeightedMatchingReport out{MakeMatching(std::move(arcs)), 0};
  out.weight = MatchingWeight(instance, out.matching);
  return out;
}

WeightedMatchingReport MaxWeightMatching(const Instance& instance) {
  ViewOf(instance);
  const EnergyMatching m = MaxMinTimeMatching(instance);
  return {m.matching, m.weight};
}

Matching ExtendToPerfect(const Instance& instance, const Matching& matching) {
  const OneStationView view = ViewOf(instance);
  if (!view.all_energy) throw PreconditionError("extension needs all energy pairs");
  std::vector<char> dep_used(view.n, 0), arr_used(view.n, 0);
  std::vector<std::size_t> arcs = matching.selected;
  for (std::size_t k : arcs) {
    const Activity& a = instance.activities.at(k);
    if (a.kind != ActivityKind::kEnergy) throw PreconditionError("matching contains a non-energy activity");
    for (int l = 0; l < view.n; ++l) {
      if (view.departure[l] == a.tail) dep_used[l] = 1;
      if (view.arrival[l] == a.head) arr_used[l] = 1;
    }
  }
  int i = 0;
  for (int j = 0; j < view.n; ++j) {
    if (dep_used[j]) continue;
    while (arr_used[i]) ++i;
    arcs.push_back(*view.energy[j][i]);
    arr_used[i] = 1;
  }
  return MakeMatching(std::move(arcs));
}

}  // namespace pesp
