#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pesp/model.h"
#include "pesp/rational.h"

namespace pesp {

struct TransferSpec {
  int from_line = 0;  // arrival of this line ...
  int to_line = 0;    // ... to the departure of this one
  int lower = 0;
  Rational weight{0};
};

struct OneStationSpec {
  int n = 0;
  std::vector<int> accel_times;
  std::vector<int> brake_times;
  std::vector<std::pair<int, int>> wait_bounds;
  // Passenger weight per wait; empty means 0 everywhere.
  std::vector<Rational> wait_weights;
  // nullopt: energy-only network without transfer activities.
  std::optional<std::vector<TransferSpec>> transfers;
  // (departure line, arrival line) pairs; nullopt means all n^2 pairs.
  std::optional<std::vector<std::pair<int, int>>> energy_arcs;
  // Defaults to L1..Ln.
  std::vector<std::string> line_names;
  std::string station = "S";
  // Accept energy pairs with t^ac + t^br >= T (each time still below T).
  bool allow_wide_windows = false;
};

// Events "<line>_arr", "<line>_dep"; activities "w_<line>",
// "t_<from>_<to>", "e_<dep>_<arr>". Throws PreconditionError on a
// malformed spec.
Instance BuildOneStation(const OneStationSpec& spec, int period);

// Line-indexed view of a one-station instance. Lines are numbered in
// order of first appearance of their events.
struct OneStationView {
  int n = 0;
  std::vector<std::string> lines;
  std::vector<std::size_t> arrival, departure, wait;
  std::vector<int> accel, brake;
  std::vector<int> wait_lower, wait_upper;
  // energy[j][i]: energy activity from departure j to arrival i, if any.
  std::vector<std::vector<std::optional<std::size_t>>> energy;
  bool all_energy = false;
};

// Throws PreconditionError unless the instance is a valid one-station
// network: one station, one arrival, one departure and one wait per line,
// every other activity a transfer or energy activity.
OneStationView ViewOf(const Instance& instance);
bool IsOneStation(const Instance& instance);

struct WeightedMatchingReport {
  Matching matching;
  std::int64_t weight = 0;  // Σ t^min over the matching
};

// Σ t^min over a matching.
std::int64_t MatchingWeight(const Instance& instance, const Matching& matching);

// Rank-for-rank pairing of sorted acceleration and braking times (ties by
// line index). Requires all energy pairs.
WeightedMatchingReport GreedyMatching(const Instance& instance);

// Exact maximum-weight matching on the energy activities w.r.t. t^min.
WeightedMatchingReport MaxWeightMatching(const Instance& instance);

// Pairs unmatched departures with unmatched arrivals in line order.
// Requires all energy pairs.
Matching ExtendToPerfect(const Instance& instance, const Matching& matching);

// Solution for a fixed matching with the optimal cycle timetables.
Solution SolveForMatching(const Instance& instance, const Matching& matching);

// A Hamiltonian cycle through all waits: departure of line k feeds the
// arrival of line next[k].
struct HamiltonianCycle {
  std::vector<int> next;
  WeightedMatchingReport report;
  std::int64_t min_arc_weight = 0;

  // Weight of the Hamiltonian path left after dropping the lightest arc.
  std::int64_t PathWeight() const { return report.weight - min_arc_weight; }
};

HamiltonianCycle MakeHamiltonianCycle(const Instance& instance, std::vector<int> next);

inline constexpr int kMaxExactHamiltonianLines = 20;

// Maximum-weight Hamiltonian cycle on the contracted line graph with
// w(k, l) = min{t^ac_k, t^br_l}, by dynamic programming over subsets.
// Requires all energy pairs and n <= 20.
HamiltonianCycle MaxWeightHamiltonianCycle(const Instance& instance);

// Starts from the greedy matching and merges its cycles by adjacent swaps
// in acceleration order until one Hamiltonian cycle remains.
struct MergeTrace {
  HamiltonianCycle cycle;
  std::int64_t greedy_weight = 0;
  int swaps = 0;
};
MergeTrace MergeHeuristic(const Instance& instance);

// Best solution whose matching closes all waits into one cycle.
Solution SolveSingleCycleVariant(const Instance& instance);

// u^max = max wait upper + max(t^min + t^max) over energy activities.
std::int64_t LargePeriodThreshold(const Instance& instance);

bool HasFreeWaits(const Instance& instance);
bool HasUniformTimes(const Instance& instance);
bool HasEqualTimes(const Instance& instance);
bool HasLargePeriod(const Instance& instance);

Solution SolveFreeWaiting(const Instance& instance);
Solution SolveUniformTimes(const Instance& instance);
Solution SolveLargePeriod(const Instance& instance);

// Overlap of the contiguous cycle over sorted trains s..l (0-based,
// inclusive). t must be ascending; waits are aligned with t.
std::int64_t ContiguousCycleOverlap(std::span<const int> t, std::span<const std::pair<int, int>> waits, int s, int l,
                                    int period);

struct EqualTimesResult {
  Solution solution;
  // Lines sorted ascending by t (ties by line index).
  std::vector<int> sorted_lines;
  // Inclusive ranges of sorted positions, one per cycle.
  std::vector<std::pair<int, int>> blocks;
  std::int64_t optimum = 0;
};

EqualTimesResult SolveEqualTimesDP(const Instance& instance);

// True if two cycles of matching ∪ waits have interleaving [min t, max t]
// ranges, t being the common acceleration/braking time.
bool HasCrossingCycles(const Instance& instance, const Matching& matching);

struct DispatchResult {
  Solution solution;
  std::string method;
  bool optimal = false;
  std::int64_t lower_bound = 0;
  std::int64_t upper_bound = 0;
};

inline constexpr std::size_t kDispatchMaxExactEvents = 12;
inline constexpr int kDispatchMaxExactPeriod = 60;

// Maximum overlap on a one-station network: special cases first, then the
// exact solver within its guard, then the merge heuristic with bounds.
DispatchResult Dispatch(const Instance& instance);

}  // namespace pesp
