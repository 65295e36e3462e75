#include "pesp/brute_force.h"

#include <numeric>

#include "pesp/errors.h"
#include "pesp/evaluate.h"
#include "pesp/periodic.h"

namespace pesp {
namespace {

class Enumerator {
 public:
  explicit Enumerator(const SolveRequest& request) : request_(request), inst_(request.instance) {
    const std::size_t n = inst_.events.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (const Activity& a : inst_.activities) {
      std::size_t x = find(a.tail), y = find(a.head);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    anchor_.resize(n);
    for (std::size_t v = 0; v < n; ++v) anchor_[v] = find(v) == v;

    // Check an activity as soon as its later endpoint gets a time.
    checks_.resize(n);
    for (std::size_t k = 0; k < inst_.activities.size(); ++k) {
      const Activity& a = inst_.activities[k];
      if (a.kind == ActivityKind::kEnergy) continue;
      checks_[std::max(a.tail, a.head)].push_back(k);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (inst_.events[v].kind == EventKind::kDeparture) departures_.push_back(v);
    }
    out_arcs_.resize(n);
    for (std::size_t k = 0; k < inst_.activities.size(); ++k) {
      if (inst_.activities[k].kind == ActivityKind::kEnergy) out_arcs_[inst_.activities[k].tail].push_back(k);
    }
    times_.assign(n, kUnscheduled);
    arrival_used_.assign(n, 0);
  }

  SolveResult Run() {
    Enumerate(0);
    SolveResult result;
    if (!found_) {
      result.status = SolveStatus::kInfeasible;
      return result;
    }
    result.status = SolveStatus::kOptimal;
    result.solution = Evaluate(inst_, MakeMatching(best_matching_), Timetable{best_times_});
    result.bound = ObjectiveValue(*result.solution, request_.objective);
    result.nodes = nodes_;
    return result;
  }

 private:
  void Enumerate(std::size_t v) {
    if (v == times_.size()) {
      Leaf();
      return;
    }
    const int top = anchor_[v] ? 1 : inst_.period;
    for (int t = 0; t < top; ++t) {
      times_[v] = t;
      bool ok = true;
      for (std::size_t k : checks_[v]) {
        const Activity& a = inst_.activities[k];
        if (PeriodicTension(times_[a.tail], times_[a.head], a.lower, inst_.period) > a.upper) {
          ok = false;
          break;
        }
      }
      if (ok) Enumerate(v + 1);
    }
    times_[v] = kUnscheduled;
  }

  // Exhaustive search over matchings: each departure stays unmatched or
  // takes one energy arc to a still free arrival.
  void Matchings(std::size_t i, std::int64_t overlap) {
    ++nodes_;
    if (i == departures_.size()) {
      if (overlap > leaf_best_) {
        leaf_best_ = overlap;
        leaf_matching_ = current_;
      }
      return;
    }
    Matchings(i + 1, overlap);
    for (std::size_t k : out_arcs_[departures_[i]]) {
      const Activity& a = inst_.activities[k];
      if (arrival_used_[a.head]) continue;
      const int x = PeriodicTension(times_[a.tail], times_[a.head], 0, inst_.period);
      const int o = OverlapOfTension(x, EnergyMinTime(inst_, a), EnergyMaxTime(inst_, a));
      if (o == 0) continue;  // never helps
      arrival_used_[a.head] = 1;
      current_.push_back(k);
      Matchings(i + 1, overlap + o);
      current_.pop_back();
      arrival_used_[a.head] = 0;
    }
  }

  void Leaf() {
    Rational travel(0);
    for (const Activity& a : inst_.activities) {
      travel += a.weight * PeriodicTension(times_[a.tail], times_[a.head], a.lower, inst_.period);
    }
    leaf_best_ = -1;
    current_.clear();
    Matchings(0, 0);
    if (request_.objective == Objective::kMaxOverlap) {
      if (!found_ || leaf_best_ > best_overlap_) Take(travel);
      return;
    }
    if (leaf_best_ < request_.overlap_floor) return;
    if (!found_ || travel < best_travel_) Take(travel);
  }

  void Take(const Rational& travel) {
    found_ = true;
    best_overlap_ = leaf_best_;
    best_travel_ = travel;
    best_times_ = times_;
    best_matching_ = leaf_matching_;
  }

  const SolveRequest& request_;
  const Instance& inst_;
  std::vector<char> anchor_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<std::size_t> departures_;
  std::vector<std::vector<std::size_t>> out_arcs_;
  std::vector<int> times_;
  std::vector<char> arrival_used_;
  std::vector<std::size_t> current_, leaf_matching_, best_matching_;
  std::int64_t leaf_best_ = -1;
  bool found_ = false;
  std::int64_t best_overlap_ = 0;
  Rational best_travel_{0};
  std::vector<int> best_times_;
  std::int64_t nodes_ = 0;
};

}  // namespace

SolveResult BruteForce(const SolveRequest& request) {
  const Instance& inst = request.instance;
  if (inst.events.size() > kBruteForceMaxEvents || inst.period > kBruteForceMaxPeriod) {
    throw PreconditionError("brute force is limited to 8 events and period 12");
  }
  if (const auto v = BlockingViolations(inst); !v.empty()) {
    throw PreconditionError("instance is invalid: " + v.front().element + ": " + v.front().rule);
  }
  if (request.overlap_floor < 0) throw PreconditionError("overlap floor must be nonnegative");
  return Enumerator(request).Run();
}

}  // namespace pesp
