#include "pesp/exact_solver.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pesp/assignment.h"
#include "pesp/errors.h"
#include "pesp/evaluate.h"
#include "pesp/periodic.h"

namespace pesp {
namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

struct EnergyArc {
  std::size_t activity;
  int dep_slot;  // row in the overlap matrix
  int arr_slot;  // column in the overlap matrix
  int t_min;
  std::vector<std::int64_t> overlap;  // overlap per tension 0..T-1
};

struct CostArc {
  std::size_t tail, head;
  int lower;
  std::int64_t weight;  // scaled to integers
};

class ExactSearch {
 public:
  explicit ExactSearch(const SolveRequest& request)
      : request_(request), instance_(request.instance), period_(instance_.period),
        num_events_(instance_.events.size()) {
    Prepare();
  }

  SolveResult Run();

 private:
  void Prepare();
  void Search(std::size_t depth);
  bool Assign(std::size_t event, int time);
  void Undo(std::size_t mark);
  std::int64_t TravelLowerBound() const;
  std::int64_t OverlapUpperBound(std::int64_t must_exceed);
  std::int64_t RealizedOverlap(std::vector<int>* row_to_col);
  void OfferLeaf();
  bool LimitHit();

  const SolveRequest& request_;
  const Instance& instance_;
  const int period_;
  const std::size_t num_events_;

  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> hard_arcs_;  // per event
  std::vector<CostArc> cost_arcs_;
  std::int64_t scale_ = 1;
  std::vector<EnergyArc> energy_;
  int slots_ = 0;

  std::vector<std::vector<char>> domain_;
  std::vector<int> domain_size_;
  std::vector<int> time_;
  std::vector<std::pair<std::size_t, int>> trail_;

  AssignmentSolver assignment_{0};
  std::vector<std::int64_t> matrix_;
  std::vector<int> row_to_col_;

  std::int64_t incumbent_ = 0;
  std::vector<int> best_times_;
  std::int64_t root_bound_ = 0;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  std::chrono::steady_clock::time_point start_;
};

void ExactSearch::Prepare() {
  // Integer weights: scale every weight by the lcm of all denominators.
  for (const Activity& a : instance_.activities) scale_ = std::lcm(scale_, a.weight.denominator());

  std::vector<std::int64_t> incident(num_events_, 0);
  hard_arcs_.assign(num_events_, {});
  std::vector<int> dep_slot(num_events_, -1), arr_slot(num_events_, -1);
  int deps = 0, arrs = 0;
  for (std::size_t v = 0; v < num_events_; ++v) {
    if (instance_.events[v].kind == EventKind::kDeparture) {
      dep_slot[v] = deps++;
    } else {
      arr_slot[v] = arrs++;
    }
  }
  slots_ = std::max(deps, arrs);

  for (std::size_t k = 0; k < instance_.activities.size(); ++k) {
    const Activity& a = instance_.activities[k];
    const std::int64_t w = (a.weight * scale_).numerator();
    incident[a.tail] += w;
    incident[a.head] += w;
    if (w > 0) cost_arcs_.push_back({a.tail, a.head, a.lower, w});
    if (IsConstraining(instance_, a)) {
      hard_arcs_[a.tail].push_back(k);
      if (a.head != a.tail) hard_arcs_[a.head].push_back(k);
    }
    if (a.kind == ActivityKind::kEnergy) {
      EnergyArc e{k, dep_slot[a.tail], arr_slot[a.head], EnergyMinTime(instance_, a), {}};
      const int t_max = EnergyMaxTime(instance_, a);
      e.overlap.resize(period_);
      for (int x = 0; x < period_; ++x) e.overlap[x] = OverlapOfTension(x, e.t_min, t_max);
      energy_.push_back(std::move(e));
    }
  }

  order_.resize(num_events_);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return incident[a] > incident[b]; });

  // Components over all activities; the first event of each in branching
  // order is the anchor and only takes time 0.
  std::vector<std::size_t> parent(num_events_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Activity& a : instance_.activities) parent[find(a.tail)] = find(a.head);

  domain_.assign(num_events_, std::vector<char>(period_, 1));
  domain_size_.assign(num_events_, period_);
  std::vector<char> anchored(num_events_, 0);
  for (std::size_t v : order_) {
    const std::size_t root = find(v);
    if (anchored[root]) continue;
    anchored[root] = 1;
    std::fill(domain_[v].begin(), domain_[v].end(), 0);
    domain_[v][0] = 1;
    domain_size_[v] = 1;
  }
  time_.assign(num_events_, kUnscheduled);

  assignment_ = AssignmentSolver(slots_);
  matrix_.assign(static_cast<std::size_t>(slots_) * slots_, 0);
}

bool ExactSearch::LimitHit() {
  if (request_.node_limit && nodes_ >= *request_.node_limit) return true;
  if (request_.time_limit && (nodes_ & 1023) == 0) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed >= *request_.time_limit) return true;
  }
  return false;
}

bool ExactSearch::Assign(std::size_t event, int time) {
  time_[event] = time;
  for (std::size_t k : hard_arcs_[event]) {
    const Activity& a = instance_.activities[k];
    if (a.tail == a.head) {
      if (PeriodicTension(time, time, a.lower, period_) > a.upper) return false;
      continue;
    }
    const bool is_tail = a.tail == event;
    const std::size_t other = is_tail ? a.head : a.tail;
    if (time_[other] != kUnscheduled) continue;
    std::vector<char>& dom = domain_[other];
    for (int s = 0; s < period_; ++s) {
      if (!dom[s]) continue;
      const int x = is_tail ? PeriodicTension(time, s, a.lower, period_) : PeriodicTension(s, time, a.lower, period_);
      if (x > a.upper) {
        dom[s] = 0;
        --domain_size_[other];
        trail_.emplace_back(other, s);
      }
    }
    if (domain_size_[other] == 0) return false;
  }
  return true;
}

void ExactSearch::Undo(std::size_t mark) {
  while (trail_.size() > mark) {
    auto [event, value] = trail_.back();
    trail_.pop_back();
    domain_[event][value] = 1;
    ++domain_size_[event];
  }
}

std::int64_t ExactSearch::TravelLowerBound() const {
  std::int64_t total = 0;
  for (const CostArc& c : cost_arcs_) {
    const int t_tail = time_[c.tail];
    const int t_head = time_[c.head];
    int best;
    if (t_tail != kUnscheduled && t_head != kUnscheduled) {
      best = PeriodicTension(t_tail, t_head, c.lower, period_);
    } else if (t_tail != kUnscheduled || t_head != kUnscheduled) {
      best = std::numeric_limits<int>::max();
      const std::vector<char>& dom = domain_[t_tail == kUnscheduled ? c.tail : c.head];
      for (int s = 0; s < period_ && best > c.lower; ++s) {
        if (!dom[s]) continue;
        const int x = t_tail == kUnscheduled ? PeriodicTension(s, t_head, c.lower, period_)
                                             : PeriodicTension(t_tail, s, c.lower, period_);
        best = std::min(best, x);
      }
    } else {
      best = c.lower;
    }
    total += c.weight * best;
  }
  return total;
}

// Upper bound on the overlap of any completion. Returns early with a cheap
// bound when that bound is already <= must_exceed.
std::int64_t ExactSearch::OverlapUpperBound(std::int64_t must_exceed) {
  std::fill(matrix_.begin(), matrix_.end(), 0);
  for (const EnergyArc& e : energy_) {
    const Activity& a = instance_.activities[e.activity];
    const int t_dep = time_[a.tail];
    const int t_arr = time_[a.head];
    std::int64_t best;
    if (t_dep != kUnscheduled && t_arr != kUnscheduled) {
      best = e.overlap[FloorMod(t_arr - t_dep, period_)];
    } else if (t_dep != kUnscheduled || t_arr != kUnscheduled) {
      best = 0;
      const std::vector<char>& dom = domain_[t_dep == kUnscheduled ? a.tail : a.head];
      for (int s = 0; s < period_ && best < e.t_min; ++s) {
        if (!dom[s]) continue;
        const int x = static_cast<int>(t_dep == kUnscheduled ? FloorMod(t_arr - s, period_) : FloorMod(s - t_dep, period_));
        best = std::max(best, e.overlap[x]);
      }
    } else {
      best = e.t_min;
    }
    std::int64_t& cell = matrix_[static_cast<std::size_t>(e.dep_slot) * slots_ + e.arr_slot];
    cell = std::max(cell, best);
  }
  std::int64_t rows = 0, cols = 0;
  for (int r = 0; r < slots_; ++r) {
    rows += *std::max_element(matrix_.begin() + r * slots_, matrix_.begin() + (r + 1) * slots_);
  }
  for (int c = 0; c < slots_; ++c) {
    std::int64_t m = 0;
    for (int r = 0; r < slots_; ++r) m = std::max(m, matrix_[static_cast<std::size_t>(r) * slots_ + c]);
    cols += m;
  }
  const std::int64_t cheap = std::min(rows, cols);
  if (cheap <= must_exceed) return cheap;
  return assignment_.Solve(matrix_, row_to_col_);
}

std::int64_t ExactSearch::RealizedOverlap(std::vector<int>* row_to_col) {
  std::fill(matrix_.begin(), matrix_.end(), 0);
  for (const EnergyArc& e : energy_) {
    const Activity& a = instance_.activities[e.activity];
    std::int64_t& cell = matrix_[static_cast<std::size_t>(e.dep_slot) * slots_ + e.arr_slot];
    cell = std::max(cell, e.overlap[FloorMod(time_[a.head] - time_[a.tail], period_)]);
  }
  std::vector<int> scratch;
  return assignment_.Solve(matrix_, row_to_col ? *row_to_col : scratch);
}

void ExactSearch::OfferLeaf() {
  if (request_.objective == Objective::kMaxOverlap) {
    const std::int64_t overlap = RealizedOverlap(nullptr);
    if (overlap > incumbent_) {
      incumbent_ = overlap;
      best_times_ = time_;
      if (incumbent_ >= root_bound_) done_ = true;
    }
    return;
  }
  const std::int64_t travel = TravelLowerBound();
  if (travel >= incumbent_) return;
  if (request_.overlap_floor > 0 && RealizedOverlap(nullptr) < request_.overlap_floor) return;
  incumbent_ = travel;
  best_times_ = time_;
  if (incumbent_ <= root_bound_) done_ = true;
}

void ExactSearch::Search(std::size_t depth) {
  if (depth == num_events_) {
    OfferLeaf();
    return;
  }
  const std::size_t v = order_[depth];
  for (int t = 0; t < period_ && !done_ && !aborted_; ++t) {
    if (!domain_[v][t]) continue;
    ++nodes_;
    if (LimitHit()) {
      aborted_ = true;
      return;
    }
    const std::size_t mark = trail_.size();
    if (Assign(v, t)) {
      bool prune;
      if (request_.objective == Objective::kMaxOverlap) {
        prune = OverlapUpperBound(incumbent_) <= incumbent_;
      } else {
        prune = TravelLowerBound() >= incumbent_ ||
                (request_.overlap_floor > 0 && OverlapUpperBound(request_.overlap_floor - 1) < request_.overlap_floor);
      }
      if (!prune) Search(depth + 1);
    }
    time_[v] = kUnscheduled;
    Undo(mark);
  }
}

SolveResult ExactSearch::Run() {
  start_ = std::chrono::steady_clock::now();
  SolveResult result;
  const bool maximize = request_.objective == Objective::kMaxOverlap;
  incumbent_ = maximize ? -1 : kInfinity;
  root_bound_ = maximize ? OverlapUpperBound(-1) : TravelLowerBound();

  if (!maximize && request_.overlap_floor > MaxMinTimeMatching(instance_).weight) {
    result.status = SolveStatus::kInfeasible;
    return result;
  }
  Search(0);

  result.nodes = nodes_;
  if (!best_times_.empty()) {
    time_ = best_times_;
    std::vector<int> row_to_col;
    RealizedOverlap(&row_to_col);
    std::vector<std::size_t> chosen;
    for (const EnergyArc& e : energy_) {
      const Activity& a = instance_.activities[e.activity];
      if (row_to_col[e.dep_slot] != e.arr_slot) continue;
      if (e.overlap[FloorMod(time_[a.head] - time_[a.tail], period_)] == 0) continue;
      // Parallel arcs share a cell; keep the first one with the cell's value.
      bool taken = false;
      for (std::size_t c : chosen) {
        const Activity& o = instance_.activities[c];
        taken |= o.tail == a.tail || o.head == a.head;
      }
      if (!taken) chosen.push_back(e.activity);
    }
    result.solution = Evaluate(instance_, MakeMatching(std::move(chosen)), Timetable{best_times_});
  }
  if (aborted_) {
    result.status = SolveStatus::kLimitReached;
    result.bound = maximize ? Rational(root_bound_) : Rational(root_bound_, scale_);
  } else if (result.solution) {
    result.status = SolveStatus::kOptimal;
    result.bound = ObjectiveValue(*result.solution, request_.objective);
  } else {
    result.status = SolveStatus::kInfeasible;
  }
  return result;
}

}  // namespace

Rational ObjectiveValue(const Solution& solution, Objective objective) {
  return objective == Objective::kMinTravel ? solution.travel_time : Rational(solution.total_overlap);
}

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kLimitReached: return "limit_reached";
  }
  return "unknown";
}

std::string_view ToString(Objective objective) {
  return objective == Objective::kMinTravel ? "min-travel" : "max-overlap";
}

SolveResult SolveExact(const SolveRequest& request) {
  if (const auto violations = BlockingViolations(request.instance); !violations.empty()) {
    throw PreconditionError("instance is invalid: " + violations.front().element + ": " + violations.front().rule);
  }
  if (request.overlap_floor < 0) throw PreconditionError("overlap floor must be nonnegative");
  ExactSearch search(request);
  return search.Run();
}

}  // namespace pesp
